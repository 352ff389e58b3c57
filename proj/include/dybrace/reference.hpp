#pragma once

// Straightforward serial versions of the parallel kernels, kept as test
// oracles and as the baseline in the benchmarks.

#include <cstdint>
#include <vector>

#include "dybrace/dbrace.hpp"
#include "dybrace/dyb.hpp"

namespace dybrace::reference {

/// Closure of every section through close_family, deduplicated with a std::set.
std::vector<std::vector<SectionCode>> minimal_family_codes(const Holomorph& hol,
                                                           std::uint64_t max_sections = 1'000'000);

/// Number of (λ,a,b,c) where the braid-type equation fails, evaluated by
/// composing the three-factor operators literally.
std::uint64_t dyb_failures(const DybMap& m);

/// Number of (λ,a,b,c) violating one of the d-brace axioms.
std::uint64_t dbrace_axiom_failures(const DBrace& d);

}  // namespace dybrace::reference
