#pragma once

// Braces (A,+,·) and regular subgroups of the holomorph.
//
// A regular subgroup S = {(a, f(a))} corresponds to the brace a·b = f(b)(a) - a,
// and the brace's adjoint group a*b = a·b + a + b acts on A through S.

#include <cstdint>
#include <vector>

#include "dybrace/dyb.hpp"
#include "dybrace/group.hpp"
#include "dybrace/report.hpp"

namespace dybrace {

struct Brace {
  FiniteAbelianGroup group;
  std::vector<Elem> mult;  // [a][b] = a·b

  Elem mul(Elem a, Elem b) const { return mult[a * group.size() + b]; }
  Elem star(Elem a, Elem b) const { return group.add(group.add(mul(a, b), a), b); }
  /// γ(b)(a) = a·b + a
  Elem gamma(Elem b, Elem a) const { return group.add(mul(a, b), a); }
};

Brace trivial_brace(const FiniteAbelianGroup& g);

/// Axioms (right distributivity, compatibility, bijective γ) plus the derived
/// zero laws. Throws std::invalid_argument when the table has the wrong size.
/// Checks: right_distributive, compatibility, gamma_bijective, zero_left, zero_right.
Report check_brace(const Brace& b, const CheckOptions& opt = {});

struct StarGroup {
  std::vector<Elem> table;  // [a][b] = a*b
  std::vector<Elem> inverse;
  Report checks;            // associative, unit, inverses
};

/// Throws VerificationError if the brace axioms fail.
StarGroup star_group(const Brace& b);

/// R(a,b) = (γ(γ(a)(b))^{-1}(a), γ(a)(b)) as a map with |H| = 1.
DybMap rump_yb(const Brace& b);

struct RegularSubgroup {
  std::vector<HolElement> elements;  // sorted by translation component
  auto operator<=>(const RegularSubgroup&) const = default;
};

struct RegularSubgroupEntry {
  RegularSubgroup subgroup;
  Brace brace;
  std::size_t iso_class = 0;  // index of the brace-isomorphism class
};

/// a·b = f(b)(a) - a for the element (b, f(b)) of S.
Brace brace_from_subgroup(const Holomorph& hol, const RegularSubgroup& s);
/// {(a, γ(a))}; throws VerificationError when some γ(a) is not an automorphism.
RegularSubgroup subgroup_from_brace(const Holomorph& hol, const Brace& b);

bool is_regular_subgroup(const Holomorph& hol, const std::vector<HolElement>& elems);

/// All regular subgroups in lexicographic order of their automorphism
/// columns, with their braces and Aut(A)-isomorphism classes.
std::vector<RegularSubgroupEntry> enumerate_regular_subgroups(const Holomorph& hol);

/// Smallest multiplication table in the Aut(A)-orbit a·b ↦ F(F^{-1}a · F^{-1}b).
std::vector<Elem> canonical_brace_table(const Holomorph& hol, const Brace& b);

}  // namespace dybrace
