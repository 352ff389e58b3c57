#include <omp.h>

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "dybrace/dbrace.hpp"

namespace dybrace {

namespace {

// x^{-1} S for x = (a, f(a)) ∈ S: the element (b, g) lands at f^{-1}(b - a)
// with automorphism f^{-1} g.
SectionCode translate_code(const Holomorph& hol, const std::vector<AutId>& auts, Elem a,
                           std::vector<AutId>& scratch) {
  const auto& g = hol.group();
  const AutId fi = hol.inverse(auts[a]);
  for (Elem b = 0; b < auts.size(); ++b)
    scratch[hol.apply(fi, g.sub(b, a))] = hol.compose(fi, auts[b]);
  return encode_section(hol, scratch);
}

std::vector<SectionCode> closure_codes(const Holomorph& hol, SectionCode seed) {
  std::unordered_set<SectionCode> seen{seed};
  std::vector<SectionCode> members{seed};
  std::vector<AutId> scratch(hol.order());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto auts = decode_section(hol, members[i]).auts;
    for (Elem a = 0; a < auts.size(); ++a) {
      const auto t = translate_code(hol, auts, a, scratch);
      if (seen.insert(t).second) members.push_back(t);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::uint64_t section_space(const Holomorph& hol, std::uint64_t bound) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < hol.order(); ++i) {
    if (__builtin_mul_overflow(total, hol.aut_count(), &total) || total > bound)
      throw BoundExceeded("|Aut(A)|^|A| exceeds the section search bound");
  }
  return total;
}

std::vector<std::vector<SectionCode>> minimal_closures(const Holomorph& hol, std::uint64_t total) {
  // Seeds containing the identity share their closure with every member of
  // it, so only the smallest member reports; other seeds always report.
  const auto zero_stride = total / hol.aut_count();
  std::vector<std::vector<SectionCode>> found;
#pragma omp parallel
  {
    std::vector<std::vector<SectionCode>> local;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(total); ++s) {
      const auto seed = static_cast<SectionCode>(s);
      auto c = closure_codes(hol, seed);
      const bool zero_seed = seed < zero_stride;
      if (!zero_seed || c.front() == seed) local.push_back(std::move(c));
    }
#pragma omp critical(dybrace_enumerate_merge)
    for (auto& c : local) found.push_back(std::move(c));
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<std::vector<SectionCode>> union_closure(const std::vector<std::vector<SectionCode>>& base,
                                                    std::uint64_t cap) {
  std::set<std::vector<SectionCode>> all(base.begin(), base.end());
  std::deque<std::vector<SectionCode>> frontier(base.begin(), base.end());
  while (!frontier.empty()) {
    const auto x = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& m : base) {
      std::vector<SectionCode> u;
      std::set_union(x.begin(), x.end(), m.begin(), m.end(), std::back_inserter(u));
      if (u.size() == x.size()) continue;
      if (all.insert(u).second) {
        if (all.size() > cap) throw BoundExceeded("number of closed families exceeds the bound");
        frontier.push_back(std::move(u));
      }
    }
  }
  return {all.begin(), all.end()};
}

}  // namespace

std::vector<std::vector<SectionCode>> enumerate_family_codes(const Holomorph& hol,
                                                             const EnumerationOptions& opt) {
  const auto total = section_space(hol, opt.max_sections);
  auto families = minimal_closures(hol, total);
  if (opt.mode == EnumerationMode::all) families = union_closure(families, opt.max_families);

  if (opt.dedupe_iso) {
    std::set<std::vector<SectionCode>> classes;
    std::vector<std::vector<SectionCode>> kept;
    for (auto& f : families)
      if (classes.insert(canonical_iso_codes(hol, f)).second) kept.push_back(std::move(f));
    families = std::move(kept);
  }
  return families;
}

std::vector<DBraceFamily> enumerate_families(std::shared_ptr<const Holomorph> hol,
                                             const EnumerationOptions& opt) {
  std::vector<DBraceFamily> out;
  for (const auto& codes : enumerate_family_codes(*hol, opt))
    out.push_back(family_from_codes(hol, codes));
  return out;
}

}  // namespace dybrace
