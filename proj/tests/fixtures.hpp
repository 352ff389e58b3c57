#pragma once

// Worked examples on Z_3 and Z_2 x Z_2, written as automorphism image tables
// and multiplication tables so that they do not depend on automorphism ids.
// Elements of Z_2 x Z_2 are indexed (0,0)=0, (0,1)=1, (1,0)=2, (1,1)=3.

#include <algorithm>
#include <memory>
#include <set>
#include <vector>

#include "dybrace/brace.hpp"
#include "dybrace/dbrace.hpp"
#include "dybrace/group.hpp"

namespace fx {

using dybrace::Elem;
using Images = std::vector<Elem>;
using Table = std::vector<std::vector<Elem>>;

namespace z3 {
inline const Images id{0, 1, 2};
inline const Images tau{0, 2, 1};

// S1..S6, one automorphism per translation component 0,1,2
inline const std::vector<std::vector<Images>> sections{
    {id, tau, tau}, {id, id, tau}, {id, tau, id}, {tau, id, id}, {tau, tau, id}, {tau, id, tau}};

inline const std::vector<Table> tables{
    {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}},  // S1
    {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}},  // S2
    {{0, 0, 0}, {0, 1, 0}, {0, 2, 0}},  // S3
    {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}},  // S4
    {{0, 0, 0}, {1, 1, 0}, {2, 2, 0}},  // S5
    {{0, 0, 0}, {1, 0, 1}, {2, 0, 2}},  // S6
};
}  // namespace z3

namespace v4 {
inline const Images id{0, 1, 2, 3};
inline const Images tau{0, 1, 3, 2};        // (0,1)->(0,1), (1,0)->(1,1), (1,1)->(1,0)
inline const Images pi{0, 2, 1, 3};         // swaps (0,1) and (1,0)
inline const Images sigma{0, 2, 3, 1};      // (0,1)->(1,0)->(1,1)->(0,1)
inline const Images tau_sigma{0, 3, 2, 1};  // τ∘σ
inline const Images sigma_inv{0, 3, 1, 2};

inline const std::vector<Images> lambda1{id, tau, tau, id};
inline const std::vector<Images> lambda2{id, tau, id, tau};
inline const std::vector<Images> lambda3{id, pi, pi, id};
inline const std::vector<std::vector<Images>> mu{{id, tau, sigma, id},
                                                 {id, tau, tau_sigma, tau},
                                                 {id, sigma_inv, tau_sigma, sigma_inv},
                                                 {id, sigma, tau, id}};

inline const Table lambda1_table{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 0}};
inline const Table lambda2_table{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 0, 1}};
inline const Table lambda3_table{{0, 0, 0, 0}, {0, 3, 3, 0}, {0, 3, 3, 0}, {0, 0, 0, 0}};
// As printed. The ·_μ4 entry at row (1,1), column (1,0) reads (1,0); the
// section gives τ(1,1) - (1,1) = (0,1), and the printed value is not right
// distributive, so that single cell is a misprint (see kMu4Misprint).
inline const std::vector<Table> mu_tables{
    {{0, 0, 0, 0}, {0, 0, 3, 0}, {0, 1, 1, 0}, {0, 1, 2, 0}},
    {{0, 0, 0, 0}, {0, 0, 2, 0}, {0, 1, 0, 1}, {0, 1, 2, 1}},
    {{0, 0, 0, 0}, {0, 2, 2, 2}, {0, 3, 0, 3}, {0, 1, 2, 1}},
    {{0, 0, 0, 0}, {0, 3, 0, 0}, {0, 1, 1, 0}, {0, 2, 2, 0}},
};

struct Cell {
  std::size_t table, a, b;
  Elem printed, derived;
};
inline constexpr Cell kMu4Misprint{3, 3, 2, 2, 1};

/// The printed μ tables with the misprinted cell replaced by the derived value.
inline std::vector<Table> mu_tables_corrected() {
  auto t = mu_tables;
  t[kMu4Misprint.table][kMu4Misprint.a][kMu4Misprint.b] = kMu4Misprint.derived;
  return t;
}
}  // namespace v4

inline std::shared_ptr<const dybrace::Holomorph> holomorph(std::vector<std::uint32_t> orders) {
  return std::make_shared<const dybrace::Holomorph>(dybrace::make_group(std::move(orders)));
}

inline dybrace::Section section(const dybrace::Holomorph& hol, const std::vector<Images>& columns) {
  dybrace::Section s;
  for (const auto& images : columns) s.auts.push_back(hol.find(images).value());
  return s;
}

/// a·b = f(b)(a) - a straight from the image tables.
inline Table table_of(const dybrace::FiniteAbelianGroup& g, const std::vector<Images>& columns) {
  const auto n = g.size();
  Table t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a][b] = g.sub(columns[b][a], a);
  return t;
}

inline Table table_of(const dybrace::DBrace& d, std::uint32_t lam) {
  Table t(d.n(), std::vector<Elem>(d.n()));
  for (Elem a = 0; a < d.n(); ++a)
    for (Elem b = 0; b < d.n(); ++b) t[a][b] = d.mul(lam, a, b);
  return t;
}

inline dybrace::Brace brace_of(const dybrace::FiniteAbelianGroup& g, const Table& t) {
  dybrace::Brace b{g, {}};
  for (const auto& row : t) b.mult.insert(b.mult.end(), row.begin(), row.end());
  return b;
}

inline std::uint32_t index_of(const dybrace::DBraceFamily& fam, const dybrace::Section& s) {
  for (std::uint32_t i = 0; i < fam.params(); ++i)
    if (fam.sections[i] == s) return i;
  return ~0u;
}

// Regular subgroups by brute force over all |A|-subsets of the holomorph,
// with the product computed from image tables.
inline std::set<std::vector<dybrace::HolElement>> brute_regular_subgroups(const dybrace::Holomorph& hol) {
  const auto& g = hol.group();
  const auto n = hol.order();
  std::vector<dybrace::HolElement> all;
  for (Elem a = 0; a < n; ++a)
    for (dybrace::AutId f = 0; f < hol.aut_count(); ++f) all.push_back({a, f});
  auto product = [&](dybrace::HolElement x, dybrace::HolElement y) {
    const auto& fa = hol.aut(x.aut).images;
    const auto& fy = hol.aut(y.aut).images;
    std::vector<Elem> comp(n);
    for (Elem c = 0; c < n; ++c) comp[c] = fa[fy[c]];
    return dybrace::HolElement{g.add(x.trans, fa[y.trans]), *hol.find(comp)};
  };

  std::set<std::vector<dybrace::HolElement>> out;
  std::vector<bool> pick(all.size());
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
  do {
    std::vector<dybrace::HolElement> s;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (pick[i]) s.push_back(all[i]);
    std::set<Elem> trans;
    for (const auto& x : s) trans.insert(x.trans);
    if (trans.size() != n) continue;
    std::set<dybrace::HolElement> members(s.begin(), s.end());
    bool closed = members.contains({0, dybrace::Holomorph::identity()});
    for (const auto& x : s)
      for (const auto& y : s) closed = closed && members.contains(product(x, y));
    if (closed) out.insert(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace fx
