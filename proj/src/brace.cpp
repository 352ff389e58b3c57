#include "dybrace/brace.hpp"

#include <algorithm>
#include <deque>

#include "dybrace/dbrace.hpp"
#include "sweep.hpp"

namespace dybrace {

using detail::Index;

Brace trivial_brace(const FiniteAbelianGroup& g) {
  return Brace{g, std::vector<Elem>(g.size() * g.size(), g.zero())};
}

Report check_brace(const Brace& br, const CheckOptions& opt) {
  const auto& g = br.group;
  const auto n = static_cast<std::uint32_t>(g.size());
  if (br.mult.size() != std::size_t{n} * n)
    throw std::invalid_argument("brace table must be |A|×|A|");
  for (auto v : br.mult)
    if (v >= n) throw std::invalid_argument("brace table entry outside A");

  const auto rows = detail::all_rows(n);
  const auto cap = opt.max_witnesses;
  Report r;

  auto triple = detail::named({"right_distributive", "compatibility"});
  detail::sweep<2>(rows, n, triple, cap, [&](const Index<2>& i) -> unsigned {
    const Elem a = i[0], b = i[1], c = i[2];
    const bool dist = br.mul(g.add(a, b), c) == g.add(br.mul(a, c), br.mul(b, c));
    const Elem lhs = br.mul(a, g.add(g.add(br.mul(b, c), b), c));
    const Elem ab = br.mul(a, b);
    const Elem rhs = g.add(g.add(br.mul(ab, c), ab), br.mul(a, c));
    return (dist ? 0u : 1u) | (lhs == rhs ? 0u : 2u);
  });

  auto single = detail::named({"gamma_bijective", "zero_left", "zero_right"});
  detail::sweep<0>(rows, n, single, cap, [&](const Index<0>& i) -> unsigned {
    const Elem b = i[0];
    std::vector<bool> seen(n);
    bool bij = true;
    for (Elem a = 0; a < n; ++a) {
      const Elem y = br.gamma(b, a);
      if (seen[y]) bij = false;
      seen[y] = true;
    }
    return (bij ? 0u : 1u) | (br.mul(0, b) == 0 ? 0u : 2u) | (br.mul(b, 0) == 0 ? 0u : 4u);
  });

  for (auto& c : triple) r.add(std::move(c));
  for (auto& c : single) r.add(std::move(c));
  return r;
}

StarGroup star_group(const Brace& br) {
  const auto axioms = check_brace(br, first_witness_only());
  for (const auto& c : axioms.checks)
    if (!c.passed) throw VerificationError("not a brace: " + c.name + " fails", c.witnesses.front());

  const auto& g = br.group;
  const auto n = static_cast<std::uint32_t>(g.size());
  StarGroup s;
  s.table.resize(std::size_t{n} * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) s.table[a * n + b] = br.star(a, b);

  auto checks = detail::named({"associative"});
  detail::sweep<2>(detail::all_rows(n), n, checks, 16, [&](const Index<2>& i) -> unsigned {
    const auto& t = s.table;
    const Elem a = i[0], b = i[1], c = i[2];
    return t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]] ? 0u : 1u;
  });
  CheckResult unit("unit");
  CheckResult inverses("inverses");
  s.inverse.assign(n, n);
  for (Elem a = 0; a < n; ++a) {
    ++unit.evaluated;
    if (s.table[a] != a || s.table[a * n] != a) unit.fail(Witness{{a}}, 16);
    for (Elem b = 0; b < n; ++b)
      if (s.table[a * n + b] == 0 && s.table[b * n + a] == 0) s.inverse[a] = b;
    ++inverses.evaluated;
    if (s.inverse[a] == n) inverses.fail(Witness{{a}}, 16);
  }
  s.checks.add(std::move(checks[0]));
  s.checks.add(std::move(unit));
  s.checks.add(std::move(inverses));
  return s;
}

DybMap rump_yb(const Brace& br) {
  DBrace d{br.group, 1, br.mult, std::vector<std::uint32_t>(br.group.size(), 0)};
  DybMap m = dyb_from_dbrace(d);
  m.phi.reset();
  return m;
}

Brace brace_from_subgroup(const Holomorph& hol, const RegularSubgroup& s) {
  const auto& g = hol.group();
  const auto n = g.size();
  if (s.elements.size() != n) throw std::invalid_argument("subgroup is not regular");
  std::vector<AutId> f(n, static_cast<AutId>(hol.aut_count()));
  for (const auto& x : s.elements) f.at(x.trans) = x.aut;
  Brace br{g, std::vector<Elem>(n * n)};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) br.mult[a * n + b] = g.sub(hol.apply(f[b], a), a);
  return br;
}

RegularSubgroup subgroup_from_brace(const Holomorph& hol, const Brace& br) {
  const auto n = hol.order();
  RegularSubgroup s;
  std::vector<Elem> images(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem x = 0; x < n; ++x) images[x] = br.gamma(a, x);
    auto id = hol.find(images);
    if (!id) throw VerificationError("γ(a) is not an automorphism", Witness{{a}});
    s.elements.push_back({a, *id});
  }
  return s;
}

bool is_regular_subgroup(const Holomorph& hol, const std::vector<HolElement>& elems) {
  const auto n = hol.order();
  if (elems.size() != n) return false;
  std::vector<AutId> f(n, static_cast<AutId>(hol.aut_count()));
  for (const auto& x : elems) {
    if (!hol.contains(x) || f[x.trans] != hol.aut_count()) return false;
    f[x.trans] = x.aut;
  }
  if (f[0] != Holomorph::identity()) return false;
  for (const auto& x : elems)
    for (const auto& y : elems) {
      const auto z = hol.mul(x, y);
      if (f[z.trans] != z.aut) return false;
    }
  return true;
}

namespace {

constexpr AutId kUnassigned = ~AutId{0};

// Adds x to the partial subgroup and closes under products with everything
// assigned so far. Returns false on a conflict (two automorphisms above one
// translation component).
bool propagate(const Holomorph& hol, std::vector<AutId>& assign, HolElement start) {
  std::deque<HolElement> queue;
  auto place = [&](HolElement z) {
    if (assign[z.trans] == kUnassigned) {
      assign[z.trans] = z.aut;
      queue.push_back(z);
      return true;
    }
    return assign[z.trans] == z.aut;
  };
  if (!place(start)) return false;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    if (!place(hol.inv(x))) return false;
    for (Elem t = 0; t < assign.size(); ++t) {
      if (assign[t] == kUnassigned) continue;
      const HolElement y{t, assign[t]};
      if (!place(hol.mul(x, y)) || !place(hol.mul(y, x))) return false;
    }
  }
  return true;
}

void search(const Holomorph& hol, std::vector<AutId> assign, std::vector<RegularSubgroup>& out) {
  const auto it = std::find(assign.begin(), assign.end(), kUnassigned);
  if (it == assign.end()) {
    RegularSubgroup s;
    for (Elem a = 0; a < assign.size(); ++a) s.elements.push_back({a, assign[a]});
    out.push_back(std::move(s));
    return;
  }
  const auto a = static_cast<Elem>(it - assign.begin());
  for (AutId f = 0; f < hol.aut_count(); ++f) {
    auto next = assign;
    if (propagate(hol, next, {a, f})) search(hol, std::move(next), out);
  }
}

}  // namespace

std::vector<Elem> canonical_brace_table(const Holomorph& hol, const Brace& br) {
  const auto n = hol.order();
  std::vector<Elem> best;
  std::vector<Elem> t(n * n);
  for (AutId F = 0; F < hol.aut_count(); ++F) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        t[hol.apply(F, a) * n + hol.apply(F, b)] = hol.apply(F, br.mul(a, b));
    if (best.empty() || t < best) best = t;
  }
  return best;
}

std::vector<RegularSubgroupEntry> enumerate_regular_subgroups(const Holomorph& hol) {
  std::vector<AutId> assign(hol.order(), kUnassigned);
  std::vector<RegularSubgroup> found;
  if (propagate(hol, assign, {0, Holomorph::identity()})) search(hol, assign, found);

  std::sort(found.begin(), found.end(), [](const RegularSubgroup& x, const RegularSubgroup& y) {
    for (std::size_t i = 0; i < x.elements.size(); ++i)
      if (x.elements[i].aut != y.elements[i].aut) return x.elements[i].aut < y.elements[i].aut;
    return false;
  });

  std::vector<RegularSubgroupEntry> out;
  std::vector<std::vector<Elem>> classes;
  for (auto& s : found) {
    RegularSubgroupEntry e{s, brace_from_subgroup(hol, s), 0};
    const auto canon = canonical_brace_table(hol, e.brace);
    auto pos = std::find(classes.begin(), classes.end(), canon);
    e.iso_class = static_cast<std::size_t>(pos - classes.begin());
    if (pos == classes.end()) classes.push_back(canon);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace dybrace
