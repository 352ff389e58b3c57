#include "dybrace/dyb.hpp"

#include <algorithm>
#include <string>

#include "dybrace/dbrace.hpp"
#include "sweep.hpp"

namespace dybrace {

using detail::Index;
using detail::named;


DybMap DybMap::identity(std::size_t x, std::size_t h) {
  DybMap m;
  m.x = x;
  m.h = h;
  m.rpart.resize(h * x * x);
  m.lpart.resize(h * x * x);
  for (std::uint32_t l = 0; l < h; ++l)
    for (Elem a = 0; a < x; ++a)
      for (Elem b = 0; b < x; ++b) {
        m.rpart[m.cell(l, a, b)] = a;
        m.lpart[m.cell(l, a, b)] = b;
      }
  return m;
}

void DybMap::validate_shape() const {
  if (x == 0 || h == 0) throw std::invalid_argument("DYB map needs non-empty X and H");
  if (rpart.size() != h * x * x || lpart.size() != h * x * x)
    throw std::invalid_argument("DYB map tables must have |H|·|X|² entries");
  for (std::size_t i = 0; i < rpart.size(); ++i)
    if (rpart[i] >= x || lpart[i] >= x) throw std::invalid_argument("DYB map entry outside X");
  if (phi) {
    if (phi->size() != h * x) throw std::invalid_argument("φ table must have |H|·|X| entries");
    for (auto v : *phi)
      if (v >= h) throw std::invalid_argument("φ value outside H");
  }
}

std::optional<std::vector<Elem>> invert_permutation(const std::vector<Elem>& p) {
  std::vector<Elem> inv(p.size(), static_cast<Elem>(p.size()));
  for (Elem i = 0; i < p.size(); ++i) {
    if (p[i] >= p.size() || inv[p[i]] != p.size()) return std::nullopt;
    inv[p[i]] = i;
  }
  return inv;
}

DybMap dyb_from_dbrace(const DBrace& d) {
  const auto n = d.n();
  DybMap m;
  m.x = n;
  m.h = d.params;
  m.phi = d.phi;
  m.rpart.resize(m.h * n * n);
  m.lpart.resize(m.h * n * n);
  // ginv[(λ*n + x)*n + y] = γ_λ(x)^{-1}(y)
  std::vector<Elem> ginv(m.h * n * n);
  for (std::uint32_t l = 0; l < m.h; ++l)
    for (Elem x = 0; x < n; ++x) {
      std::vector<Elem> g(n);
      for (Elem y = 0; y < n; ++y) g[y] = d.gamma(l, x, y);
      auto inv = invert_permutation(g);
      if (!inv)
        throw VerificationError("γ_λ(x) is not bijective (d-brace axiom violated)",
                                Witness{{l, x}});
      std::copy(inv->begin(), inv->end(), ginv.begin() + (l * n + x) * n);
    }
  for (std::uint32_t l = 0; l < m.h; ++l)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem lab = d.gamma(l, a, b);
        m.lpart[m.cell(l, a, b)] = lab;
        m.rpart[m.cell(l, a, b)] = ginv[(l * n + lab) * n + a];
      }
  return m;
}

DybMap dyb_from_left_actions(const LeftActionFamily& fam, LeftActionRelation relation,
                             const FiniteAbelianGroup* group) {
  const auto n = fam.x;
  if (fam.table.size() != fam.h * n * n)
    throw std::invalid_argument("left-action table must have |H|·|X|² entries");
  if (relation == LeftActionRelation::additive && (group == nullptr || group->size() != n))
    throw std::invalid_argument("additive relation needs the abelian group on X");

  DybMap m;
  m.x = n;
  m.h = fam.h;
  m.phi = fam.phi;
  m.lpart = fam.table;
  m.rpart.resize(fam.table.size());
  std::vector<Elem> linv(fam.table.size());
  for (std::uint32_t l = 0; l < fam.h; ++l)
    for (Elem a = 0; a < n; ++a) {
      std::vector<Elem> row(fam.table.begin() + (l * n + a) * n,
                            fam.table.begin() + (l * n + a + 1) * n);
      auto inv = invert_permutation(row);
      if (!inv) throw VerificationError("left action is not a bijection", Witness{{l, a}});
      std::copy(inv->begin(), inv->end(), linv.begin() + (l * n + a) * n);
    }
  m.validate_shape();
  for (std::uint32_t l = 0; l < fam.h; ++l)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem lab = m.L(l, a, b);
        m.rpart[m.cell(l, a, b)] = linv[(l * n + lab) * n + a];
      }

  for (std::uint32_t l = 0; l < fam.h; ++l)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const Elem lab = m.L(l, a, b);
        const auto pa = m.next(l, a);
        for (Elem c = 0; c < n; ++c) {
          const Elem lhs = m.L(l, a, m.L(pa, b, c));
          Elem rhs;
          if (relation == LeftActionRelation::additive) {
            rhs = m.L(l, group->add(lab, a), c);
          } else {
            rhs = m.L(l, lab, m.L(m.next(l, lab), m.R(l, a, b), c));
          }
          if (lhs != rhs)
            throw VerificationError("left actions violate the composition relation",
                                    Witness{{l, a, b, c}});
        }
      }
  return m;
}

Report verify_dyb(const DybMap& m, const CheckOptions& opt) {
  m.validate_shape();
  auto checks = named({"dynamical_yang_baxter", "first_component", "second_component",
                       "third_component", "componentwise_agreement"});
  detail::sweep_or_sample<3>(opt, m.h, static_cast<std::uint32_t>(m.x), checks,
                             [&m](const Index<3>& i) -> unsigned {
    const std::uint32_t l = i[0];
    const Elem a = i[1], b = i[2], c = i[3];
    // Direct evaluation: left side applies R12(λ), R13(φ(λ,X2)), R23(λ);
    // right side applies R23(φ(λ,X1)), R13(λ), R12(φ(λ,X3)).
    const Elem a1 = m.R(l, a, b), b1 = m.L(l, a, b);
    const auto mu = m.next(l, b1);
    const Elem a2 = m.R(mu, a1, c), c2 = m.L(mu, a1, c);
    const Elem lhs0 = a2, lhs1 = m.R(l, b1, c2), lhs2 = m.L(l, b1, c2);

    const auto nu = m.next(l, a);
    const Elem b3 = m.R(nu, b, c), c3 = m.L(nu, b, c);
    const Elem a4 = m.R(l, a, c3), c4 = m.L(l, a, c3);
    const auto rho = m.next(l, c4);
    const Elem rhs0 = m.R(rho, a4, b3), rhs1 = m.L(rho, a4, b3), rhs2 = c4;
    const bool braid_holds = lhs0 == rhs0 && lhs1 == rhs1 && lhs2 == rhs2;

    // The three component relations written in 𝕷/𝕽 notation.
    const Elem lab = m.L(l, a, b), rba = m.R(l, a, b);
    const auto pa = m.next(l, a);
    const auto plab = m.next(l, lab);
    const Elem lbc = m.L(pa, b, c);
    const Elem B = m.L(l, a, lbc);
    const auto pB = m.next(l, B);
    const Elem A = m.L(plab, rba, c);
    const bool third = m.L(l, a, lbc) == m.L(l, lab, A);
    const bool second = m.R(l, lab, A) == m.L(pB, m.R(l, a, lbc), m.R(pa, b, c));
    const bool first = m.R(plab, rba, c) == m.R(pB, m.R(l, a, lbc), m.R(pa, b, c));
    const bool agree = braid_holds == (first && second && third);

    return (braid_holds ? 0u : 1u) | (first ? 0u : 2u) | (second ? 0u : 4u) | (third ? 0u : 8u) |
           (agree ? 0u : 16u);
  });
  Report r;
  r.checks = std::move(checks);
  return r;
}

Report verify_unitary(const DybMap& m, const CheckOptions& opt) {
  m.validate_shape();
  auto checks = named({"involutive", "unitary_first", "unitary_second", "unitary_agreement"});
  detail::sweep<2>(detail::rows_of(opt, m.h), static_cast<std::uint32_t>(m.x), checks,
                   opt.max_witnesses, [&m](const Index<2>& i) -> unsigned {
    const std::uint32_t l = i[0];
    const Elem a = i[1], b = i[2];
    // PR(λ)(a,b) = (𝕷_a(b), 𝕽_b(a)); applying it twice must return (a,b).
    const Elem p0 = m.L(l, a, b), p1 = m.R(l, a, b);
    const Elem q0 = m.L(l, p0, p1), q1 = m.R(l, p0, p1);
    const bool involutive = q0 == a && q1 == b;
    const bool first = m.L(l, m.L(l, a, b), m.R(l, a, b)) == a;
    const bool second = m.R(l, m.L(l, a, b), m.R(l, a, b)) == b;
    const bool agree = involutive == (first && second);
    return (involutive ? 0u : 1u) | (first ? 0u : 2u) | (second ? 0u : 4u) | (agree ? 0u : 8u);
  });
  Report r;
  r.checks = std::move(checks);
  return r;
}

Nondegeneracy check_nondegeneracy(const DybMap& m, const CheckOptions& opt) {
  m.validate_shape();
  Nondegeneracy out;
  const auto n = m.x;
  for (std::uint32_t l = 0; l < m.h; ++l)
    for (Elem a = 0; a < n; ++a) {
      std::vector<bool> seen_l(n), seen_r(n);
      bool ok_l = true, ok_r = true;
      for (Elem b = 0; b < n; ++b) {
        // 𝕷^λ_a : b ↦ L(λ,a,b);  𝕽^λ_a : b ↦ R(λ,b,a)
        const Elem y = m.L(l, a, b);
        if (seen_l[y]) ok_l = false;
        seen_l[y] = true;
        const Elem z = m.R(l, b, a);
        if (seen_r[z]) ok_r = false;
        seen_r[z] = true;
      }
      ++out.right.evaluated;
      ++out.left.evaluated;
      if (!ok_l) out.right.fail(Witness{{l, a}}, opt.max_witnesses);
      if (!ok_r) out.left.fail(Witness{{l, a}}, opt.max_witnesses);
    }
  return out;
}

CheckResult check_weight_zero(const DybMap& m, const CheckOptions& opt) {
  m.validate_shape();
  std::vector<CheckResult> checks = named({"weight_zero"});
  detail::sweep<2>(detail::rows_of(opt, m.h), static_cast<std::uint32_t>(m.x), checks,
                   opt.max_witnesses, [&m](const Index<2>& i) -> unsigned {
    const std::uint32_t l = i[0];
    const Elem a = i[1], b = i[2];
    const auto lhs = m.next(m.next(l, a), b);
    const auto rhs = m.next(m.next(l, m.L(l, a, b)), m.R(l, a, b));
    return lhs == rhs ? 0u : 1u;
  });
  return checks[0];
}

DybMap product_dyb(const DybMap& m1, const DybMap& m2) {
  for (const DybMap* m : {&m1, &m2}) {
    const auto r = verify_dyb(*m, first_witness_only());
    const auto* c = r.find("dynamical_yang_baxter");
    if (!c->passed)
      throw VerificationError("product factor is not a DYB map", c->witnesses.front());
  }
  const auto nx = m1.x, ny = m2.x;
  DybMap p;
  p.x = nx * ny;
  p.h = m1.h * m2.h;
  if (m1.phi || m2.phi) {
    p.phi.emplace(p.h * p.x);
    for (std::uint32_t h1 = 0; h1 < m1.h; ++h1)
      for (std::uint32_t h2 = 0; h2 < m2.h; ++h2)
        for (Elem x1 = 0; x1 < nx; ++x1)
          for (Elem x2 = 0; x2 < ny; ++x2)
            (*p.phi)[(h1 * m2.h + h2) * p.x + x1 * ny + x2] =
                m1.next(h1, x1) * static_cast<std::uint32_t>(m2.h) + m2.next(h2, x2);
  }
  p.rpart.resize(p.h * p.x * p.x);
  p.lpart.resize(p.h * p.x * p.x);
  for (std::uint32_t h1 = 0; h1 < m1.h; ++h1)
    for (std::uint32_t h2 = 0; h2 < m2.h; ++h2) {
      const std::uint32_t l = h1 * static_cast<std::uint32_t>(m2.h) + h2;
      for (Elem a1 = 0; a1 < nx; ++a1)
        for (Elem a2 = 0; a2 < ny; ++a2)
          for (Elem b1 = 0; b1 < nx; ++b1)
            for (Elem b2 = 0; b2 < ny; ++b2) {
              const Elem a = a1 * ny + a2, b = b1 * ny + b2;
              p.rpart[p.cell(l, a, b)] = m1.R(h1, a1, b1) * ny + m2.R(h2, a2, b2);
              p.lpart[p.cell(l, a, b)] = m1.L(h1, a1, b1) * ny + m2.L(h2, a2, b2);
            }
    }
  return p;
}

PermutationSolution permutation_solution(std::size_t n, const std::vector<Elem>& l,
                                         const std::vector<Elem>& r) {
  if (l.size() != n || r.size() != n) throw std::invalid_argument("permutation size mismatch");
  auto linv = invert_permutation(l);
  if (!linv || !invert_permutation(r))
    throw std::invalid_argument("permutation solution needs bijections");
  for (Elem x = 0; x < n; ++x)
    if (l[r[x]] != r[l[x]])
      throw VerificationError("l and r do not commute", Witness{{x}});

  PermutationSolution s;
  s.map.x = n;
  s.map.h = 1;
  s.map.rpart.resize(n * n);
  s.map.lpart.resize(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      s.map.rpart[s.map.cell(0, a, b)] = r[a];
      s.map.lpart[s.map.cell(0, a, b)] = l[b];
    }
  s.unitary = (r == *linv);
  return s;
}

}  // namespace dybrace
