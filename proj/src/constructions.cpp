#include "dybrace/constructions.hpp"

#include <omp.h>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dybrace {

bool GModuleAction::faithful() const {
  std::set<Automorphism> distinct(f.begin(), f.end());
  return distinct.size() == f.size();
}

TwistOutcome twisted_dbrace(const Brace& brace, const GModuleAction& action,
                            const std::vector<std::uint32_t>& phi, std::size_t max_witnesses) {
  const auto& g = brace.group;
  const auto n = static_cast<std::uint32_t>(g.size());
  const auto h = static_cast<std::uint32_t>(action.params());
  if (h == 0) throw std::invalid_argument("action needs at least one parameter");
  if (brace.mult.size() != std::size_t{n} * n) throw std::invalid_argument("brace table must be |A|×|A|");
  if (phi.size() != std::size_t{h} * n) throw std::invalid_argument("φ table must be |H|×|A|");
  for (auto v : phi)
    if (v >= h) throw std::invalid_argument("φ entry outside H");

  std::vector<std::vector<Elem>> inv(h, std::vector<Elem>(n));
  for (std::uint32_t l = 0; l < h; ++l) {
    const auto& f = action.f[l].images;
    if (f.size() != n || !is_additive_bijection(g, f))
      throw std::invalid_argument("f_λ is not an automorphism");
    for (Elem x = 0; x < n; ++x) inv[l][f[x]] = x;
  }

  TwistOutcome out(DBrace{g, h, std::vector<Elem>(std::size_t{h} * n * n), phi});
  auto& d = out.dbrace;
  for (std::uint32_t l = 0; l < h; ++l)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const auto& fm = action.f[phi[l * n + b]];
        const Elem x = fm(a);
        const Elem inner = g.add(brace.mul(x, action.f[l](b)), x);
        d.mult[(l * n + a) * n + b] = g.sub(inv[l][inner], a);
      }

  for (std::uint32_t l = 0; l < h; ++l)
    for (Elem b = 0; b < n; ++b) {
      std::vector<bool> seen(n);
      bool bij = true;
      for (Elem a = 0; a < n; ++a) {
        const Elem y = d.gamma(l, b, a);
        if (seen[y]) bij = false;
        seen[y] = true;
      }
      ++out.defects.evaluated;
      if (!bij) out.defects.fail(Witness{{l, b}}, max_witnesses);
    }

  const bool faithful = action.faithful();
  if (faithful) out.parameter_identity = CheckResult{"parameter_identity"};
  for (std::uint32_t l = 0; l < h; ++l)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        const auto lhs = d.next(l, d.star(l, b, a));
        const auto rhs = d.next(d.next(l, a), b);
        ++out.condition.evaluated;
        if (action.f[lhs] != action.f[rhs]) out.condition.fail(Witness{{l, a, b}}, max_witnesses);
        if (faithful) {
          ++out.parameter_identity->evaluated;
          if (lhs != rhs) out.parameter_identity->fail(Witness{{l, a, b}}, max_witnesses);
        }
      }
  out.accepted = out.condition.passed && out.defects.passed;
  return out;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 2 || p > 101) throw std::invalid_argument("p must be a prime ≤ 101");
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("p is not prime");
  inv_.assign(p, 0);
  for (std::uint32_t a = 1; a < p; ++a)
    for (std::uint32_t b = 1; b < p; ++b)
      if (a * b % p == 1) inv_[a] = b;
}

std::optional<std::uint32_t> PrimeField::inv(std::uint32_t a) const {
  a %= p_;
  if (a == 0) return std::nullopt;
  return inv_[a];
}

namespace {

void tally(IdentityTally& t, bool ok, std::initializer_list<std::uint64_t> at) {
  ++t.checked;
  if (ok) return;
  ++t.failures;
  if (t.witnesses.size() < 16) t.witnesses.push_back(Witness{at});
}

}  // namespace

FieldExample field_example(std::uint32_t p, bool restrict_nonzero) {
  const PrimeField F(p);
  FieldExample ex;
  ex.p = p;
  for (std::uint32_t l = restrict_nonzero ? 1 : 0; l < p; ++l) ex.params.push_back(l);
  const auto h = static_cast<std::uint32_t>(ex.params.size());
  const std::uint32_t offset = restrict_nonzero ? 1 : 0;
  auto in_h = [&](std::uint32_t v) { return v != kUndefined && v >= offset; };
  auto sq = [&](std::uint32_t x) { return F.mul(x, x); };

  ex.mult.resize(std::size_t{h} * p * p);
  ex.phi.resize(std::size_t{h} * p);
  ex.r_printed_first.resize(std::size_t{h} * p * p);
  ex.r_derived_first.resize(std::size_t{h} * p * p);
  ex.r_second.resize(std::size_t{h} * p * p);

  for (std::uint32_t li = 0; li < h; ++li) {
    const auto l = ex.params[li];
    for (std::uint32_t b = 0; b < p; ++b) {
      const auto lb1 = F.add(F.mul(l, b), 1);
      const auto v = F.mul(l, lb1);
      ex.phi[li * p + b] = in_h(v) ? v : kUndefined;
      if (lb1 == 0) ex.gamma_defects.push_back({l, b});
      for (std::uint32_t a = 0; a < p; ++a)
        ex.mult[(li * p + a) * p + b] = F.mul(F.sub(sq(lb1), 1), a);
      for (std::uint32_t c = 0; c < p; ++c) {
        const auto cell = (li * p + b) * p + c;
        const auto second = F.mul(sq(lb1), c);
        const auto den = F.add(F.mul(l, second), 1);
        ex.r_second[cell] = second;
        if (auto di = F.inv(den)) {
          ex.r_printed_first[cell] = F.mul(*di, b);
          ex.r_derived_first[cell] = F.mul(sq(*di), b);
          if (ex.r_printed_first[cell] != ex.r_derived_first[cell]) ++ex.r_mismatches;
        } else {
          ex.denominator_defects.push_back({l, b, c});
          ex.r_printed_first[cell] = kUndefined;
          ex.r_derived_first[cell] = kUndefined;
        }
      }
    }
  }

  auto index = [&](std::uint32_t v) { return v - offset; };
  auto star = [&](std::uint32_t li, std::uint32_t a, std::uint32_t b) {
    return F.add(F.add(ex.mult[(li * p + a) * p + b], a), b);
  };
  auto phi = [&](std::uint32_t li, std::uint32_t b) { return ex.phi[li * p + b]; };

  for (std::uint32_t li = 0; li < h; ++li)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c) {
        const auto lhs = phi(li, star(li, b, c));
        const auto mid = phi(li, c);
        if (lhs == kUndefined || mid == kUndefined || phi(index(mid), b) == kUndefined) {
          ++ex.parameter_identity.skipped;
          continue;
        }
        tally(ex.parameter_identity, lhs == phi(index(mid), b), {ex.params[li], b, c});
      }

  std::vector<IdentityTally> partial(h);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t sli = 0; sli < h; ++sli) {
    const auto li = static_cast<std::uint32_t>(sli);
    auto& t = partial[li];
    for (std::uint32_t c = 0; c < p; ++c) {
      const auto mid = phi(li, c);
      if (mid == kUndefined) {
        t.skipped += std::uint64_t{p} * p;
        continue;
      }
      for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
          tally(t, star(li, star(index(mid), a, b), c) == star(li, a, star(li, b, c)),
                {ex.params[li], a, b, c});
    }
  }
  for (auto& t : partial) {
    ex.star_associativity.checked += t.checked;
    ex.star_associativity.skipped += t.skipped;
    ex.star_associativity.failures += t.failures;
    for (auto& w : t.witnesses)
      if (ex.star_associativity.witnesses.size() < 16) ex.star_associativity.witnesses.push_back(w);
  }
  return ex;
}

}  // namespace dybrace
