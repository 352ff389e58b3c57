#include "dybrace/dbrace.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "dybrace/dyb.hpp"
#include "sweep.hpp"

namespace dybrace {

using detail::Index;

SectionCode encode_section(const Holomorph& hol, std::span<const AutId> auts) {
  const SectionCode k = hol.aut_count();
  SectionCode code = 0;
  for (auto f : auts) {
    if (__builtin_mul_overflow(code, k, &code) || __builtin_add_overflow(code, SectionCode{f}, &code))
      throw BoundExceeded("section code does not fit in 64 bits");
  }
  return code;
}

Section decode_section(const Holomorph& hol, SectionCode code) {
  const SectionCode k = hol.aut_count();
  Section s;
  s.auts.resize(hol.order());
  for (std::size_t i = hol.order(); i-- > 0;) {
    s.auts[i] = static_cast<AutId>(code % k);
    code /= k;
  }
  return s;
}

bool is_valid_section(const Holomorph& hol, std::span<const AutId> auts) {
  if (auts.size() != hol.order()) return false;
  return std::all_of(auts.begin(), auts.end(), [&](AutId f) { return f < hol.aut_count(); });
}

std::optional<Section> translate_section(const Holomorph& hol, HolElement x, const Section& s) {
  const auto xi = hol.inv(x);
  constexpr AutId kFree = ~AutId{0};
  Section out{std::vector<AutId>(hol.order(), kFree)};
  for (Elem b = 0; b < s.auts.size(); ++b) {
    const auto z = hol.mul(xi, s.at(b));
    if (out.auts[z.trans] != kFree) return std::nullopt;
    out.auts[z.trans] = z.aut;
  }
  if (std::find(out.auts.begin(), out.auts.end(), kFree) != out.auts.end()) return std::nullopt;
  return out;
}

DBraceFamily make_family(std::shared_ptr<const Holomorph> hol, std::vector<Section> sections) {
  if (sections.empty()) throw FamilyError("a family needs at least one section");
  std::map<Section, std::uint32_t> index;
  for (std::uint32_t i = 0; i < sections.size(); ++i) {
    if (!is_valid_section(*hol, sections[i].auts)) throw FamilyError("invalid section in family");
    if (!index.emplace(sections[i], i).second) throw FamilyError("duplicate section in family");
  }
  const auto n = hol->order();
  DBraceFamily fam{hol, std::move(sections), {}};
  fam.phi.resize(fam.params() * n);
  for (std::uint32_t l = 0; l < fam.params(); ++l)
    for (Elem a = 0; a < n; ++a) {
      const auto x = fam.sections[l].at(a);
      auto t = translate_section(*hol, x, fam.sections[l]);
      if (!t) throw ClosureFailure(fam.sections[l], x);
      auto it = index.find(*t);
      if (it == index.end()) throw FamilyError("family is not closed under translation");
      fam.phi[l * n + a] = it->second;
    }
  return fam;
}

DBraceFamily canonicalize(DBraceFamily fam) {
  const auto h = fam.params();
  const auto n = fam.order();
  std::vector<std::uint32_t> order(h);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](auto x, auto y) { return fam.sections[x] < fam.sections[y]; });
  std::vector<std::uint32_t> rank(h);
  for (std::uint32_t i = 0; i < h; ++i) rank[order[i]] = i;

  DBraceFamily out{fam.hol, std::vector<Section>(h), std::vector<std::uint32_t>(h * n)};
  for (std::uint32_t i = 0; i < h; ++i) {
    out.sections[i] = fam.sections[order[i]];
    for (Elem a = 0; a < n; ++a) out.phi[i * n + a] = rank[fam.phi[order[i] * n + a]];
  }
  return out;
}

DBraceFamily close_family(std::shared_ptr<const Holomorph> hol, const Section& seed) {
  if (!is_valid_section(*hol, seed.auts)) throw FamilyError("invalid seed section");
  std::map<Section, bool> seen{{seed, true}};
  std::deque<Section> queue{seed};
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    for (Elem a = 0; a < s.auts.size(); ++a) {
      auto t = translate_section(*hol, s.at(a), s);
      if (!t) throw ClosureFailure(s, s.at(a));
      if (seen.emplace(*t, true).second) queue.push_back(std::move(*t));
    }
  }
  std::vector<Section> sections;
  for (auto& [s, _] : seen) sections.push_back(s);
  return make_family(std::move(hol), std::move(sections));
}

DBraceFamily family_from_codes(std::shared_ptr<const Holomorph> hol,
                               std::span<const SectionCode> codes) {
  std::vector<Section> sections;
  for (auto c : codes) sections.push_back(decode_section(*hol, c));
  return canonicalize(make_family(std::move(hol), std::move(sections)));
}

std::vector<SectionCode> conjugate_codes(const Holomorph& hol, std::span<const SectionCode> codes,
                                         AutId F) {
  const auto n = hol.order();
  const AutId Fi = hol.inverse(F);
  std::vector<SectionCode> out;
  std::vector<AutId> auts(n);
  for (auto c : codes) {
    const auto s = decode_section(hol, c);
    for (Elem a = 0; a < n; ++a)
      auts[hol.apply(F, a)] = hol.compose(F, hol.compose(s.auts[a], Fi));
    out.push_back(encode_section(hol, auts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SectionCode> canonical_iso_codes(const Holomorph& hol,
                                             std::span<const SectionCode> codes) {
  std::vector<SectionCode> best(codes.begin(), codes.end());
  std::sort(best.begin(), best.end());
  for (AutId F = 1; F < hol.aut_count(); ++F) best = std::min(best, conjugate_codes(hol, codes, F));
  return best;
}

DBrace family_to_dbrace(const DBraceFamily& fam) {
  const auto& g = fam.hol->group();
  const auto n = g.size();
  const auto h = fam.params();
  DBrace d{g, h, std::vector<Elem>(h * n * n), fam.phi};
  for (std::uint32_t l = 0; l < h; ++l)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        d.mult[(l * n + a) * n + b] = g.sub(fam.hol->apply(fam.f(l, b), a), a);
  return d;
}

namespace {

void validate_dbrace_shape(const DBrace& d) {
  const auto n = d.n();
  if (d.params == 0) throw std::invalid_argument("d-brace needs at least one parameter");
  if (d.mult.size() != d.params * n * n) throw std::invalid_argument("multiplication table has wrong size");
  if (d.phi.size() != d.params * n) throw std::invalid_argument("φ table has wrong size");
  for (auto v : d.mult)
    if (v >= n) throw std::invalid_argument("multiplication entry outside A");
  for (auto v : d.phi)
    if (v >= d.params) throw std::invalid_argument("φ entry outside H");
}

}  // namespace

DBraceFamily dbrace_to_family(std::shared_ptr<const Holomorph> hol, const DBrace& d) {
  validate_dbrace_shape(d);
  if (!(hol->group() == d.group)) throw std::invalid_argument("holomorph of a different group");
  const auto n = d.n();
  std::vector<Section> sections(d.params, Section{std::vector<AutId>(n)});
  std::vector<Elem> images(n);
  for (std::uint32_t l = 0; l < d.params; ++l)
    for (Elem a = 0; a < n; ++a) {
      for (Elem x = 0; x < n; ++x) images[x] = d.gamma(l, a, x);
      auto f = hol->find(images);
      if (!f) throw FamilyError("γ_λ(a) is not an automorphism (right distributivity or bijectivity fails)");
      sections[l].auts[a] = *f;
    }
  auto fam = make_family(std::move(hol), std::move(sections));
  if (fam.phi != d.phi) throw FamilyError("φ does not match the translates of the sections");
  return fam;
}

Report check_dbrace(const DBrace& d, const CheckOptions& opt) {
  validate_dbrace_shape(d);
  const auto& g = d.group;
  const auto n = static_cast<std::uint32_t>(d.n());
  const auto h = d.params;
  const auto cap = opt.max_witnesses;
  const auto rows = detail::rows_of(opt, h);

  auto triple = detail::named({"right_distributive", "compatibility", "star_associativity",
                               "gamma_descent"});
  detail::sweep_or_sample<3>(opt, h, n, triple, [&](const Index<3>& i) -> unsigned {
    const std::uint32_t l = i[0];
    const Elem a = i[1], b = i[2], c = i[3];
    unsigned bad = 0;
    if (d.mul(l, g.add(a, b), c) != g.add(d.mul(l, a, c), d.mul(l, b, c))) bad |= 1;
    const auto lc = d.next(l, c);
    const Elem ab = d.mul(lc, a, b);
    const Elem lhs = d.mul(l, a, g.add(g.add(d.mul(l, b, c), b), c));
    if (lhs != g.add(g.add(d.mul(l, ab, c), ab), d.mul(l, a, c))) bad |= 2;
    if (d.star(l, d.star(lc, a, b), c) != d.star(l, a, d.star(l, b, c))) bad |= 4;
    const auto la = d.next(l, a);
    if (d.gamma(l, a, d.gamma(la, b, c)) != d.gamma(l, d.star(l, b, a), c)) bad |= 8;
    return bad;
  });

  auto pair = detail::named({"star_dot_agreement", "parameter_descent"});
  detail::sweep<2>(rows, n, pair, cap, [&](const Index<2>& i) -> unsigned {
    const std::uint32_t l = i[0];
    const Elem a = i[1], b = i[2];
    unsigned bad = 0;
    for (std::uint32_t m = 0; m < h; ++m)
      if ((d.star(l, a, b) == d.star(m, a, b)) != (d.mul(l, a, b) == d.mul(m, a, b))) bad |= 1;
    const auto p = d.next(d.next(l, a), b);
    const auto q = d.next(l, d.star(l, b, a));
    if (p != q) {
      const auto tp = d.mult.begin() + std::size_t{p} * n * n;
      const auto tq = d.mult.begin() + std::size_t{q} * n * n;
      if (!std::equal(tp, tp + std::size_t{n} * n, tq)) bad |= 2;
    }
    return bad;
  });

  auto single = detail::named({"gamma_bijective", "right_quasigroup", "zero_left",
                               "zero_right_on_image"});
  detail::sweep<1>(rows, n, single, cap, [&](const Index<1>& i) -> unsigned {
    const std::uint32_t l = i[0];
    const Elem b = i[1];
    std::vector<bool> gam(n), star(n);
    unsigned bad = 0;
    for (Elem a = 0; a < n; ++a) {
      const Elem y = d.gamma(l, b, a);
      if (gam[y]) bad |= 1;
      gam[y] = true;
      const Elem z = d.star(l, a, b);
      if (star[z]) bad |= 2;
      star[z] = true;
    }
    if (d.mul(l, 0, b) != 0) bad |= 4;
    if (d.mul(d.next(l, 0), b, 0) != 0) bad |= 8;
    return bad;
  });

  Report r;
  for (auto* group : {&triple, &pair, &single})
    for (auto& c : *group) r.add(std::move(c));
  return r;
}

DBraceFamily zero_symmetric_core(const DBraceFamily& fam) {
  std::vector<bool> image(fam.params());
  for (auto v : fam.phi) image[v] = true;
  std::vector<Section> kept;
  for (std::uint32_t l = 0; l < fam.params(); ++l)
    if (image[l]) kept.push_back(fam.sections[l]);
  return canonicalize(make_family(fam.hol, std::move(kept)));
}

std::optional<DBraceIsomorphism> dbrace_isomorphic(const DBrace& d1, const DBrace& d2) {
  if (d1.n() != d2.n() || d1.params != d2.params) return std::nullopt;
  const auto n = d1.n();
  const auto h = d1.params;
  const auto isos = enumerate_isomorphisms(d1.group, d2.group);

  for (const auto& F : isos) {
    // candidates[λ] = parameters μ with F(a ·_λ b) = F(a) ·_μ F(b)
    std::vector<std::vector<std::uint32_t>> candidates(h);
    bool viable = true;
    for (std::uint32_t l = 0; l < h && viable; ++l) {
      for (std::uint32_t m = 0; m < h; ++m) {
        bool match = true;
        for (Elem a = 0; a < n && match; ++a)
          for (Elem b = 0; b < n && match; ++b)
            match = F(d1.mul(l, a, b)) == d2.mul(m, F(a), F(b));
        if (match) candidates[l].push_back(m);
      }
      viable = !candidates[l].empty();
    }
    if (!viable) continue;

    std::vector<std::uint32_t> p(h);
    std::vector<bool> used(h);
    std::function<bool(std::uint32_t)> assign = [&](std::uint32_t l) -> bool {
      if (l == h) {
        for (std::uint32_t k = 0; k < h; ++k)
          for (Elem a = 0; a < n; ++a)
            if (p[d1.next(k, a)] != d2.next(p[k], F(a))) return false;
        return true;
      }
      for (auto m : candidates[l]) {
        if (used[m]) continue;
        used[m] = true;
        p[l] = m;
        if (assign(l + 1)) return true;
        used[m] = false;
      }
      return false;
    };
    if (assign(0)) return DBraceIsomorphism{F, p};
  }
  return std::nullopt;
}

}  // namespace dybrace
