#include "dybrace/reference.hpp"

#include <array>
#include <functional>
#include <set>

namespace dybrace::reference {

std::vector<std::vector<SectionCode>> minimal_family_codes(const Holomorph& hol,
                                                           std::uint64_t max_sections) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < hol.order(); ++i) {
    total *= hol.aut_count();
    if (total > max_sections) throw BoundExceeded("|Aut(A)|^|A| exceeds the section search bound");
  }
  // A non-owning handle: close_family only needs the holomorph for the call.
  std::shared_ptr<const Holomorph> handle(&hol, [](const Holomorph*) {});
  std::set<std::vector<SectionCode>> found;
  for (SectionCode s = 0; s < total; ++s) {
    const auto fam = close_family(handle, decode_section(hol, s));
    std::vector<SectionCode> codes;
    for (const auto& sec : fam.sections) codes.push_back(encode_section(hol, sec.auts));
    found.insert(std::move(codes));
  }
  return {found.begin(), found.end()};
}

namespace {

using Triple = std::array<Elem, 3>;
using Op = std::function<Triple(const Triple&)>;

// R_ij(param) acting on positions i < j; the parameter may read the
// remaining coordinate.
Op factor(const DybMap& m, int i, int j, std::function<std::uint32_t(const Triple&)> param) {
  return [&m, i, j, param](const Triple& t) {
    const auto l = param(t);
    Triple out = t;
    out[i] = m.R(l, t[i], t[j]);
    out[j] = m.L(l, t[i], t[j]);
    return out;
  };
}

}  // namespace

std::uint64_t dyb_failures(const DybMap& m) {
  m.validate_shape();
  std::uint64_t bad = 0;
  for (std::uint32_t l = 0; l < m.h; ++l) {
    auto fixed = [l](const Triple&) { return l; };
    auto by = [&m, l](int k) { return [&m, l, k](const Triple& t) { return m.next(l, t[k]); }; };
    // R23(λ) R13(φ(λ,X2)) R12(λ) = R12(φ(λ,X3)) R13(λ) R23(φ(λ,X1)), rightmost first
    const std::array<Op, 3> lhs{factor(m, 0, 1, fixed), factor(m, 0, 2, by(1)), factor(m, 1, 2, fixed)};
    const std::array<Op, 3> rhs{factor(m, 1, 2, by(0)), factor(m, 0, 2, fixed), factor(m, 0, 1, by(2))};
    for (Elem a = 0; a < m.x; ++a)
      for (Elem b = 0; b < m.x; ++b)
        for (Elem c = 0; c < m.x; ++c) {
          Triple x{a, b, c}, y{a, b, c};
          for (const auto& op : lhs) x = op(x);
          for (const auto& op : rhs) y = op(y);
          if (x != y) ++bad;
        }
  }
  return bad;
}

std::uint64_t dbrace_axiom_failures(const DBrace& d) {
  const auto& g = d.group;
  const auto n = d.n();
  std::uint64_t bad = 0;
  for (std::uint32_t l = 0; l < d.params; ++l) {
    for (Elem b = 0; b < n; ++b) {
      std::set<Elem> image;
      for (Elem a = 0; a < n; ++a) image.insert(g.add(d.mul(l, a, b), a));
      if (image.size() != n) ++bad;
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) {
          if (d.mul(l, g.add(a, b), c) != g.add(d.mul(l, a, c), d.mul(l, b, c))) ++bad;
          const auto m = d.next(l, c);
          const Elem lhs = d.mul(l, a, g.add(g.add(d.mul(l, b, c), b), c));
          const Elem rhs = g.add(g.add(d.mul(l, d.mul(m, a, b), c), d.mul(m, a, b)), d.mul(l, a, c));
          if (lhs != rhs) ++bad;
        }
  }
  return bad;
}

}  // namespace dybrace::reference
