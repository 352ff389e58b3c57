#include <array>

#include "doctest.h"
#include "dybrace/dbrace.hpp"
#include "dybrace/dyb.hpp"
#include "dybrace/reference.hpp"
#include "fixtures.hpp"

using namespace dybrace;

namespace {

using Triple = std::array<Elem, 3>;

// R_ij(lam) applied to positions i, j of t.
Triple apply(const DybMap& m, std::uint32_t lam, int i, int j, Triple t) {
  const Elem a = t[i], b = t[j];
  t[i] = m.R(lam, a, b);
  t[j] = m.L(lam, a, b);
  return t;
}

// The braid-type equation evaluated operator by operator, right to left.
std::uint64_t oracle_failures(const DybMap& m) {
  std::uint64_t bad = 0;
  for (std::uint32_t l = 0; l < m.h; ++l)
    for (Elem a = 0; a < m.x; ++a)
      for (Elem b = 0; b < m.x; ++b)
        for (Elem c = 0; c < m.x; ++c) {
          Triple lhs{a, b, c}, rhs{a, b, c};
          lhs = apply(m, l, 0, 1, lhs);
          lhs = apply(m, m.next(l, lhs[1]), 0, 2, lhs);
          lhs = apply(m, l, 1, 2, lhs);
          rhs = apply(m, m.next(l, rhs[0]), 1, 2, rhs);
          rhs = apply(m, l, 0, 2, rhs);
          rhs = apply(m, m.next(l, rhs[2]), 0, 1, rhs);
          bad += lhs != rhs;
        }
  return bad;
}

DBraceFamily z3_lambda_family() {
  const auto hol = fx::holomorph({3});
  return close_family(hol, fx::section(*hol, fx::z3::sections[0]));
}

DybMap swap_map(std::size_t x, std::size_t h) {
  DybMap m = DybMap::identity(x, h);
  for (std::uint32_t l = 0; l < h; ++l)
    for (Elem a = 0; a < x; ++a)
      for (Elem b = 0; b < x; ++b) {
        m.rpart[m.cell(l, a, b)] = b;
        m.lpart[m.cell(l, a, b)] = a;
      }
  return m;
}

void check_consistent(const DybMap& m) {
  const auto r = verify_dyb(m);
  CHECK(r.passed("componentwise_agreement"));
  CHECK(r.find("dynamical_yang_baxter")->failures == oracle_failures(m));
  CHECK(r.find("dynamical_yang_baxter")->failures == reference::dyb_failures(m));
  CHECK(verify_unitary(m).passed("unitary_agreement"));
}

}  // namespace

TEST_CASE("identity map") {
  const auto m = DybMap::identity(3);
  CHECK(verify_dyb(m).ok());
  CHECK(verify_unitary(m).ok());
  const auto nd = check_nondegeneracy(m);
  CHECK(nd.left.passed);
  CHECK(nd.right.passed);
  CHECK(check_weight_zero(m).passed);
}

TEST_CASE("maps from d-braces") {
  const auto fam = z3_lambda_family();
  const auto d = family_to_dbrace(fam);
  const auto m = dyb_from_dbrace(d);
  const auto l1 = fx::index_of(fam, fx::section(*fam.hol, fx::z3::sections[0]));
  // R(λ1)(2,1): γ_λ1(2)(1) = 1·2 + 1 = 2 and γ_λ1(2) = τ, so the first component is τ^{-1}(2) = 1
  CHECK(m.L(l1, 2, 1) == 2);
  CHECK(m.R(l1, 2, 1) == 1);
  check_consistent(m);
  CHECK(verify_dyb(m).ok());
  CHECK(verify_unitary(m).ok());
  CHECK(check_nondegeneracy(m).right.passed);
  CHECK(check_weight_zero(m).passed);

  for (auto orders : std::vector<std::vector<std::uint32_t>>{{3}, {2, 2}, {4}})
    for (const auto& f : enumerate_families(fx::holomorph(orders))) {
      const auto dd = family_to_dbrace(f);
      const auto mm = dyb_from_dbrace(dd);
      CHECK(verify_dyb(mm).ok());
      CHECK(verify_unitary(mm).ok());
      CHECK(check_nondegeneracy(mm).right.passed);
      CHECK(check_weight_zero(mm).passed);
      // 𝕷^{φ(φ(λ,a),b)}_c = 𝕷^{φ(λ,𝕷^λ_a(b)+a)}_c
      const auto& g = dd.group;
      for (std::uint32_t l = 0; l < dd.params; ++l)
        for (Elem a = 0; a < dd.n(); ++a)
          for (Elem b = 0; b < dd.n(); ++b) {
            const auto p = dd.next(dd.next(l, a), b);
            const auto q = dd.next(l, g.add(mm.L(l, a, b), a));
            for (Elem c = 0; c < dd.n(); ++c) CHECK(mm.L(p, c, 0) == mm.L(q, c, 0));
          }
    }
}

TEST_CASE("μ family map passes every check") {
  const auto hol = fx::holomorph({2, 2});
  std::vector<Section> s;
  for (const auto& cols : fx::v4::mu) s.push_back(fx::section(*hol, cols));
  const auto m = dyb_from_dbrace(family_to_dbrace(make_family(hol, s)));
  CHECK(verify_dyb(m).ok());
  CHECK(verify_unitary(m).ok());
  CHECK(check_nondegeneracy(m).right.passed);
  CHECK(check_weight_zero(m).passed);
}

TEST_CASE("single-cell tamperings are caught and verdicts agree") {
  const auto m = dyb_from_dbrace(family_to_dbrace(z3_lambda_family()));
  int caught = 0, total = 0;
  for (std::size_t cell = 0; cell < m.rpart.size(); ++cell)
    for (Elem v = 0; v < m.x; ++v)
      for (bool left : {false, true}) {
        auto t = m;
        auto& slot = left ? t.lpart[cell] : t.rpart[cell];
        if (slot == v) continue;
        slot = v;
        ++total;
        check_consistent(t);
        caught += !verify_dyb(t).ok() || !verify_unitary(t).ok() || !check_nondegeneracy(t).right.passed;
      }
  CHECK(caught == total);
}

TEST_CASE("swap map with a nonconstant φ") {
  // the same swap for every λ satisfies the equation for any φ
  for (std::uint32_t code = 0; code < 16; ++code) {
    auto m = swap_map(2, 2);
    m.phi.emplace(4);
    for (std::uint32_t i = 0; i < 4; ++i) (*m.phi)[i] = code >> i & 1;
    CHECK(verify_dyb(m).ok());
  }
  // R(λ0) = swap, R(λ1) = id: search all φ for counterexamples
  int failing = 0;
  for (std::uint32_t code = 0; code < 16; ++code) {
    auto m = swap_map(2, 2);
    for (Elem a = 0; a < 2; ++a)
      for (Elem b = 0; b < 2; ++b) {
        m.rpart[m.cell(1, a, b)] = a;
        m.lpart[m.cell(1, a, b)] = b;
      }
    m.phi.emplace(4);
    for (std::uint32_t i = 0; i < 4; ++i) (*m.phi)[i] = code >> i & 1;
    check_consistent(m);
    const auto r = verify_dyb(m);
    if (!r.ok()) {
      ++failing;
      CHECK_FALSE(r.find("dynamical_yang_baxter")->witnesses.empty());
    }
  }
  CHECK(failing > 0);
  CHECK(failing < 16);
}

TEST_CASE("nondegeneracy") {
  DybMap c = DybMap::identity(3);
  std::fill(c.rpart.begin(), c.rpart.end(), 0);
  std::fill(c.lpart.begin(), c.lpart.end(), 0);
  const auto nd = check_nondegeneracy(c);
  CHECK_FALSE(nd.left.passed);
  CHECK_FALSE(nd.right.passed);
  CHECK_FALSE(nd.left.witnesses.empty());
}

TEST_CASE("weight-zero counterexample") {
  // identity tables with φ(λ,a) = a: φ(φ(λ,a),b) = b but the other side is a
  auto m = DybMap::identity(2, 2);
  m.phi = std::vector<std::uint32_t>{0, 1, 0, 1};
  CHECK(verify_dyb(m).ok());
  const auto w = check_weight_zero(m);
  CHECK_FALSE(w.passed);
  CHECK_FALSE(w.witnesses.empty());
}

TEST_CASE("permutation solutions") {
  const std::vector<Elem> plus{1, 2, 0}, minus{2, 0, 1};
  const auto inv = permutation_solution(3, plus, minus);
  CHECK(inv.unitary);
  CHECK(verify_dyb(inv.map).ok());
  CHECK(verify_unitary(inv.map).ok());

  const auto same = permutation_solution(3, plus, plus);
  CHECK_FALSE(same.unitary);
  CHECK(verify_dyb(same.map).ok());
  CHECK_FALSE(verify_unitary(same.map).ok());
  check_consistent(same.map);

  CHECK_THROWS_AS(permutation_solution(4, {1, 0, 2, 3}, {0, 2, 1, 3}), VerificationError);
  CHECK_THROWS_AS(permutation_solution(3, {0, 0, 1}, plus), std::invalid_argument);
}

TEST_CASE("products") {
  const auto t = product_dyb(DybMap::identity(2), DybMap::identity(3));
  CHECK(t == DybMap::identity(6));

  const auto fam = dyb_from_dbrace(family_to_dbrace(z3_lambda_family()));
  const auto p = product_dyb(fam, DybMap::identity(2));
  CHECK(p.x == 6);
  CHECK(p.h == 3);
  CHECK(verify_dyb(p).ok());
  CHECK(verify_unitary(p).ok());
  check_consistent(p);

  const auto nonunitary = permutation_solution(3, {1, 2, 0}, {1, 2, 0}).map;
  const auto q = product_dyb(DybMap::identity(2), nonunitary);
  CHECK(verify_dyb(q).ok());
  CHECK_FALSE(verify_unitary(q).ok());

  auto broken = fam;
  broken.rpart[0] = 1;
  REQUIRE_FALSE(verify_dyb(broken).ok());
  CHECK_THROWS_AS(product_dyb(broken, DybMap::identity(2)), VerificationError);
  CHECK_THROWS_AS(product_dyb(DybMap::identity(2), broken), VerificationError);
}

TEST_CASE("maps from left actions") {
  LeftActionFamily id{3, 1, std::vector<Elem>(9), std::nullopt};
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 0; b < 3; ++b) id.table[a * 3 + b] = b;
  CHECK(dyb_from_left_actions(id, LeftActionRelation::general) == DybMap::identity(3));

  const auto d = family_to_dbrace(z3_lambda_family());
  LeftActionFamily la{3, d.params, std::vector<Elem>(d.params * 9), d.phi};
  for (std::uint32_t l = 0; l < d.params; ++l)
    for (Elem a = 0; a < 3; ++a)
      for (Elem b = 0; b < 3; ++b) la.table[(l * 3 + a) * 3 + b] = d.gamma(l, a, b);
  const auto expected = dyb_from_dbrace(d);
  CHECK(dyb_from_left_actions(la, LeftActionRelation::general) == expected);
  CHECK(dyb_from_left_actions(la, LeftActionRelation::additive, &d.group) == expected);
  CHECK_THROWS_AS(dyb_from_left_actions(la, LeftActionRelation::additive), std::invalid_argument);

  // swapping two images keeps each 𝕷 bijective but breaks the relation
  auto bad = la;
  std::swap(bad.table[(0 * 3 + 1) * 3 + 1], bad.table[(0 * 3 + 1) * 3 + 2]);
  CHECK_THROWS_AS(dyb_from_left_actions(bad, LeftActionRelation::general), VerificationError);
  CHECK_THROWS_AS(dyb_from_left_actions(bad, LeftActionRelation::additive, &d.group), VerificationError);

  auto nonbij = la;
  nonbij.table[0] = 1;
  CHECK_THROWS_AS(dyb_from_left_actions(nonbij, LeftActionRelation::general), VerificationError);
}
