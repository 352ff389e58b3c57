#include <algorithm>
#include <set>

#include "doctest.h"
#include "dybrace/dbrace.hpp"
#include "dybrace/reference.hpp"
#include "fixtures.hpp"

using namespace dybrace;

namespace {

using Codes = std::vector<SectionCode>;

std::set<Section> section_set(const DBraceFamily& fam) { return {fam.sections.begin(), fam.sections.end()}; }

bool contains_family(const std::vector<DBraceFamily>& fams, const std::set<Section>& want) {
  return std::any_of(fams.begin(), fams.end(), [&](const auto& f) { return section_set(f) == want; });
}

// Closed subsets of all sections by brute force over the power set.
std::size_t closed_subsets(const Holomorph& hol) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < hol.order(); ++i) total *= hol.aut_count();
  std::vector<std::vector<SectionCode>> translates(total);
  for (SectionCode c = 0; c < total; ++c) {
    const auto s = decode_section(hol, c);
    for (Elem a = 0; a < hol.order(); ++a)
      translates[c].push_back(encode_section(hol, translate_section(hol, s.at(a), s)->auts));
  }
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << total); ++mask) {
    bool closed = true;
    for (SectionCode c = 0; c < total && closed; ++c)
      if (mask >> c & 1)
        for (auto t : translates[c]) closed = closed && (mask >> t & 1);
    count += closed;
  }
  return count;
}

}  // namespace

TEST_CASE("Z_3 minimal families") {
  const auto hol = fx::holomorph({3});
  const auto fams = enumerate_families(hol);
  std::vector<Section> s;
  for (const auto& cols : fx::z3::sections) s.push_back(fx::section(*hol, cols));
  const Section A{{0, 0, 0}}, T{{1, 1, 1}};

  CHECK(fams.size() == 6);
  CHECK(contains_family(fams, {A}));
  CHECK(contains_family(fams, {s[0], s[1], s[2]}));
  for (int i = 3; i < 6; ++i) CHECK(contains_family(fams, {s[i], s[0], s[1], s[2]}));
  CHECK(contains_family(fams, {A, T}));
  for (const auto& f : fams) CHECK(check_dbrace(family_to_dbrace(f)).ok());
}

TEST_CASE("Z_3 closed families by power set") {
  const auto hol = fx::holomorph({3});
  EnumerationOptions opt;
  opt.mode = EnumerationMode::all;
  const auto all = enumerate_family_codes(*hol, opt);
  CHECK(all.size() == closed_subsets(*hol));
  CHECK(all.size() == 26);
  CHECK(std::is_sorted(all.begin(), all.end()));
  opt.max_families = 10;
  CHECK_THROWS_AS(enumerate_family_codes(*hol, opt), BoundExceeded);
}

TEST_CASE("Z_2 x Z_2 minimal families include the worked examples") {
  const auto hol = fx::holomorph({2, 2});
  const auto fams = enumerate_families(hol);
  using namespace fx::v4;
  CHECK(contains_family(fams, {fx::section(*hol, lambda1), fx::section(*hol, lambda2)}));
  CHECK(contains_family(fams, {fx::section(*hol, lambda3)}));
  std::set<Section> mus;
  for (const auto& m : mu) mus.insert(fx::section(*hol, m));
  CHECK(contains_family(fams, mus));
}

TEST_CASE("Z_2 has only the translation family") {
  const auto fams = enumerate_families(fx::holomorph({2}));
  REQUIRE(fams.size() == 1);
  CHECK(fams[0].params() == 1);
}

TEST_CASE("kernel agrees with the serial reference") {
  for (auto orders : std::vector<std::vector<std::uint32_t>>{{2}, {3}, {4}, {2, 2}, {5}, {6}}) {
    const auto hol = fx::holomorph(orders);
    CHECK(enumerate_family_codes(*hol, {}) == reference::minimal_family_codes(*hol));
  }
}

TEST_CASE("search bound") {
  CHECK_THROWS_AS(enumerate_families(fx::holomorph({2, 4})), BoundExceeded);
  EnumerationOptions opt;
  opt.max_sections = 100;
  CHECK_THROWS_AS(enumerate_families(fx::holomorph({2, 2}), opt), BoundExceeded);
}

TEST_CASE("isomorphism dedupe keeps one family per class") {
  const auto hol = fx::holomorph({3});
  EnumerationOptions opt;
  opt.dedupe_iso = true;
  const auto fams = enumerate_families(hol, opt);
  // the S5 and S6 families are conjugate under τ
  CHECK(fams.size() == 5);
  for (std::size_t i = 0; i < fams.size(); ++i)
    for (std::size_t j = i + 1; j < fams.size(); ++j)
      CHECK_FALSE(dbrace_isomorphic(family_to_dbrace(fams[i]), family_to_dbrace(fams[j])));
}

TEST_CASE("families are canonical and deterministic") {
  const auto hol = fx::holomorph({2, 2});
  const auto a = enumerate_families(hol);
  const auto b = enumerate_families(hol);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].sections == b[i].sections);
    CHECK(a[i].phi == b[i].phi);
    CHECK(std::is_sorted(a[i].sections.begin(), a[i].sections.end()));
  }
}
