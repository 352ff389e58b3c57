#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "dybrace/graph.hpp"
#include "fixtures.hpp"

using namespace dybrace;

namespace {

using fx::Images;

// (a, f)^{-1} applied to every member of a section, on image tables:
// (a,f)^{-1}(b,g) = (f^{-1}(b - a), f^{-1} g).
std::vector<Images> translate_oracle(const FiniteAbelianGroup& g, Elem a, const std::vector<Images>& cols) {
  const auto n = g.size();
  const auto& f = cols[a];
  Images finv(n);
  for (Elem x = 0; x < n; ++x) finv[f[x]] = x;
  std::vector<Images> out(n);
  for (Elem b = 0; b < n; ++b) {
    Images comp(n);
    for (Elem x = 0; x < n; ++x) comp[x] = finv[cols[b][x]];
    out[finv[g.sub(b, a)]] = comp;
  }
  return out;
}

std::vector<Images> columns(const DBraceFamily& fam, std::uint32_t lam) {
  std::vector<Images> cols;
  for (auto f : fam.sections[lam].auts) cols.push_back(fam.hol->aut(f).images);
  return cols;
}

std::set<Elem> loop_labels(const DBraceGraph& gr, std::uint32_t v) {
  std::set<Elem> out;
  for (const auto& e : gr.edges)
    if (e.src == v && e.dst == v) out.insert(e.label);
  return out;
}

DBraceFamily family_of(const std::shared_ptr<const Holomorph>& hol, const std::vector<std::vector<Images>>& secs) {
  std::vector<Section> s;
  for (const auto& c : secs) s.push_back(fx::section(*hol, c));
  return make_family(hol, s);
}

DBraceFamily z3_family(int i) {
  const auto hol = fx::holomorph({3});
  const auto& S = fx::z3::sections;
  if (i == 0) return family_of(hol, {S[0], S[1], S[2]});
  return family_of(hol, {S[static_cast<std::size_t>(i - 1)], S[0], S[1], S[2]});
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("edges follow translates") {
  for (auto orders : std::vector<std::vector<std::uint32_t>>{{3}, {2, 2}, {4}})
    for (const auto& fam : enumerate_families(fx::holomorph(orders))) {
      const auto gr = build_graph(fam);
      CHECK(gr.vertices == fam.params());
      REQUIRE(gr.edges.size() == fam.params() * fam.order());
      for (const auto& e : gr.edges)
        CHECK(translate_oracle(fam.hol->group(), e.label, columns(fam, e.src)) == columns(fam, e.dst));
      CHECK(check_graph_props(gr, fam).ok());
    }
}

TEST_CASE("Z_3 triangle") {
  const auto fam = z3_family(0);
  const auto gr = build_graph(fam);
  const auto l1 = fx::index_of(fam, fx::section(*fam.hol, fx::z3::sections[0]));
  const auto l2 = fx::index_of(fam, fx::section(*fam.hol, fx::z3::sections[1]));
  const auto l3 = fx::index_of(fam, fx::section(*fam.hol, fx::z3::sections[2]));
  for (std::uint32_t v = 0; v < 3; ++v) CHECK(loop_labels(gr, v) == std::set<Elem>{0});
  CHECK(std::count(gr.edges.begin(), gr.edges.end(), GraphEdge{l1, l3, 1}) == 1);
  CHECK(std::count(gr.edges.begin(), gr.edges.end(), GraphEdge{l1, l2, 2}) == 1);
  CHECK(check_graph_props(gr, fam).ok());

  const auto dot = export_dot(gr);
  CHECK(count(dot, "  S0;") + count(dot, "  S0 [") == 1);
  CHECK(count(dot, "->") == 9);
  CHECK(count(dot, "[label=\"0\"]") == 3);
  CHECK(count(dot, "fillcolor") == 3);
  CHECK(dot == export_dot(build_graph(z3_family(0))));
}

TEST_CASE("translation family graph") {
  const auto hol = fx::holomorph({2});
  const auto fam = enumerate_families(hol).front();
  const auto gr = build_graph(fam);
  CHECK(gr.vertices == 1);
  CHECK(loop_labels(gr, 0) == std::set<Elem>{0, 1});
  CHECK(check_graph_props(gr, fam).ok());
  CHECK(export_dot(gr) ==
        "digraph dbrace {\n"
        "  node [shape=circle];\n"
        "  S0 [style=filled, fillcolor=lightgray];\n"
        "  S0 -> S0 [label=\"0,1\"];\n"
        "}\n");
}

TEST_CASE("Z_2 x Z_2 pair of sections") {
  const auto hol = fx::holomorph({2, 2});
  const auto fam = family_of(hol, {fx::v4::lambda1, fx::v4::lambda2});
  const auto gr = build_graph(fam);
  CHECK(loop_labels(gr, 0) == std::set<Elem>{0, 3});  // (0,0),(1,1)
  CHECK(loop_labels(gr, 1) == std::set<Elem>{0, 2});  // (0,0),(1,0)
  CHECK(std::count_if(gr.edges.begin(), gr.edges.end(), [](auto& e) { return e.src == 0 && e.dst == 1; }) == 2);
  CHECK(std::count_if(gr.edges.begin(), gr.edges.end(), [](auto& e) { return e.src == 1 && e.dst == 0; }) == 2);
  const auto dot = export_dot(gr);
  CHECK(dot.find("S0 -> S0 [label=\"(0,0),(1,1)\"]") != std::string::npos);
  CHECK(dot.find("S1 -> S1 [label=\"(0,0),(1,0)\"]") != std::string::npos);
  CHECK(count(dot, "->") == 4);
}

TEST_CASE("vertices outside the image of φ") {
  const auto fam = z3_family(4);
  const auto gr = build_graph(fam);
  const auto l4 = fx::index_of(fam, fx::section(*fam.hol, fx::z3::sections[3]));
  CHECK_FALSE(gr.in_image[l4]);
  CHECK(loop_labels(gr, l4).empty());
  for (std::uint32_t v = 0; v < 4; ++v)
    if (v != l4) CHECK(loop_labels(gr, v).count(0) == 1);
  // arrows leave S_λ4 and never return
  for (const auto& e : gr.edges) CHECK(e.dst != l4);
  CHECK(check_graph_props(gr, fam).ok());
  CHECK(export_dot(gr).find("S" + std::to_string(l4) + ";") != std::string::npos);
}

TEST_CASE("μ family graph is complete") {
  const auto hol = fx::holomorph({2, 2});
  std::vector<std::vector<Images>> secs(fx::v4::mu.begin(), fx::v4::mu.end());
  const auto gr = build_graph(family_of(hol, secs));
  std::set<std::pair<std::uint32_t, std::uint32_t>> arcs;
  for (const auto& e : gr.edges) arcs.insert({e.src, e.dst});
  CHECK(arcs.size() == 16);
  CHECK(check_graph_props(gr).ok());
}

TEST_CASE("property checks catch broken graphs") {
  auto gr = build_graph(z3_family(0));
  for (auto& e : gr.edges)
    if (e.label == 0 && e.src == 0) e.dst = (e.dst + 1) % 3;
  const auto r = check_graph_props(gr);
  CHECK_FALSE(r.passed("image_loops"));
  auto short_gr = build_graph(z3_family(0));
  short_gr.edges.pop_back();
  CHECK_FALSE(check_graph_props(short_gr).passed("edge_count"));
}

TEST_CASE("graph isomorphism does not detect d-brace isomorphism") {
  const auto g4 = build_graph(z3_family(4));
  const auto g5 = build_graph(z3_family(5));
  const auto g6 = build_graph(z3_family(6));
  CHECK(graph_isomorphic(g4, g5));
  CHECK(graph_isomorphic(g4, g6));
  CHECK(graph_isomorphic(g5, g6));
  CHECK_FALSE(dbrace_isomorphic(family_to_dbrace(z3_family(4)), family_to_dbrace(z3_family(5))));
  CHECK(graph_isomorphic(g4, g4, true));
  CHECK_FALSE(graph_isomorphic(build_graph(enumerate_families(fx::holomorph({3})).front()), g4));
}

TEST_CASE("isomorphic d-braces have isomorphic graphs") {
  for (auto orders : std::vector<std::vector<std::uint32_t>>{{3}, {2, 2}, {4}}) {
    const auto fams = enumerate_families(fx::holomorph(orders));
    for (std::size_t i = 0; i < fams.size(); ++i)
      for (std::size_t j = i; j < fams.size(); ++j) {
        if (fams[i].params() != fams[j].params()) continue;
        const auto iso = dbrace_isomorphic(family_to_dbrace(fams[i]), family_to_dbrace(fams[j]));
        if (iso) {
          CHECK(graph_isomorphic(build_graph(fams[i]), build_graph(fams[j])));
          CHECK(graph_isomorphic(build_graph(fams[i]), build_graph(fams[j]), i == j));
        }
      }
  }
}

TEST_CASE("graph isomorphism bound and multiplicities") {
  DBraceGraph big;
  big.vertices = kMaxIsoVertices + 1;
  big.in_image.assign(big.vertices, true);
  CHECK_THROWS_AS(graph_isomorphic(big, big), BoundExceeded);

  // same degree sequence, different multiplicities
  DBraceGraph a, b;
  a.vertices = b.vertices = 2;
  a.in_image = b.in_image = {true, true};
  a.element_names = b.element_names = {"0", "1"};
  a.edges = {{0, 0, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}};
  b.edges = {{0, 0, 0}, {0, 1, 1}, {1, 1, 0}, {1, 0, 1}};
  CHECK_FALSE(graph_isomorphic(a, b));
  CHECK(graph_isomorphic(a, a));
}
