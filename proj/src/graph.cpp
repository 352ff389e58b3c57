#include "dybrace/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dybrace {

DBraceGraph build_graph(const DBraceFamily& fam) {
  const auto& g = fam.hol->group();
  DBraceGraph gr;
  gr.vertices = fam.params();
  gr.in_image.assign(gr.vertices, false);
  for (Elem a = 0; a < g.size(); ++a) gr.element_names.push_back(g.format(a));
  for (std::uint32_t l = 0; l < fam.params(); ++l)
    for (Elem a = 0; a < g.size(); ++a) {
      const auto m = fam.next(l, a);
      gr.edges.push_back({l, m, a});
      gr.in_image[m] = true;
    }
  return gr;
}

namespace {

using EdgeSet = std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Elem>>;

EdgeSet grouped(const DBraceGraph& gr) {
  EdgeSet out;
  for (const auto& e : gr.edges) out[{e.src, e.dst}].push_back(e.label);
  for (auto& [_, labels] : out) std::sort(labels.begin(), labels.end());
  return out;
}

}  // namespace

Report check_graph_props(const DBraceGraph& gr) {
  const auto edges = grouped(gr);
  const auto n = gr.element_names.size();
  Report r;

  CheckResult count("edge_count");
  ++count.evaluated;
  if (gr.edges.size() != gr.vertices * n) count.fail(Witness{{gr.edges.size()}}, 16);

  CheckResult loops("image_loops");
  CheckResult reverse("reverse_edges");
  CheckResult closed("image_closed");
  for (std::uint32_t v = 0; v < gr.vertices; ++v) {
    if (!gr.in_image[v]) continue;
    ++loops.evaluated;
    auto it = edges.find({v, v});
    if (it == edges.end() || it->second.front() != 0) loops.fail(Witness{{v}}, 16);
  }
  for (const auto& e : gr.edges) {
    if (!gr.in_image[e.src]) continue;
    ++reverse.evaluated;
    if (!edges.contains({e.dst, e.src})) reverse.fail(Witness{{e.src, e.label}}, 16);
    ++closed.evaluated;
    if (!gr.in_image[e.dst]) closed.fail(Witness{{e.src, e.label}}, 16);
  }
  r.add(std::move(count));
  r.add(std::move(loops));
  r.add(std::move(reverse));
  r.add(std::move(closed));
  return r;
}

Report check_graph_props(const DBraceGraph& gr, const DBraceFamily& fam) {
  Report r = check_graph_props(gr);
  CheckResult core("core_matches");
  ++core.evaluated;
  const auto zs = zero_symmetric_core(fam);
  // Each image vertex must be a core section; rank[v] is its index in the core.
  std::size_t image = 0;
  std::vector<std::uint32_t> rank(gr.vertices, 0);
  bool same = gr.vertices == fam.params();
  for (std::uint32_t v = 0; same && v < gr.vertices; ++v) {
    if (!gr.in_image[v]) continue;
    ++image;
    const auto it = std::find(zs.sections.begin(), zs.sections.end(), fam.sections[v]);
    same = it != zs.sections.end();
    if (same) rank[v] = static_cast<std::uint32_t>(it - zs.sections.begin());
  }
  same = same && image == zs.params();
  for (const auto& e : gr.edges) {
    if (!same) break;
    if (gr.in_image[e.src]) same = gr.in_image[e.dst] && zs.next(rank[e.src], e.label) == rank[e.dst];
  }
  if (!same) core.fail(Witness{{image}}, 16);
  r.add(std::move(core));
  return r;
}

namespace {

struct IsoSearch {
  std::size_t n;
  // weight[u][v]: edge multiplicity, or the label list when labeled
  std::vector<std::vector<std::vector<Elem>>> w1, w2;
  std::vector<std::uint32_t> map;
  std::vector<bool> used;

  bool extend(std::uint32_t u) {
    if (u == n) return true;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = w1[u][u] == w2[v][v];
      for (std::uint32_t x = 0; ok && x < u; ++x)
        ok = w1[u][x] == w2[v][map[x]] && w1[x][u] == w2[map[x]][v];
      if (!ok) continue;
      used[v] = true;
      map[u] = v;
      if (extend(u + 1)) return true;
      used[v] = false;
    }
    return false;
  }
};

std::vector<std::vector<std::vector<Elem>>> weights(const DBraceGraph& g, bool labeled) {
  std::vector<std::vector<std::vector<Elem>>> w(g.vertices, std::vector<std::vector<Elem>>(g.vertices));
  for (const auto& e : g.edges) w[e.src][e.dst].push_back(labeled ? e.label : 0);
  for (auto& row : w)
    for (auto& cell : row) std::sort(cell.begin(), cell.end());
  return w;
}

}  // namespace

bool graph_isomorphic(const DBraceGraph& g1, const DBraceGraph& g2, bool labeled) {
  if (g1.vertices > kMaxIsoVertices || g2.vertices > kMaxIsoVertices)
    throw BoundExceeded("graph isomorphism is limited to 10 vertices");
  if (g1.vertices != g2.vertices || g1.edges.size() != g2.edges.size()) return false;
  if (labeled && g1.element_names != g2.element_names) return false;
  IsoSearch s{g1.vertices, weights(g1, labeled), weights(g2, labeled),
              std::vector<std::uint32_t>(g1.vertices), std::vector<bool>(g1.vertices)};
  return s.extend(0);
}

std::string export_dot(const DBraceGraph& gr) {
  std::ostringstream out;
  out << "digraph dbrace {\n";
  out << "  node [shape=circle];\n";
  for (std::uint32_t v = 0; v < gr.vertices; ++v) {
    out << "  S" << v;
    if (gr.in_image[v]) out << " [style=filled, fillcolor=lightgray]";
    out << ";\n";
  }
  for (const auto& [ends, labels] : grouped(gr)) {
    out << "  S" << ends.first << " -> S" << ends.second << " [label=\"";
    for (std::size_t i = 0; i < labels.size(); ++i)
      out << (i ? "," : "") << gr.element_names[labels[i]];
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dybrace
