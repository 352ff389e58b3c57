#pragma once

// The directed multigraph of a d-brace: one vertex per parameter and one edge
// λ -> φ(λ,a) labelled a for every (λ,a).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dybrace/dbrace.hpp"
#include "dybrace/report.hpp"

namespace dybrace {

struct GraphEdge {
  std::uint32_t src = 0;
  std::uint32_t dst = 0;
  Elem label = 0;
  auto operator<=>(const GraphEdge&) const = default;
};

struct DBraceGraph {
  std::size_t vertices = 0;
  std::vector<GraphEdge> edges;            // ordered by (src, label)
  std::vector<bool> in_image;              // vertex lies in Im φ
  std::vector<std::string> element_names;  // label formatting
};

constexpr std::size_t kMaxIsoVertices = 10;

DBraceGraph build_graph(const DBraceFamily& fam);

/// Checks: edge_count, image_loops (a loop labelled 0 at every Im φ vertex),
/// reverse_edges (every edge leaving Im φ can be reversed), image_closed
/// (edges out of Im φ stay in Im φ).
Report check_graph_props(const DBraceGraph& gr);
/// Adds core_matches: the Im φ subgraph is the graph of zero_symmetric_core.
Report check_graph_props(const DBraceGraph& gr, const DBraceFamily& fam);

/// Directed multigraph isomorphism; labels are ignored unless `labeled`.
/// Throws BoundExceeded above kMaxIsoVertices vertices.
bool graph_isomorphic(const DBraceGraph& g1, const DBraceGraph& g2, bool labeled = false);

/// Parallel edges are merged into one arc labelled with the sorted,
/// comma-joined element names; Im φ vertices are filled.
std::string export_dot(const DBraceGraph& gr);

}  // namespace dybrace
