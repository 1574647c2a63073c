#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "annular/model.hpp"

namespace annular {

// ---------------------------------------------------------------------------
// Necklaces and linear matchings
// ---------------------------------------------------------------------------

/// Reads a maximal cross-cut matching (m = 0) around the outer boundary:
/// 'W' at each half-circle's left endpoint, 'B' at right endpoints and at
/// cross-cut endpoints. Throws std::invalid_argument when m != 0.
Necklace to_necklace(const AnnularMatching& matching);

/// Inverse of to_necklace. Each 'W' bead is joined to the first free 'B'
/// bead counter-clockwise; leftover 'B' beads become cross-cuts. Throws
/// std::invalid_argument for beads other than B/W or more W than B.
AnnularMatching from_necklace(const Necklace& necklace);

/// Dyck word read from the outer boundary of an element of Ann_1(2n+1, 1),
/// cut open at the cross-cut. Throws unless k = 1 and m = 0.
DyckWord to_linear(const AnnularMatching& matching);
AnnularMatching from_linear(const DyckWord& word);

/// Exchanges the two boundaries. An involution on canonical matchings.
AnnularMatching reflect(const AnnularMatching& matching);

/// (matching without inner half-circles, matching without outer half-circles).
std::pair<AnnularMatching, AnnularMatching> split(const AnnularMatching& matching);

// ---------------------------------------------------------------------------
// Planar graphs
// ---------------------------------------------------------------------------

/// Combinatorial embedding. Edge e owns two ends: 2e at edges[e].first and
/// 2e+1 at edges[e].second. rotation[v] lists the ends at v in
/// counter-clockwise order (a cyclic sequence). Loops and parallel edges are
/// allowed, which the 1- and 2-cycles need.
struct PlanarGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> rotation;
  /// Tree case: the vertex for the region touching the inner boundary.
  std::optional<std::size_t> distinguished;
  /// Unicyclic case: the end leaving cycle vertex i towards vertex i + 1.
  std::vector<std::size_t> cycle;

  std::size_t vertex_of_end(std::size_t end) const {
    return end % 2 == 0 ? edges[end / 2].first : edges[end / 2].second;
  }
};

/// Structural facts that the unicyclic correspondence guarantees.
struct GraphSummary {
  bool connected = false;
  std::size_t vertices = 0;
  std::size_t edge_count = 0;
  /// Independent cycles (edges - vertices + components).
  std::size_t cycle_rank = 0;
  std::size_t cycle_length = 0;
  std::size_t interior_edges = 0;
  std::size_t exterior_edges = 0;
};

/// Regions-to-vertices map. With k >= 1 the k cross-cuts become a directed
/// k-cycle; outer half-circles become edges inside the cycle and inner
/// half-circles edges outside it. With k = 0 and m = 0 the result is a tree
/// whose distinguished vertex is the region touching the inner boundary.
/// Throws std::invalid_argument for k = 0 with m > 0.
PlanarGraph to_graph(const AnnularMatching& matching);

/// Inverse of to_graph. Throws std::invalid_argument when the graph is
/// malformed: disconnected, bad rotation system, more than one cycle, or a
/// cycle marker that is not the graph's cycle.
AnnularMatching from_graph(const PlanarGraph& graph);

/// to_graph restricted to Ann(2n, 0).
PlanarGraph to_tree(const AnnularMatching& matching);

GraphSummary summarize(const PlanarGraph& graph);

/// Canonical string for a marked graph: equal exactly when two graphs are
/// isomorphic as rotation systems respecting the markers.
std::string graph_signature(const PlanarGraph& graph);

/// JSON form: {"schema":"annular-graph/1","vertices":V,"edges":[[u,v],...],
/// "rotation":[[end,...],...],"distinguished":v|null,"cycle":[end,...]}.
std::string graph_to_json(const PlanarGraph& graph);
PlanarGraph graph_from_json(std::string_view json);

}  // namespace annular
