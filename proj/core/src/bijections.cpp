#include "annular/bijections.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace annular {

// --- necklaces, linear, reflect, split ---------------------------------------

Necklace to_necklace(const AnnularMatching& matching) {
  if (matching.inner_halfcircles() != 0) {
    throw std::invalid_argument("to_necklace: matching has inner half-circles");
  }
  std::string beads;
  if (matching.crosscuts() == 0) {
    for (char c : matching.outer_necklace().word()) beads += c == 'L' ? 'W' : 'B';
  } else {
    for (const auto& cell : matching.cells()) {
      beads += 'B';
      for (char c : cell.outer.letters()) beads += c == 'U' ? 'W' : 'B';
    }
  }
  return Necklace(beads);
}

AnnularMatching from_necklace(const Necklace& necklace) {
  const std::string& beads = necklace.word();
  if (beads.find_first_not_of("BW") != std::string::npos) {
    throw std::invalid_argument("from_necklace: beads must be B or W");
  }
  const std::size_t white = necklace.count('W');
  const std::size_t black = necklace.count('B');
  if (white > black) throw std::invalid_argument("from_necklace: more white than black beads");
  if (white == black) {
    std::string word;
    for (char c : beads) word += c == 'W' ? 'L' : 'R';
    return AnnularMatching::from_words(word, "");
  }
  std::vector<std::size_t> left;
  for (std::size_t i = 0; i < beads.size(); ++i) {
    if (beads[i] == 'W') left.push_back(i);
  }
  return matching_from_leftset(left, beads.size(), {}, black - white, 0);
}

DyckWord to_linear(const AnnularMatching& matching) {
  if (matching.crosscuts() != 1) throw std::invalid_argument("to_linear: needs exactly one cross-cut");
  if (matching.inner_halfcircles() != 0) {
    throw std::invalid_argument("to_linear: matching has inner half-circles");
  }
  return matching.cells().front().outer;
}

AnnularMatching from_linear(const DyckWord& word) {
  if (!word.is_valid()) throw std::invalid_argument("from_linear: not a Dyck word");
  return AnnularMatching::from_cells({GapCell{word, DyckWord()}});
}

AnnularMatching reflect(const AnnularMatching& matching) {
  if (matching.crosscuts() == 0) {
    return AnnularMatching::from_words(matching.inner_necklace().word(),
                                       matching.outer_necklace().word());
  }
  std::vector<GapCell> cells;
  for (const auto& c : matching.cells()) cells.push_back({c.inner, c.outer});
  return AnnularMatching::from_cells(std::move(cells));
}

std::pair<AnnularMatching, AnnularMatching> split(const AnnularMatching& matching) {
  if (matching.crosscuts() == 0) {
    return {AnnularMatching::from_words(matching.outer_necklace().word(), ""),
            AnnularMatching::from_words("", matching.inner_necklace().word())};
  }
  std::vector<GapCell> outer_only;
  std::vector<GapCell> inner_only;
  for (const auto& c : matching.cells()) {
    outer_only.push_back({c.outer, DyckWord()});
    inner_only.push_back({DyckWord(), c.inner});
  }
  return {AnnularMatching::from_cells(std::move(outer_only)),
          AnnularMatching::from_cells(std::move(inner_only))};
}

// --- graphs -------------------------------------------------------------------

namespace {

class GraphBuilder {
 public:
  std::size_t add_vertex() {
    graph_.rotation.emplace_back();
    return graph_.vertex_count++;
  }

  // Returns the edge id; ends are appended to the rotations of u and v.
  std::size_t add_edge(std::size_t u, std::size_t v) {
    const std::size_t e = graph_.edges.size();
    graph_.edges.emplace_back(u, v);
    graph_.rotation[u].push_back(2 * e);
    graph_.rotation[v].push_back(2 * e + 1);
    return e;
  }

  // Hangs the ordered forest of a Dyck word from `root`, appending the top
  // level ends to root's rotation in word order.
  void add_forest(std::size_t root, std::string_view word, char open) {
    std::vector<std::size_t> path{root};
    for (char c : word) {
      if (c == open) {
        const std::size_t child = add_vertex();
        add_edge(path.back(), child);
        path.push_back(child);
      } else {
        path.pop_back();
      }
    }
  }

  PlanarGraph& graph() { return graph_; }

 private:
  PlanarGraph graph_;
};

// Rotation of a balanced cyclic L/R word that reads as a Dyck word.
std::string dyck_rotation(const std::string& word) {
  long height = 0;
  long lowest = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    height += word[i] == 'L' ? 1 : -1;
    if (height < lowest) {
      lowest = height;
      start = i + 1;
    }
  }
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) out += word[(start + i) % word.size()];
  return out;
}

void check_rotation_system(const PlanarGraph& g) {
  if (g.rotation.size() != g.vertex_count) {
    throw std::invalid_argument("graph: rotation list count differs from vertex count");
  }
  std::vector<int> seen(2 * g.edges.size(), 0);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    for (std::size_t end : g.rotation[v]) {
      if (end >= seen.size()) throw std::invalid_argument("graph: rotation names a missing edge end");
      if (g.vertex_of_end(end) != v) throw std::invalid_argument("graph: edge end listed at the wrong vertex");
      ++seen[end];
    }
  }
  for (const auto& [u, v] : g.edges) {
    if (u >= g.vertex_count || v >= g.vertex_count) throw std::invalid_argument("graph: edge to missing vertex");
  }
  if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) {
    throw std::invalid_argument("graph: every edge end must appear exactly once in the rotations");
  }
}

std::size_t component_count(const PlanarGraph& g) {
  std::vector<std::size_t> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::size_t components = g.vertex_count;
  for (const auto& [u, v] : g.edges) {
    const auto a = find(u);
    const auto b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

// Position of `end` in rotation list `rot`.
std::size_t index_in(const std::vector<std::size_t>& rot, std::size_t end) {
  const auto it = std::find(rot.begin(), rot.end(), end);
  if (it == rot.end()) throw std::invalid_argument("graph: end missing from rotation");
  return static_cast<std::size_t>(it - rot.begin());
}

// Reads the subtree reached through `entry` (an end at the child vertex) as
// a Dyck word with the given letters. Children are the ends following
// `entry` counter-clockwise. `used` guards against revisiting vertices.
std::string read_subtree(const PlanarGraph& g, std::size_t entry, std::vector<bool>& used,
                         char open, char close) {
  const std::size_t v = g.vertex_of_end(entry);
  if (used[v]) throw std::invalid_argument("graph: forest part contains a cycle");
  used[v] = true;
  const auto& rot = g.rotation[v];
  const std::size_t at = index_in(rot, entry);
  std::string word;
  for (std::size_t step = 1; step < rot.size(); ++step) {
    const std::size_t out = rot[(at + step) % rot.size()];
    word += open;
    word += read_subtree(g, out ^ 1U, used, open, close);
    word += close;
  }
  return word;
}

// Forest word of the sector strictly between rotation positions from and to.
std::string read_sector(const PlanarGraph& g, std::size_t v, std::size_t from, std::size_t to,
                        std::vector<bool>& used, char open, char close) {
  const auto& rot = g.rotation[v];
  std::string word;
  for (std::size_t p = (from + 1) % rot.size(); p != to; p = (p + 1) % rot.size()) {
    word += open;
    word += read_subtree(g, rot[p] ^ 1U, used, open, close);
    word += close;
  }
  return word;
}

struct CycleSectors {
  std::vector<std::string> interior;
  std::vector<std::string> exterior;
};

CycleSectors read_cycle(const PlanarGraph& g) {
  const std::size_t k = g.cycle.size();
  std::vector<std::size_t> cycle_vertex(k);
  std::vector<bool> used(g.vertex_count, false);
  std::vector<bool> cycle_edge(g.edges.size(), false);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t end = g.cycle[i];
    if (end >= 2 * g.edges.size()) throw std::invalid_argument("graph: cycle names a missing end");
    if (cycle_edge[end / 2]) throw std::invalid_argument("graph: cycle repeats an edge");
    cycle_edge[end / 2] = true;
    cycle_vertex[i] = g.vertex_of_end(end);
    if (used[cycle_vertex[i]]) throw std::invalid_argument("graph: cycle repeats a vertex");
    used[cycle_vertex[i]] = true;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (g.vertex_of_end(g.cycle[i] ^ 1U) != cycle_vertex[(i + 1) % k]) {
      throw std::invalid_argument("graph: cycle marker does not close up");
    }
  }
  CycleSectors s;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t v = cycle_vertex[i];
    const std::size_t out = index_in(g.rotation[v], g.cycle[i]);
    const std::size_t in = index_in(g.rotation[v], g.cycle[(i + k - 1) % k] ^ 1U);
    s.interior.push_back(read_sector(g, v, out, in, used, 'U', 'D'));
    s.exterior.push_back(read_sector(g, v, in, out, used, 'U', 'D'));
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw std::invalid_argument("graph: disconnected");
  }
  return s;
}

std::string read_tree(const PlanarGraph& g, std::size_t root, std::size_t start) {
  std::vector<bool> used(g.vertex_count, false);
  used[root] = true;
  const auto& rot = g.rotation[root];
  std::string word;
  for (std::size_t step = 0; step < rot.size(); ++step) {
    word += 'L';
    word += read_subtree(g, rot[(start + step) % rot.size()] ^ 1U, used, 'L', 'R');
    word += 'R';
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw std::invalid_argument("graph: disconnected");
  }
  return word;
}

void check_unicyclic(const PlanarGraph& g) {
  check_rotation_system(g);
  if (g.cycle.empty()) throw std::invalid_argument("graph: missing cycle marker");
  if (g.edges.size() != g.vertex_count) {
    throw std::invalid_argument("graph: a unicyclic graph has as many edges as vertices");
  }
  if (component_count(g) != 1) throw std::invalid_argument("graph: disconnected");
}

void check_tree(const PlanarGraph& g) {
  check_rotation_system(g);
  if (!g.distinguished || *g.distinguished >= g.vertex_count) {
    throw std::invalid_argument("graph: tree needs a distinguished vertex");
  }
  if (g.edges.size() + 1 != g.vertex_count) {
    throw std::invalid_argument("graph: a tree has one edge fewer than vertices");
  }
  if (component_count(g) != 1) throw std::invalid_argument("graph: disconnected");
}

}  // namespace

PlanarGraph to_graph(const AnnularMatching& matching) {
  GraphBuilder b;
  const std::size_t k = matching.crosscuts();
  if (k == 0) {
    if (matching.inner_halfcircles() != 0) {
      throw std::invalid_argument("to_graph: no graph form for k = 0 with inner half-circles");
    }
    const std::size_t root = b.add_vertex();
    b.add_forest(root, dyck_rotation(matching.outer_necklace().word()), 'L');
    b.graph().distinguished = root;
    return std::move(b.graph());
  }
  for (std::size_t i = 0; i < k; ++i) b.add_vertex();
  // Edge i runs from cycle vertex i to i+1; its ends 2i (out) and 2i+1 (in).
  for (std::size_t i = 0; i < k; ++i) b.add_edge(i, (i + 1) % k);
  PlanarGraph& g = b.graph();
  for (auto& rot : g.rotation) rot.clear();
  for (std::size_t i = 0; i < k; ++i) g.cycle.push_back(2 * i);
  // Rotation at cycle vertex i: out end, interior forest, in end, exterior forest.
  for (std::size_t i = 0; i < k; ++i) {
    const auto& cell = matching.cells()[i];
    g.rotation[i].push_back(2 * i);
    b.add_forest(i, cell.outer.letters(), 'U');
    g.rotation[i].push_back(2 * ((i + k - 1) % k) + 1);
    b.add_forest(i, cell.inner.letters(), 'U');
  }
  return std::move(g);
}

AnnularMatching from_graph(const PlanarGraph& g) {
  if (!g.cycle.empty()) {
    check_unicyclic(g);
    const CycleSectors s = read_cycle(g);
    std::vector<GapCell> cells;
    for (std::size_t i = 0; i < g.cycle.size(); ++i) {
      cells.push_back({DyckWord(s.interior[i]), DyckWord(s.exterior[i])});
    }
    return AnnularMatching::from_cells(std::move(cells));
  }
  check_tree(g);
  return AnnularMatching::from_words(read_tree(g, *g.distinguished, 0), "");
}

PlanarGraph to_tree(const AnnularMatching& matching) {
  if (matching.crosscuts() != 0 || matching.inner_halfcircles() != 0) {
    throw std::invalid_argument("to_tree: matching must lie in Ann(2n, 0)");
  }
  return to_graph(matching);
}

GraphSummary summarize(const PlanarGraph& g) {
  GraphSummary s;
  s.vertices = g.vertex_count;
  s.edge_count = g.edges.size();
  const std::size_t components = g.vertex_count == 0 ? 0 : component_count(g);
  s.connected = components == 1;
  s.cycle_rank = s.edge_count + components - s.vertices;
  s.cycle_length = g.cycle.size();
  if (!g.cycle.empty()) {
    const CycleSectors sectors = read_cycle(g);
    for (const auto& w : sectors.interior) s.interior_edges += w.size() / 2;
    for (const auto& w : sectors.exterior) s.exterior_edges += w.size() / 2;
  } else {
    s.interior_edges = s.edge_count;
  }
  return s;
}

std::string graph_signature(const PlanarGraph& g) {
  if (!g.cycle.empty()) {
    check_unicyclic(g);
    const CycleSectors s = read_cycle(g);
    const std::size_t k = g.cycle.size();
    std::string best;
    for (std::size_t start = 0; start < k; ++start) {
      std::string sig = "cycle:";
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = (start + i) % k;
        sig += "[" + s.interior[j] + "/" + s.exterior[j] + "]";
      }
      if (best.empty() || sig < best) best = sig;
    }
    return best;
  }
  check_tree(g);
  const std::size_t degree = g.rotation[*g.distinguished].size();
  std::string best = "tree:" + read_tree(g, *g.distinguished, 0);
  for (std::size_t start = 1; start < degree; ++start) {
    best = std::min(best, "tree:" + read_tree(g, *g.distinguished, start));
  }
  return best;
}

std::string graph_to_json(const PlanarGraph& g) {
  nlohmann::json j;
  j["schema"] = "annular-graph/1";
  j["vertices"] = g.vertex_count;
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges) j["edges"].push_back({u, v});
  j["rotation"] = g.rotation;
  j["distinguished"] = g.distinguished ? nlohmann::json(*g.distinguished) : nlohmann::json(nullptr);
  j["cycle"] = g.cycle;
  return j.dump();
}

PlanarGraph graph_from_json(std::string_view text) {
  PlanarGraph g;
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("schema") != "annular-graph/1") throw std::invalid_argument("graph json: unknown schema");
    g.vertex_count = j.at("vertices").get<std::size_t>();
    for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    g.rotation = j.at("rotation").get<std::vector<std::vector<std::size_t>>>();
    if (!j.at("distinguished").is_null()) g.distinguished = j.at("distinguished").get<std::size_t>();
    g.cycle = j.at("cycle").get<std::vector<std::size_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph json: ") + e.what());
  }
  return g;
}

}  // namespace annular
