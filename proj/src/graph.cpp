#include "evolalg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "evolalg/algebra.hpp"

namespace evolalg {

DiGraph DiGraph::from_structure(const Mat& structure) {
  if (!structure.is_square()) throw DimensionError("structure matrix must be square");
  const std::size_t n = structure.rows();
  DiGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (structure(j, i) != 0) g.adj_[i].push_back(j);
  return g;
}

DiGraph DiGraph::from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  DiGraph g(n);
  for (auto [from, to] : edges) {
    if (from >= n || to >= n) throw DimensionError("edge endpoint out of range");
    g.adj_[from].push_back(to);
  }
  for (auto& targets : g.adj_) {
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  }
  return g;
}

std::size_t DiGraph::edge_count() const {
  std::size_t count = 0;
  for (const auto& t : adj_) count += t.size();
  return count;
}

bool DiGraph::has_edge(std::size_t from, std::size_t to) const {
  const auto& t = adj_[from];
  return std::binary_search(t.begin(), t.end(), to);
}

std::vector<std::pair<std::size_t, std::size_t>> DiGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t v = 0; v < adj_.size(); ++v)
    for (auto w : adj_[v]) out.emplace_back(v, w);
  return out;
}

DiGraph DiGraph::reversed() const {
  std::vector<std::pair<std::size_t, std::size_t>> flipped;
  for (auto [v, w] : edges()) flipped.emplace_back(w, v);
  return from_edges(vertex_count(), flipped);
}

DiGraph from_algebra(const EvolutionAlgebra& algebra) { return DiGraph::from_structure(algebra.structure()); }

VertexSet sinks(const DiGraph& g) {
  VertexSet out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.targets(v).empty()) out.push_back(v);
  return out;
}

bool is_sinkless(const DiGraph& g) { return sinks(g).empty(); }

VertexSet reach(const DiGraph& g, std::span<const std::size_t> start) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> stack;
  for (auto s : start) {
    if (s >= g.vertex_count()) throw DimensionError("vertex out of range");
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : g.targets(v))
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  VertexSet out;
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

VertexSet reach(const DiGraph& g, std::size_t vertex) {
  const std::size_t start[] = {vertex};
  return reach(g, start);
}

VertexSet hereditary_closure(const DiGraph& g, std::span<const std::size_t> start) { return reach(g, start); }

bool is_hereditary(const DiGraph& g, std::span<const std::size_t> subset) {
  std::vector<bool> inside(g.vertex_count(), false);
  for (auto v : subset) {
    if (v >= g.vertex_count()) throw DimensionError("vertex out of range");
    inside[v] = true;
  }
  for (auto v : subset)
    for (auto w : g.targets(v))
      if (!inside[w]) return false;
  return true;
}

std::uint32_t to_mask(std::span<const std::size_t> set) {
  std::uint32_t mask = 0;
  for (auto v : set) {
    if (v >= 32) throw BoundExceeded("vertex index too large for a 32-bit mask");
    mask |= std::uint32_t{1} << v;
  }
  return mask;
}

VertexSet from_mask(std::uint32_t mask) {
  VertexSet out;
  for (std::size_t v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

std::vector<std::uint32_t> closure_masks(const DiGraph& g) {
  if (g.vertex_count() > 32) throw BoundExceeded("closure masks need at most 32 vertices");
  std::vector<std::uint32_t> out(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out[v] = to_mask(reach(g, v));
  return out;
}

std::vector<VertexSet> hereditary_subsets(const DiGraph& g, std::size_t bound) {
  const std::size_t n = g.vertex_count();
  if (n > bound || n > 31)
    throw BoundExceeded("hereditary subset enumeration limited to " + std::to_string(std::min<std::size_t>(bound, 31)) +
                        " vertices, graph has " + std::to_string(n));
  // Hereditary sets are exactly the unions of vertex closures.
  const auto closures = closure_masks(g);
  std::unordered_set<std::uint32_t> seen{0};
  std::vector<std::uint32_t> found{0};
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t existing = found.size();
    for (std::size_t k = 0; k < existing; ++k) {
      const std::uint32_t joined = found[k] | closures[v];
      if (seen.insert(joined).second) found.push_back(joined);
    }
  }
  std::vector<VertexSet> out;
  out.reserve(found.size());
  for (auto m : found) out.push_back(from_mask(m));
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool is_downward_directed(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> reachable(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v)
    for (auto w : reach(g, v)) reachable[v][w] = true;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      bool common = false;
      for (std::size_t z = 0; z < n && !common; ++z) common = reachable[u][z] && reachable[v][z];
      if (!common) return false;
    }
  return true;
}

std::vector<VertexSet> components(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [v, w] : g.edges()) {
    const auto a = find(v);
    const auto b = find(w);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<VertexSet> blocks;
  std::vector<std::size_t> block_of_root(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto root = find(v);
    if (block_of_root[root] == n) {
      block_of_root[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of_root[root]].push_back(v);
  }
  return blocks;
}

VertexSet SinkStrata::stratified() const {
  VertexSet out;
  for (const auto& s : strata) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

SinkStrata sink_strata(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> removed(n, false);
  SinkStrata result;
  while (true) {
    VertexSet layer;
    for (std::size_t v = 0; v < n; ++v) {
      if (removed[v]) continue;
      const auto& t = g.targets(v);
      if (std::none_of(t.begin(), t.end(), [&](std::size_t w) { return !removed[w]; })) layer.push_back(v);
    }
    if (layer.empty()) break;
    for (auto v : layer) removed[v] = true;
    result.strata.push_back(std::move(layer));
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!removed[v]) result.residue.push_back(v);
  return result;
}

VertexSet complement(std::size_t n, std::span<const std::size_t> removed) {
  std::vector<bool> gone(n, false);
  for (auto v : removed) {
    if (v >= n) throw DimensionError("vertex out of range");
    gone[v] = true;
  }
  VertexSet kept;
  for (std::size_t v = 0; v < n; ++v)
    if (!gone[v]) kept.push_back(v);
  return kept;
}

DiGraph quotient(const DiGraph& g, std::span<const std::size_t> removed) {
  const auto kept = complement(g.vertex_count(), removed);
  std::vector<std::size_t> new_index(g.vertex_count(), g.vertex_count());
  for (std::size_t k = 0; k < kept.size(); ++k) new_index[kept[k]] = k;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [v, w] : g.edges())
    if (new_index[v] != g.vertex_count() && new_index[w] != g.vertex_count()) edges.emplace_back(new_index[v], new_index[w]);
  return DiGraph::from_edges(kept.size(), edges);
}

bool is_isolated_loops(const DiGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& t = g.targets(v);
    if (t.size() != 1 || t.front() != v) return false;
  }
  return true;
}

std::string to_dot(const DiGraph& g, std::span<const std::string> labels) {
  if (labels.size() != g.vertex_count()) throw DimensionError("one label per vertex required");
  auto quoted = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream out;
  out << "digraph E {\n";
  for (const auto& label : labels) out << "  " << quoted(label) << ";\n";
  for (auto [v, w] : g.edges()) out << "  " << quoted(labels[v]) << " -> " << quoted(labels[w]) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace evolalg
