#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "evolalg/exactla.hpp"

namespace evolalg {

class EvolutionAlgebra;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<std::size_t>;

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Directed graph on {0..n-1} without parallel edges. adj(i) lists the
/// targets of i in increasing order.
class DiGraph {
 public:
  DiGraph() = default;
  explicit DiGraph(std::size_t n) : adj_(n) {}

  /// Edge i -> j whenever structure(j, i) != 0.
  static DiGraph from_structure(const Mat& structure);
  static DiGraph from_edges(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const;
  const std::vector<std::size_t>& targets(std::size_t v) const { return adj_[v]; }
  bool has_edge(std::size_t from, std::size_t to) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  DiGraph reversed() const;

  friend bool operator==(const DiGraph&, const DiGraph&) = default;

 private:
  std::vector<std::vector<std::size_t>> adj_;
};

DiGraph from_algebra(const EvolutionAlgebra& algebra);

VertexSet sinks(const DiGraph& g);
bool is_sinkless(const DiGraph& g);

/// Everything reachable from S by a path of length >= 0 (so S itself is
/// included).
VertexSet reach(const DiGraph& g, std::span<const std::size_t> start);
VertexSet reach(const DiGraph& g, std::size_t vertex);
VertexSet hereditary_closure(const DiGraph& g, std::span<const std::size_t> start);
bool is_hereditary(const DiGraph& g, std::span<const std::size_t> subset);

inline constexpr std::size_t kDefaultHereditaryBound = 20;

/// All hereditary subsets, smallest first (ties broken lexicographically).
/// Throws BoundExceeded when the graph has more than `bound` vertices.
std::vector<VertexSet> hereditary_subsets(const DiGraph& g, std::size_t bound = kDefaultHereditaryBound);

/// Any two vertices reach a common vertex.
bool is_downward_directed(const DiGraph& g);

/// Connected components of the underlying undirected graph: blocks sorted,
/// ordered by least vertex.
std::vector<VertexSet> components(const DiGraph& g);

struct SinkStrata {
  std::vector<VertexSet> strata;
  VertexSet residue;

  VertexSet stratified() const;
};

/// Peels sinks round by round until the remaining graph is sinkless.
SinkStrata sink_strata(const DiGraph& g);

/// Induced subgraph on the vertices outside `removed`, renumbered in
/// increasing order of the surviving original indices.
DiGraph quotient(const DiGraph& g, std::span<const std::size_t> removed);
/// Surviving original indices for quotient(g, removed).
VertexSet complement(std::size_t n, std::span<const std::size_t> removed);

/// Every vertex has exactly one outgoing edge and it is a loop.
bool is_isolated_loops(const DiGraph& g);

/// Deterministic Graphviz text; `labels` must have one entry per vertex.
std::string to_dot(const DiGraph& g, std::span<const std::string> labels);

// Bitmask helpers for enumeration code on small graphs (n <= 32).
std::uint32_t to_mask(std::span<const std::size_t> set);
VertexSet from_mask(std::uint32_t mask);
/// closure_masks()[v] is the reach of v as a bitmask. Requires n <= 32.
std::vector<std::uint32_t> closure_masks(const DiGraph& g);

}  // namespace evolalg
