#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heisenspec/extended.hpp"

namespace heisenspec {

/// Vertex labels are 0-based inside the library. Text formats and printed
/// reports use 1-based labels; conversion happens only at that boundary.
using Vertex = std::uint32_t;

/// Unordered pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted set of distinct vertices.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts `members`; throws ValidationError on duplicates.
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

  /// Builds from 1-based labels, checking 1 <= label <= n.
  static VertexSet from_labels(std::span<const long long> labels, std::size_t n);

  std::span<const Vertex> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  /// Membership bitmap of length n.
  std::vector<bool> indicator(std::size_t n) const;
  /// Members as 1-based labels.
  std::vector<long long> labels() const;

  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// "{1,2,5}" with 1-based labels.
std::string to_string(const VertexSet& set);

/// Undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  /// Throws ValidationError on self-loops, duplicates and out-of-range ends.
  Graph(std::size_t n, std::vector<Edge> edges);
  explicit Graph(std::size_t n) : Graph(n, {}) {}

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.order() == b.order(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Parses "n m" followed by m lines "u v" (1-based). Blank lines are ignored.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);
std::string format_graph(const Graph& g);

namespace generators {
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
/// Vertex 0 is the hub.
Graph star(std::size_t n);
/// Erdos-Renyi G(n, p) from a seeded mt19937_64.
Graph random(std::size_t n, double p, std::uint64_t seed);
/// Rejection-samples G(n, p) until connected.
Graph random_connected(std::size_t n, double p, std::uint64_t seed);
}  // namespace generators

/// Pairwise hop distances; unreachable pairs are infinite.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), entries_(n * n, ExtendedInt::infinity()) {}

  std::size_t order() const { return n_; }
  ExtendedInt operator()(Vertex a, Vertex b) const { return entries_[a * n_ + b]; }
  ExtendedInt& operator()(Vertex a, Vertex b) { return entries_[a * n_ + b]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExtendedInt> entries_;
};

/// BFS from every vertex, O(n (n + m)).
DistanceMatrix all_pairs_distances(const Graph& g);
/// Single-source BFS; unreachable vertices are infinite.
std::vector<ExtendedInt> bfs_distances(const Graph& g, Vertex source);

struct Boundary {
  std::vector<Edge> edges;
  std::size_t size() const { return edges.size(); }
};

/// Edges with exactly one endpoint in `set`.
Boundary edge_boundary(const Graph& g, const VertexSet& set);
/// |edge_boundary(g, set)| without materializing the edges.
std::size_t boundary_size(const Graph& g, const VertexSet& set);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the label in the parent graph of vertex i.
  std::vector<Vertex> original;
};

/// Deletes `removed` and relabels the survivors in increasing order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& removed);

struct DegreeProfile {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::vector<std::size_t> degrees;
  std::size_t volume = 0;  // sum of degrees, 2m
};

DegreeProfile degree_profile(const Graph& g);

/// Components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace heisenspec
