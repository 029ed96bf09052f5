#include "heisenspec/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <random>
#include <sstream>

#include "heisenspec/errors.hpp"

namespace heisenspec {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw ValidationError("vertex set contains a repeated vertex");
  }
}

VertexSet VertexSet::from_labels(std::span<const long long> labels, std::size_t n) {
  std::vector<Vertex> members;
  members.reserve(labels.size());
  for (long long label : labels) {
    if (label < 1 || static_cast<unsigned long long>(label) > n) {
      throw ValidationError("vertex label " + std::to_string(label) + " outside 1.." +
                            std::to_string(n));
    }
    members.push_back(static_cast<Vertex>(label - 1));
  }
  return VertexSet(std::move(members));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<bool> VertexSet::indicator(std::size_t n) const {
  std::vector<bool> bits(n, false);
  for (Vertex v : members_) bits.at(v) = true;
  return bits;
}

std::vector<long long> VertexSet::labels() const {
  std::vector<long long> out;
  out.reserve(members_.size());
  for (Vertex v : members_) out.push_back(static_cast<long long>(v) + 1);
  return out;
}

std::string to_string(const VertexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i] + 1);
  }
  return out + "}";
}

Graph::Graph(std::size_t n, std::vector<Edge> edges) : edges_(std::move(edges)), adjacency_(n) {
  for (const Edge& e : edges_) {
    if (e.u == e.v) {
      throw ValidationError("self-loop at vertex " + std::to_string(e.u + 1));
    }
    if (e.v >= n) {
      throw ValidationError("edge endpoint " + std::to_string(e.v + 1) + " outside 1.." +
                            std::to_string(n));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw ValidationError("duplicate edge {" + std::to_string(dup->u + 1) + "," +
                          std::to_string(dup->v + 1) + "}");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& list = adjacency_.at(a);
  return std::binary_search(list.begin(), list.end(), b);
}

namespace {

// Splits a line into whitespace-separated integer fields.
std::vector<long long> parse_fields(std::string_view line, std::size_t line_no) {
  std::vector<long long> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc() || ptr != line.data() + end) {
      throw ParseError(line_no, "expected an integer, got '" + std::string(line.substr(pos, end - pos)) + "'");
    }
    fields.push_back(value);
    pos = end;
  }
  return fields;
}

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (!blank(line)) lines.emplace_back(line_no, line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError(1, "missing header line 'n m'");

  auto header = parse_fields(lines[0].second, lines[0].first);
  if (header.size() != 2) throw ParseError(lines[0].first, "header must be 'n m'");
  if (header[0] < 0 || header[1] < 0) throw ParseError(lines[0].first, "n and m must be nonnegative");
  const auto n = static_cast<std::size_t>(header[0]);
  const auto m = static_cast<std::size_t>(header[1]);
  if (lines.size() - 1 != m) {
    throw ParseError(lines.back().first, "header announces " + std::to_string(m) + " edges, found " +
                                             std::to_string(lines.size() - 1));
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto fields = parse_fields(lines[i].second, lines[i].first);
    if (fields.size() != 2) throw ParseError(lines[i].first, "edge line must be 'u v'");
    for (long long label : fields) {
      if (label < 1 || static_cast<unsigned long long>(label) > n) {
        throw ValidationError("line " + std::to_string(lines[i].first) + ": vertex " +
                              std::to_string(label) + " outside 1.." + std::to_string(n));
      }
    }
    if (fields[0] == fields[1]) {
      throw ValidationError("line " + std::to_string(lines[i].first) + ": self-loop at vertex " +
                            std::to_string(fields[0]));
    }
    edges.emplace_back(static_cast<Vertex>(fields[0] - 1), static_cast<Vertex>(fields[1] - 1));
  }
  return Graph(n, std::move(edges));
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open graph file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

namespace generators {

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph cycle(std::size_t n) {
  if (n < 3) throw ValidationError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph star(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(n, std::move(edges));
}

Graph random(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Graph g = random(n, p, seed * 1'000'003ULL + attempt);
    if (is_connected(g)) return g;
  }
}

}  // namespace generators

std::vector<ExtendedInt> bfs_distances(const Graph& g, Vertex source) {
  std::vector<ExtendedInt> dist(g.order(), ExtendedInt::infinity());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w].is_finite()) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix d(n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < n; ++t) d(s, t) = row[t];
  }
  return d;
}

namespace {

void check_members(const Graph& g, const VertexSet& set) {
  if (!set.empty() && set.members().back() >= g.order()) {
    throw ValidationError("vertex " + std::to_string(set.members().back() + 1) + " outside 1.." +
                          std::to_string(g.order()));
  }
}

}  // namespace

Boundary edge_boundary(const Graph& g, const VertexSet& set) {
  check_members(g, set);
  auto inside = set.indicator(g.order());
  Boundary b;
  for (const Edge& e : g.edges()) {
    if (inside[e.u] != inside[e.v]) b.edges.push_back(e);
  }
  return b;
}

std::size_t boundary_size(const Graph& g, const VertexSet& set) {
  check_members(g, set);
  auto inside = set.indicator(g.order());
  std::size_t count = 0;
  for (Vertex v : set) {
    for (Vertex w : g.neighbors(v)) count += inside[w] ? 0 : 1;
  }
  return count;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& removed) {
  check_members(g, removed);
  if (removed.size() == g.order()) throw ValidationError("deleting every vertex leaves an empty graph");
  auto gone = removed.indicator(g.order());
  InducedSubgraph out;
  std::vector<Vertex> relabel(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (gone[v]) continue;
    relabel[v] = static_cast<Vertex>(out.original.size());
    out.original.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!gone[e.u] && !gone[e.v]) edges.emplace_back(relabel[e.u], relabel[e.v]);
  }
  out.graph = Graph(out.original.size(), std::move(edges));
  return out;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) p.degrees[v] = g.degree(v);
  if (!p.degrees.empty()) {
    auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
  }
  p.volume = 2 * g.size();
  return p;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> parts;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> members{s};
    seen[s] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (Vertex w : g.neighbors(members[head])) {
        if (!seen[w]) {
          seen[w] = true;
          members.push_back(w);
        }
      }
    }
    parts.emplace_back(std::move(members));
  }
  return parts;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

}  // namespace heisenspec
