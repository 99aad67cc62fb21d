#pragma once

// Immutable simple undirected graphs on dense vertex indices 0..n-1,
// the named families used throughout the library, and subset degrees.
//
// Edges are stored normalized (i < j, sorted, deduplicated) so that equal
// graphs serialize identically. Instances never change after construction
// and are safe to share across threads.

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heawood/errors.hpp"

namespace heawood {

using Edge = std::pair<int, int>;

class Graph {
 public:
  Graph() = default;

  static Graph build(int n, std::vector<Edge> edge_list) {
    if (n <= 0) throw std::invalid_argument("graph needs at least one vertex");
    for (auto& [u, v] : edge_list) {
      if (u == v) throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ") not allowed");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range for n=" + std::to_string(n));
      if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    return Graph(n, std::move(edge_list));
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  int min_degree() const {
    int d = n_;
    for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
    return d;
  }
  int max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
  }
  double average_degree() const { return 2.0 * edge_count() / vertex_count(); }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
  }

  bool is_complete() const { return 2L * edge_count() == 1L * n_ * (n_ - 1); }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n) {
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

// ---------------------------------------------------------------------------
// Operators

// Zykov join: disjoint union plus every edge between the two parts.
inline Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  std::vector<Edge> edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) edges.emplace_back(u, n1 + v);
  return Graph::build(n1 + n2, std::move(edges));
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count();
  std::vector<Edge> edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  return Graph::build(n1 + g2.vertex_count(), std::move(edges));
}

inline Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph::build(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Named families. Labelings are fixed and documented per constructor so that
// serialized output is reproducible.

// K_n, all pairs adjacent.
inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::build(n, std::move(edges));
}

// C_n with edges (i, i+1 mod n).
inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::build(n, std::move(edges));
}

// P_n with edges (i, i+1).
inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::build(n, std::move(edges));
}

// kK_1, k isolated vertices.
inline Graph empty_graph(int k) {
  if (k < 1) throw std::invalid_argument("empty graph needs k >= 1");
  return Graph::build(k, {});
}

// K_{p,q} with parts [0,p) and [p,p+q).
inline Graph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("complete bipartite needs p,q >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < q; ++v) edges.emplace_back(u, p + v);
  return Graph::build(p + q, std::move(edges));
}

// Double wheel C_n + 2K_1 (join): cycle on 0..n-1, hubs n and n+1.
inline Graph double_wheel(int n) {
  if (n < 3) throw std::invalid_argument("double wheel needs cycle length >= 3");
  return join(cycle_graph(n), empty_graph(2));
}

// Octahedron 2K_1 + C_4: hubs 0,1, cycle on 2..5.
inline Graph octahedron() { return join(empty_graph(2), cycle_graph(4)); }

// Triangular prism: triangles {0,1,2} and {3,4,5}, rungs (i, i+3).
inline Graph prism_3() {
  return Graph::build(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// Q_3, vertices are 3-bit strings, edges between strings at Hamming distance 1.
inline Graph cube_q3() {
  std::vector<Edge> edges;
  for (int u = 0; u < 8; ++u)
    for (int b = 0; b < 3; ++b)
      if (int v = u ^ (1 << b); u < v) edges.emplace_back(u, v);
  return Graph::build(8, std::move(edges));
}

// (K_{n-1} u K_1) + K_1: a complete core K_n on {0..n-2, n} plus the pendant
// vertex n-1 attached to the join vertex n. Has n+1 vertices and Laplacian
// spectrum (0, 1, n, ..., n, n+1).
inline Graph near_complete(int n) {
  if (n < 2) throw std::invalid_argument("near complete graph needs n >= 2");
  Graph core = disjoint_union(complete_graph(n - 1), empty_graph(1));
  return join(core, complete_graph(1));
}

// Petersen graph: outer C_5 on 0..4, inner pentagram on 5..9, spokes (i, i+5).
inline Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph::build(10, std::move(edges));
}

// Dispatcher used by the CLI and by sweep/trend harnesses.
inline Graph family(const std::string& name, const std::vector<int>& params = {}) {
  auto want = [&](size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("family '" + name + "' takes " + std::to_string(k) + " parameter(s)");
  };
  if (name == "complete") { want(1); return complete_graph(params[0]); }
  if (name == "cycle") { want(1); return cycle_graph(params[0]); }
  if (name == "path") { want(1); return path_graph(params[0]); }
  if (name == "empty") { want(1); return empty_graph(params[0]); }
  if (name == "complete_bipartite") { want(2); return complete_bipartite(params[0], params[1]); }
  if (name == "double_wheel") { want(1); return double_wheel(params[0]); }
  if (name == "near_complete") { want(1); return near_complete(params[0]); }
  if (name == "octahedron") { want(0); return octahedron(); }
  if (name == "prism_3") { want(0); return prism_3(); }
  if (name == "cube") { want(0); return cube_q3(); }
  if (name == "petersen") { want(0); return petersen(); }
  throw std::invalid_argument("unknown family '" + name + "'");
}

inline const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "complete", "cycle", "path", "empty", "complete_bipartite", "double_wheel",
      "near_complete", "octahedron", "prism_3", "cube", "petersen"};
  return names;
}

// ---------------------------------------------------------------------------
// Vertex subsets and their edge boundary.

struct VertexSubset {
  std::vector<int> members;  // sorted, unique

  static VertexSubset of(std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return VertexSubset{std::move(vs)};
  }
  int size() const { return static_cast<int>(members.size()); }
};

// d(H): number of edges with exactly one endpoint in H. H must be a proper
// nonempty subset of the vertices.
inline int subset_degree(const Graph& g, const VertexSubset& h) {
  const int n = g.vertex_count();
  if (h.size() == 0 || h.size() >= n)
    throw std::invalid_argument("subset degree needs a proper nonempty subset");
  std::vector<char> in(n, 0);
  for (int v : h.members) {
    if (v < 0 || v >= n) throw std::invalid_argument("subset member out of range");
    in[v] = 1;
  }
  int d = 0;
  for (const auto& [u, v] : g.edges()) d += (in[u] != in[v]);
  return d;
}

// ---------------------------------------------------------------------------
// Edge-list text format: first line "n m", then one "i j" line per edge with
// i < j, in sorted order. '#' starts a comment. Round-trips bit-exactly.

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

inline Graph parse_edge_list(std::string_view text) {
  std::string stripped;
  stripped.reserve(text.size());
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    stripped += in_comment ? ' ' : c;
  }
  std::istringstream in(stripped);
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
  if (n <= 0 || m < 0) throw std::invalid_argument("edge list: invalid header values");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long k = 0; k < m; ++k) {
    long long u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated after " + std::to_string(k) + " edges");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("edge list: trailing data '" + rest + "'");
  return Graph::build(static_cast<int>(n), std::move(edges));
}

}  // namespace heawood
