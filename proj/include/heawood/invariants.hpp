#pragma once

// Exact combinatorial invariants: connectivity, girth, bipartiteness,
// regularity, vertex connectivity (max-flow/Menger on the vertex-split
// network) and exact chromatic number (DSATUR branch and bound).

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "heawood/errors.hpp"
#include "heawood/graph.hpp"

namespace heawood {

inline int component_count(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  int comps = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return component_count(g) == 1; }

// ---------------------------------------------------------------------------
// Girth

struct GirthValue {
  std::optional<int> length;  // nullopt: acyclic (infinite girth)

  static GirthValue infinite() { return {}; }
  static GirthValue of(int g) { return {g}; }
  bool is_finite() const { return length.has_value(); }
  int value() const { return *length; }
  bool operator==(const GirthValue& o) const { return length == o.length; }
};

// Length of the shortest cycle, by BFS from every vertex. A non-tree edge
// seen at BFS depth d closes a walk of length dist[x]+dist[y]+1 through the
// root; the minimum of these over all roots is exactly the girth.
inline GirthValue girth(const Graph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() == n - component_count(g)) return GirthValue::infinite();  // forest
  int best = n + 1;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> q{root};
    dist[root] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      if (2 * dist[v] >= best) break;  // deeper vertices cannot improve
      for (int w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          q.push_back(w);
        } else if (w != parent[v]) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  return GirthValue::of(best);
}

// ---------------------------------------------------------------------------
// Two-coloring and degree regularity

inline bool is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, -1);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = color[v] ^ 1;
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// The common degree when the graph is regular, nullopt otherwise.
inline std::optional<int> regular_degree(const Graph& g) {
  const int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

// ---------------------------------------------------------------------------
// Vertex connectivity

namespace detail {

// Unit-capacity max flow (BFS augmenting paths) on a dense capacity matrix.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : n_(nodes), cap_(static_cast<size_t>(nodes) * nodes, 0) {}
  void add(int u, int v, int c) { cap_[static_cast<size_t>(u) * n_ + v] += c; }

  int run(int s, int t) {
    int flow = 0;
    std::vector<int> prev(n_);
    for (;;) {
      std::fill(prev.begin(), prev.end(), -1);
      prev[s] = s;
      std::deque<int> q{s};
      while (!q.empty() && prev[t] < 0) {
        int v = q.front();
        q.pop_front();
        for (int w = 0; w < n_; ++w)
          if (prev[w] < 0 && cap_[static_cast<size_t>(v) * n_ + w] > 0) {
            prev[w] = v;
            q.push_back(w);
          }
      }
      if (prev[t] < 0) return flow;
      int bottleneck = INT32_MAX;
      for (int v = t; v != s; v = prev[v])
        bottleneck = std::min(bottleneck, cap_[static_cast<size_t>(prev[v]) * n_ + v]);
      for (int v = t; v != s; v = prev[v]) {
        cap_[static_cast<size_t>(prev[v]) * n_ + v] -= bottleneck;
        cap_[static_cast<size_t>(v) * n_ + prev[v]] += bottleneck;
      }
      flow += bottleneck;
    }
  }

 private:
  int n_;
  std::vector<int> cap_;
};

// Menger: max number of internally disjoint s-t paths = min vertex cut, via
// max flow on the split network (v_in -> v_out with capacity 1).
inline int vertex_cut_between(const Graph& g, int s, int t) {
  const int n = g.vertex_count();
  const int big = n;  // effectively infinite for unit vertex capacities
  MaxFlow f(2 * n);
  for (int v = 0; v < n; ++v) f.add(2 * v, 2 * v + 1, 1);
  for (const auto& [u, v] : g.edges()) {
    f.add(2 * u + 1, 2 * v, big);
    f.add(2 * v + 1, 2 * u, big);
  }
  return f.run(2 * s + 1, 2 * t);
}

}  // namespace detail

// Exact vertex connectivity; by convention v(K_n) = n-1.
inline int vertex_connectivity(const Graph& g) {
  if (!is_connected(g)) throw precondition_error("vertex connectivity needs a connected graph");
  const int n = g.vertex_count();
  if (g.is_complete()) return n - 1;
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, detail::vertex_cut_between(g, s, t));
  return best;
}

// ---------------------------------------------------------------------------
// Chromatic number

struct ChromaticLimits {
  int max_vertices = 30;
  long long node_budget = 50'000'000;  // deterministic search cap
};

namespace detail {

struct ColoringSearch {
  const Graph& g;
  int n;
  long long budget;
  std::vector<int> color;       // 0 = uncolored, else 1..k
  std::vector<std::vector<int>> adj_colors;  // per vertex: count per color
  int best;                     // best complete coloring found so far
  int stop_at;                  // proven lower bound; reaching it ends the search

  ColoringSearch(const Graph& graph, int upper, int lower, long long node_budget)
      : g(graph), n(graph.vertex_count()), budget(node_budget), color(n, 0),
        adj_colors(n, std::vector<int>(upper + 2, 0)), best(upper), stop_at(lower) {}

  int saturation(int v) const {
    int s = 0;
    for (int c = 1; c <= best; ++c) s += adj_colors[v][c] > 0;
    return s;
  }

  // DSATUR order: highest saturation, then highest degree.
  int pick() const {
    int pick = -1, ps = -1, pd = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v]) continue;
      int s = saturation(v), d = g.degree(v);
      if (s > ps || (s == ps && d > pd)) {
        pick = v; ps = s; pd = d;
      }
    }
    return pick;
  }

  void assign(int v, int c, int delta) {
    color[v] = delta > 0 ? c : 0;
    for (int w : g.neighbors(v)) adj_colors[w][c] += delta;
  }

  void search(int colored, int used) {
    if (used >= best || best <= stop_at) return;
    if (--budget < 0) throw resource_limit_error("chromatic number search budget exhausted");
    if (colored == n) {
      best = used;
      return;
    }
    const int v = pick();
    const int try_up_to = std::min(used + 1, best - 1);
    for (int c = 1; c <= try_up_to; ++c) {
      if (adj_colors[v][c] > 0) continue;
      assign(v, c, +1);
      search(colored + 1, std::max(used, c));
      assign(v, c, -1);
    }
  }
};

inline int greedy_clique_size(const Graph& g) {
  // greedy from each vertex in degree order; lower bound only
  const int n = g.vertex_count();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int best = 0;
  for (int s : order) {
    std::vector<int> clique{s};
    for (int v : order) {
      if (v == s) continue;
      bool ok = true;
      for (int c : clique)
        if (!g.has_edge(v, c)) { ok = false; break; }
      if (ok) clique.push_back(v);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

inline int dsatur_greedy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, 0);
  std::vector<std::vector<char>> forbidden(n, std::vector<char>(n + 2, 0));
  int used = 0;
  for (int step = 0; step < n; ++step) {
    int pick = -1, ps = -1, pd = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v]) continue;
      int s = 0;
      for (int c = 1; c <= used; ++c) s += forbidden[v][c];
      if (s > ps || (s == ps && g.degree(v) > pd)) { pick = v; ps = s; pd = g.degree(v); }
    }
    int c = 1;
    while (forbidden[pick][c]) ++c;
    color[pick] = c;
    used = std::max(used, c);
    for (int w : g.neighbors(pick)) forbidden[w][c] = 1;
  }
  return used;
}

}  // namespace detail

// Exact chromatic number. Throws resource_limit_error when the graph exceeds
// the vertex cap or the search node budget (never approximates silently).
inline int chromatic_number(const Graph& g, const ChromaticLimits& limits = {}) {
  const int n = g.vertex_count();
  if (n > limits.max_vertices)
    throw resource_limit_error("chromatic number limited to n <= " + std::to_string(limits.max_vertices));
  if (g.edge_count() == 0) return 1;
  if (g.is_complete()) return n;
  if (is_bipartite(g)) return 2;
  const int lower = std::max(3, detail::greedy_clique_size(g));
  const int upper = detail::dsatur_greedy(g);
  if (lower >= upper) return upper;
  detail::ColoringSearch s(g, upper, lower, limits.node_budget);
  s.search(0, 0);
  return s.best;
}

}  // namespace heawood
