#pragma once

// Test-only oracles. Each one checks a library result through an independent
// route: closed forms, brute-force enumeration, or a different decoding of
// the same wire format. None of them share code with the implementation path
// they validate.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "heawood/graph.hpp"
#include "heawood/invariants.hpp"

namespace oracles {

using heawood::Edge;
using heawood::Graph;

// Circulant closed form: Laplacian eigenvalues of C_n are 2 - 2cos(2 pi k/n).
inline std::vector<double> cycle_laplacian_eigenvalues(int n) {
  std::vector<double> v;
  for (int k = 0; k < n; ++k) v.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / n));
  std::sort(v.begin(), v.end());
  return v;
}

inline std::vector<double> cycle_adjacency_eigenvalues(int n) {
  std::vector<double> v;
  for (int k = 0; k < n; ++k) v.push_back(2.0 * std::cos(2.0 * std::numbers::pi * k / n));
  std::sort(v.begin(), v.end());
  return v;
}

// Subset degree via the per-vertex formula sum(d_i - internal_i); the
// implementation counts boundary edges instead.
inline int subset_degree_formula(const Graph& g, const std::vector<int>& members) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : members) in[v] = 1;
  int total = 0;
  for (int v : members) {
    int internal = 0;
    for (int w : g.neighbors(v)) internal += in[w];
    total += g.degree(v) - internal;
  }
  return total;
}

// Minimum separating set by trying every vertex subset; n-1 for complete.
inline int brute_vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (g.is_complete()) return n - 1;
  int best = n - 1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int removed = __builtin_popcount(mask);
    if (removed >= best || removed > n - 2) continue;
    // connectivity of the induced subgraph on the kept vertices
    int start = -1, kept = 0;
    for (int v = 0; v < n; ++v)
      if (!((mask >> v) & 1)) {
        ++kept;
        start = v;
      }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (((mask >> w) & 1) || seen[w]) continue;
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
    if (reached < kept) best = removed;
  }
  return best;
}

// Exact chromatic number by feasibility search over k = 1, 2, ...
inline bool colorable(const Graph& g, int k) {
  const int n = g.vertex_count();
  std::vector<int> color(n, 0);
  std::function<bool(int, int)> assign = [&](int v, int used) -> bool {
    if (v == n) return true;
    const int limit = std::min(k, used + 1);
    for (int c = 1; c <= limit; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (color[w] == c) { ok = false; break; }
      if (!ok) continue;
      color[v] = c;
      if (assign(v + 1, std::max(used, c))) return true;
      color[v] = 0;
    }
    return false;
  };
  return assign(0, 0);
}

inline int brute_chromatic(const Graph& g) {
  for (int k = 1;; ++k)
    if (colorable(g, k)) return k;
}

// ---------------------------------------------------------------------------
// Kuratowski subdivision search (the planarity acceptance reference).
// Internally-disjoint paths are assigned to the required branch pairs by
// exhaustive backtracking.

namespace detail {

inline bool connect_pairs(const Graph& g, const std::vector<std::pair<int, int>>& pairs,
                          size_t idx, std::vector<char>& used) {
  if (idx == pairs.size()) return true;
  const auto [s, t] = pairs[idx];
  std::function<bool(int)> dfs = [&](int v) -> bool {
    for (int w : g.neighbors(v)) {
      if (w == t) {
        if (connect_pairs(g, pairs, idx + 1, used)) return true;
        continue;
      }
      if (used[w]) continue;
      used[w] = 1;
      const bool ok = dfs(w);
      used[w] = 0;
      if (ok) return true;
    }
    return false;
  };
  return dfs(s);
}

inline bool try_branches(const Graph& g, const std::vector<int>& branch,
                         const std::vector<std::pair<int, int>>& pairs) {
  std::vector<char> used(g.vertex_count(), 0);
  for (int b : branch) used[b] = 1;
  return connect_pairs(g, pairs, 0, used);
}

inline void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == k) {
      fn(pick);
      return;
    }
    for (int v = from; v < n; ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

}  // namespace detail

inline bool has_k5_subdivision(const Graph& g) {
  if (g.vertex_count() < 5) return false;
  bool found = false;
  detail::combinations(g.vertex_count(), 5, [&](const std::vector<int>& b) {
    if (found) return;
    for (int v : b)
      if (g.degree(v) < 4) return;
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = i + 1; j < 5; ++j) pairs.emplace_back(b[i], b[j]);
    if (detail::try_branches(g, b, pairs)) found = true;
  });
  return found;
}

inline bool has_k33_subdivision(const Graph& g) {
  if (g.vertex_count() < 6) return false;
  bool found = false;
  detail::combinations(g.vertex_count(), 6, [&](const std::vector<int>& b) {
    if (found) return;
    for (int v : b)
      if (g.degree(v) < 3) return;
    // bipartitions fixing b[0] on the left
    detail::combinations(5, 2, [&](const std::vector<int>& left_rest) {
      if (found) return;
      std::vector<int> left{b[0]}, right;
      for (int i = 0; i < 5; ++i) {
        if (std::find(left_rest.begin(), left_rest.end(), i) != left_rest.end())
          left.push_back(b[i + 1]);
        else
          right.push_back(b[i + 1]);
      }
      std::vector<std::pair<int, int>> pairs;
      for (int u : left)
        for (int v : right) pairs.emplace_back(u, v);
      if (detail::try_branches(g, b, pairs)) found = true;
    });
  });
  return found;
}

// Kuratowski: planar iff no K5 and no K3,3 subdivision.
inline bool planar_by_subdivision_search(const Graph& g) {
  return !has_k5_subdivision(g) && !has_k33_subdivision(g);
}

// ---------------------------------------------------------------------------
// Reference graph6 decoder: expand every payload byte to its six bits, then
// read the upper triangle. Shares no code with the library codec.

inline Graph reference_graph6_decode(const std::string& s) {
  const int n = s.at(0) - 63;
  std::vector<int> bits;
  for (size_t i = 1; i < s.size(); ++i) {
    const int v = s[i] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
  }
  std::vector<Edge> edges;
  int idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if (bits.at(idx)) edges.emplace_back(i, j);
  return Graph::build(n, std::move(edges));
}

}  // namespace oracles
