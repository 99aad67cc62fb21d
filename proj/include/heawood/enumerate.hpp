#pragma once

// Isomorphism-free generation of small graphs and the canonical forms that
// power it.
//
// The canonical form of a graph is the lexicographically minimal
// upper-triangle bit string (column-major order, the graph6 bit order) over
// all vertex relabelings. Minimality is closed under deleting the last
// vertex, which yields an orderly generation scheme: extend each canonical
// graph on k vertices by one new vertex attached to every subset of the old
// ones, and keep exactly the canonical children.
//
// Two independent canonicalizers are provided: a branch-and-bound search
// (production, n <= 16) and a permutation-exhaustive one (n <= 8) used to
// cross-check it. Production generation likewise has two routes: labeled
// brute force with canonical deduplication for n <= 7, orderly generation
// for n = 8, 9; the two are compared in tests.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_set>
#include <vector>

#include "heawood/errors.hpp"
#include "heawood/graph.hpp"
#include "heawood/graph6.hpp"

namespace heawood {

namespace detail {

constexpr int kMaxCanonN = 16;  // 120 upper-triangle bits fit an unsigned __int128

using Code = unsigned __int128;

// Adjacency as one bitmask row per vertex; fits every graph we enumerate.
struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, kMaxCanonN> adj{};

  bool has(int u, int v) const { return (adj[u] >> v) & 1; }
  void add(int u, int v) {
    adj[u] |= std::uint16_t(1u << v);
    adj[v] |= std::uint16_t(1u << u);
  }
  int degree(int v) const { return __builtin_popcount(adj[v]); }
};

inline SmallGraph to_small(const Graph& g) {
  if (g.vertex_count() > kMaxCanonN)
    throw std::invalid_argument("canonical form limited to n <= " + std::to_string(kMaxCanonN));
  SmallGraph s;
  s.n = g.vertex_count();
  for (const auto& [u, v] : g.edges()) s.add(u, v);
  return s;
}

inline Graph to_graph(const SmallGraph& s) {
  std::vector<Edge> edges;
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      if (s.has(u, v)) edges.emplace_back(u, v);
  return Graph::build(s.n, std::move(edges));
}

// Bit index of pair (i, j), i < j, in column-major upper-triangle order.
inline int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

inline Code code_of(const SmallGraph& g) {
  const int m = g.n * (g.n - 1) / 2;
  Code c = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.has(i, j)) c |= Code(1) << (m - 1 - pair_bit(i, j));
  return c;
}

inline SmallGraph from_code(int n, Code c) {
  const int m = n * (n - 1) / 2;
  SmallGraph g;
  g.n = n;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((c >> (m - 1 - pair_bit(i, j))) & 1) g.add(i, j);
  return g;
}

inline bool connected(const SmallGraph& g) {
  if (g.n == 0) return false;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < g.n; ++v)
      if ((frontier >> v) & 1) next |= g.adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << g.n) - 1;
}

// Branch-and-bound canonical search. The string is built one position at a
// time; only candidates achieving the minimal next column are explored, with
// interchangeable-twin pruning. In test mode the search aborts as soon as any
// labeling beats the reference code.
struct CanonSearch {
  const SmallGraph& g;
  int n, mbits;
  Code reference;   // the graph's own code (test mode) or best found so far
  bool test_mode;   // true: decide "is reference minimal?", no improvement tracking
  bool beaten = false;
  std::array<int, kMaxCanonN> placed{};

  CanonSearch(const SmallGraph& graph, Code ref, bool testing)
      : g(graph), n(graph.n), mbits(graph.n * (graph.n - 1) / 2), reference(ref), test_mode(testing) {}

  // column bits of v against placed[0..t), most significant bit first
  std::uint32_t column(int v, int t) const {
    std::uint32_t c = 0;
    for (int i = 0; i < t; ++i) c = (c << 1) | ((g.adj[v] >> placed[i]) & 1u);
    return c;
  }

  void search(int t, int bits_done, Code prefix, std::uint32_t unplaced) {
    if (beaten) return;
    if (t == n) {
      if (!test_mode && prefix < reference) reference = prefix;
      return;
    }
    std::uint32_t cmin = ~0u;
    std::array<int, kMaxCanonN> cands{};
    int ncands = 0;
    for (std::uint32_t rest = unplaced; rest;) {
      const int v = __builtin_ctz(rest);
      rest &= rest - 1;
      const std::uint32_t c = column(v, t);
      if (c < cmin) {
        cmin = c;
        cands[0] = v;
        ncands = 1;
      } else if (c == cmin) {
        cands[ncands++] = v;
      }
    }
    const int new_bits = bits_done + t;
    const Code new_prefix = (prefix << t) | cmin;
    const Code ref_prefix = reference >> (mbits - new_bits);
    if (new_prefix > ref_prefix) return;  // cannot reach the minimum
    if (new_prefix < ref_prefix) {
      if (test_mode) {
        beaten = true;  // some labeling is strictly smaller
        return;
      }
      // strictly better prefix: fall through, the completion updates reference
    }
    for (int k = 0; k < ncands; ++k) {
      const int v = cands[k];
      // skip candidates interchangeable with an earlier one by a transposition
      bool twin = false;
      for (int j = 0; j < k; ++j) {
        const int u = cands[j];
        if ((g.adj[u] & ~(1u << v)) == (g.adj[v] & ~(1u << u))) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      placed[t] = v;
      search(t + 1, new_bits, new_prefix, unplaced & ~(1u << v));
      if (beaten) return;
    }
  }
};

inline Code canonical_code(const SmallGraph& g) {
  if (g.n <= 1) return 0;
  CanonSearch s(g, code_of(g), false);
  s.search(0, 0, 0, (1u << g.n) - 1);
  return s.reference;
}

inline bool is_canonical(const SmallGraph& g, Code own) {
  if (g.n <= 1) return true;
  CanonSearch s(g, own, true);
  s.search(0, 0, 0, (1u << g.n) - 1);
  return !s.beaten;
}

// Exhaustive canonical form over all n! relabelings; the slow oracle.
inline Code canonical_code_exhaustive(const SmallGraph& g) {
  if (g.n > 8) throw std::invalid_argument("exhaustive canonical form limited to n <= 8");
  if (g.n <= 1) return 0;
  std::array<int, 8> perm{};
  std::iota(perm.begin(), perm.begin() + g.n, 0);
  Code best = ~Code(0);
  const int m = g.n * (g.n - 1) / 2;
  do {
    // perm[p] = original vertex placed at position p
    Code c = 0;
    for (int j = 1; j < g.n; ++j)
      for (int i = 0; i < j; ++i)
        if (g.has(perm[i], perm[j])) c |= Code(1) << (m - 1 - pair_bit(i, j));
    best = std::min(best, c);
  } while (std::next_permutation(perm.begin(), perm.begin() + g.n));
  return best;
}

}  // namespace detail

// Canonically relabeled copy of g (lexicographically minimal bit string).
inline Graph canonical_form(const Graph& g) {
  auto s = detail::to_small(g);
  return detail::to_graph(detail::from_code(s.n, detail::canonical_code(s)));
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return detail::canonical_code(detail::to_small(a)) == detail::canonical_code(detail::to_small(b));
}

namespace detail {

// Orderly generation: DFS over canonical graphs, one vertex at a time. Prune
// must be hereditary (closed under deleting the canonically last vertex);
// emit sees every canonical graph on exactly target_n vertices that survived
// pruning.
inline void orderly_generate(int target_n,
                             const std::function<bool(const SmallGraph&)>& prune,
                             const std::function<void(const SmallGraph&, Code)>& emit) {
  SmallGraph start;
  start.n = 1;
  std::function<void(const SmallGraph&, Code, int)> expand = [&](const SmallGraph& g, Code code,
                                                                 int k) {
    if (k == target_n) {
      emit(g, code);
      return;
    }
    for (std::uint32_t subset = 0; subset < (1u << k); ++subset) {
      SmallGraph child = g;
      child.n = k + 1;
      child.adj[k] = static_cast<std::uint16_t>(subset);
      for (std::uint32_t rest = subset; rest;) {
        const int v = __builtin_ctz(rest);
        rest &= rest - 1;
        child.adj[v] |= std::uint16_t(1u << k);
      }
      if (prune && prune(child)) continue;
      // child code = parent code followed by the new column (subset bits,
      // vertex 0 first = most significant)
      std::uint32_t col = 0;
      for (int i = 0; i < k; ++i) col = (col << 1) | ((subset >> i) & 1u);
      const Code child_code = (code << k) | col;
      if (!is_canonical(child, child_code)) continue;
      expand(child, child_code, k + 1);
    }
  };
  if (target_n >= 1) expand(start, 0, 1);
}

inline std::vector<Graph> sorted_graphs_from_codes(int n, std::vector<Code> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (Code c : codes) out.push_back(to_graph(from_code(n, c)));
  return out;
}

// Labeled brute force: every edge mask on n vertices, connected filter,
// canonical deduplication. Simple and verifiable; parallelized over the mask
// space (the result does not depend on the thread count).
inline std::vector<Graph> brute_force_connected(int n, int threads) {
  const int m = n * (n - 1) / 2;
  const std::uint32_t total = 1u << m;
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);

  auto work = [&](std::uint32_t lo, std::uint32_t hi, std::unordered_set<std::uint64_t>& out) {
    for (std::uint32_t mask = lo; mask < hi; ++mask) {
      SmallGraph g;
      g.n = n;
      for (int b = 0; b < m; ++b)
        if ((mask >> b) & 1) g.add(pairs[b].first, pairs[b].second);
      if (!connected(g)) continue;
      out.insert(static_cast<std::uint64_t>(canonical_code(g)));  // m <= 21 bits
    }
  };

  std::vector<std::unordered_set<std::uint64_t>> results(threads);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (static_cast<std::uint64_t>(total) + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::uint64_t lo = t * chunk;
    const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
    if (lo >= hi) continue;
    pool.emplace_back(work, static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi),
                      std::ref(results[t]));
  }
  for (auto& th : pool) th.join();

  std::vector<Code> codes;
  for (const auto& set : results)
    for (std::uint64_t c : set) codes.push_back(c);
  return sorted_graphs_from_codes(n, std::move(codes));
}

inline std::vector<Graph> orderly_connected(int n) {
  std::vector<Code> codes;
  orderly_generate(
      n, nullptr,
      [&](const SmallGraph& g, Code code) {
        if (connected(g)) codes.push_back(code);
      });
  return sorted_graphs_from_codes(n, std::move(codes));
}

}  // namespace detail

// All connected simple graphs on n vertices, one per isomorphism class, in
// ascending canonical-code order. Counts follow 1, 1, 2, 6, 21, 112, 853,
// 11117, 261080 for n = 1..9. Results are cached per process.
inline const std::vector<Graph>& generate_connected(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("generation supports 1 <= n <= 9");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<Graph>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    const int threads = std::max(1u, std::thread::hardware_concurrency());
    slot = std::make_unique<std::vector<Graph>>(
        n <= 7 ? detail::brute_force_connected(n, n >= 6 ? threads : 1)
               : detail::orderly_connected(n));
  }
  return *slot;
}

// Connected graphs on n vertices, one per isomorphism class, restricted by a
// hereditary isomorphism-invariant predicate (every induced subgraph of a
// kept graph must also pass). Used for sweeps past the general n <= 9 range.
inline std::vector<Graph> generate_connected_hereditary(
    int n, const std::function<bool(const Graph&)>& keep, int max_n = 12) {
  if (n < 1 || n > max_n)
    throw std::invalid_argument("pruned generation supports 1 <= n <= " + std::to_string(max_n));
  std::vector<detail::Code> codes;
  detail::orderly_generate(
      n,
      [&](const detail::SmallGraph& g) { return !keep(detail::to_graph(g)); },
      [&](const detail::SmallGraph& g, detail::Code code) {
        if (detail::connected(g)) codes.push_back(code);
      });
  auto graphs = detail::sorted_graphs_from_codes(n, std::move(codes));
  return graphs;
}

// Connected d-regular graphs on n vertices, one per isomorphism class.
// Orderly generation with regular-target pruning: degree cap d, a deficiency
// budget (missing degree <= d * vertices still to come), and no saturated
// proper component (it could never reconnect).
inline std::vector<Graph> generate_connected_regular(int n, int d) {
  if (n < 1 || n > 14) throw std::invalid_argument("regular generation supports n <= 14");
  if (d < 0 || d >= n || (n * d) % 2 != 0) return {};
  std::vector<detail::Code> codes;
  auto prune = [&](const detail::SmallGraph& g) {
    int deficiency = 0;
    for (int v = 0; v < g.n; ++v) {
      const int deg = g.degree(v);
      if (deg > d) return true;
      deficiency += d - deg;
    }
    if (deficiency > d * (n - g.n)) return true;
    if (g.n < n) {
      // component with every vertex saturated can never join the rest
      std::uint32_t seen = 0;
      for (int s = 0; s < g.n; ++s) {
        if ((seen >> s) & 1) continue;
        std::uint32_t comp = 1u << s, frontier = comp;
        bool saturated = true;
        while (frontier) {
          std::uint32_t next = 0;
          for (int v = 0; v < g.n; ++v)
            if ((frontier >> v) & 1) {
              if (g.degree(v) < d) saturated = false;
              next |= g.adj[v];
            }
          frontier = next & ~comp;
          comp |= next;
        }
        if (saturated) return true;
        seen |= comp;
      }
    }
    return false;
  };
  detail::orderly_generate(n, prune, [&](const detail::SmallGraph& g, detail::Code code) {
    if (!detail::connected(g)) return;
    for (int v = 0; v < g.n; ++v)
      if (g.degree(v) != d) return;
    codes.push_back(code);
  });
  return detail::sorted_graphs_from_codes(n, std::move(codes));
}

}  // namespace heawood
