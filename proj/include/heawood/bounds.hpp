#pragma once

// Upper bounds on the algebraic connectivity, and the verdict engine that
// runs every applicable bound on a graph and reports the tightest with
// provenance. Inapplicable bounds stay in the report, with the hypothesis
// that failed, instead of being dropped.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "heawood/errors.hpp"
#include "heawood/graph.hpp"
#include "heawood/invariants.hpp"
#include "heawood/json.hpp"
#include "heawood/planarity.hpp"
#include "heawood/spectral.hpp"
#include "heawood/surfaces.hpp"

namespace heawood {

// ---------------------------------------------------------------------------
// Surface context: which surface a graph is assumed embeddable in. Never
// guessed: either given by the caller or derived from a planarity test.

struct SurfaceContext {
  std::optional<Surface> surface;
  enum class Source { given, planarity_derived } source = Source::planarity_derived;

  static SurfaceContext none() { return {}; }
  static SurfaceContext given(Surface s) {
    validate(s);
    return {s, Source::given};
  }
  // Sphere iff the graph is planar; no surface otherwise.
  static SurfaceContext detect(const Graph& g) {
    SurfaceContext ctx;
    if (is_planar(g).planar) ctx.surface = Surface::sphere();
    return ctx;
  }
};

// ---------------------------------------------------------------------------
// Individual bounds. Evaluators throw precondition_error when a hypothesis
// fails; the verdict engine turns that into an inapplicable entry.

namespace detail {

// Surface-dependent bounds are unsound if the graph cannot embed in the
// claimed surface. The sphere claim is checked exactly; other surfaces get
// the girth-aware Euler edge bound as a necessary condition.
inline void require_embeddable(const Graph& g, const Surface& s, SurfaceContext::Source source) {
  const long long chi = euler_characteristic(s);
  if (chi == 2) {
    if (source == SurfaceContext::Source::given && !is_planar(g).planar)
      throw precondition_error("graph is not planar, sphere context impossible");
    return;
  }
  if (g.vertex_count() >= 3 &&
      g.edge_count() > euler_edge_bound(g.vertex_count(), girth(g), chi))
    throw precondition_error("edge count exceeds the Euler bound for this surface");
}

}  // namespace detail

struct FiedlerChain {
  double bound;              // = vertex connectivity, the chain's bound on a(G)
  int vertex_connectivity;
  int min_degree;
  double average_degree;     // 2e/n
};

// a(G) <= v(G) <= d_min <= 2e/n for connected non-complete graphs.
inline FiedlerChain fiedler_chain(const Graph& g) {
  if (g.is_complete()) throw precondition_error("fiedler chain does not apply to complete graphs");
  if (!is_connected(g)) throw precondition_error("fiedler chain needs a connected graph");
  const int v = vertex_connectivity(g);
  return {static_cast<double>(v), v, g.min_degree(), g.average_degree()};
}

// a(G) <= 2g/(g-2) * (n-chi)/n for non-complete graphs embeddable in a
// surface of characteristic chi. Acyclic graphs use g = 3 (the weakest cap).
inline double euler_density_bound(const Graph& g, const SurfaceContext& ctx) {
  if (g.is_complete()) throw precondition_error("euler density bound does not apply to complete graphs");
  if (!ctx.surface) throw precondition_error("euler density bound needs a surface context");
  detail::require_embeddable(g, *ctx.surface, ctx.source);
  const GirthValue gv = girth(g);
  const double gg = gv.is_finite() ? gv.value() : 3.0;
  const double chi = static_cast<double>(euler_characteristic(*ctx.surface));
  const double n = g.vertex_count();
  return 2.0 * gg / (gg - 2.0) * (n - chi) / n;
}

// a(G) <= d(H) n / (m (n-m)) for a proper nonempty vertex subset H.
inline double cut_bound(const Graph& g, const VertexSubset& h) {
  const double d = subset_degree(g, h);  // validates the subset
  const double n = g.vertex_count();
  const double m = h.size();
  return d * n / (m * (n - m));
}

enum class CutStrategy { exhaustive, cycles, fiedler_sweep };

struct CutBoundResult {
  VertexSubset subset;
  double value = 0;
};

namespace detail {

inline CutBoundResult cut_exhaustive(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 16) throw precondition_error("exhaustive cut search limited to n <= 16");
  CutBoundResult best;
  best.value = std::numeric_limits<double>::infinity();
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    int d = 0;
    for (const auto& [u, v] : g.edges()) d += ((mask >> u) & 1) != ((mask >> v) & 1);
    const int m = __builtin_popcount(mask);
    const double value = static_cast<double>(d) * n / (static_cast<double>(m) * (n - m));
    if (value < best.value) {
      best.value = value;
      std::vector<int> members;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) members.push_back(v);
      best.subset = VertexSubset::of(std::move(members));
    }
  }
  return best;
}

// every cycle of minimal length, each vertex once, start at the smallest
// vertex with the smaller neighbor second
inline std::vector<std::vector<int>> shortest_cycles(const Graph& g, int girth_len) {
  std::vector<std::vector<int>> cycles;
  const int n = g.vertex_count();
  std::vector<int> path;
  std::vector<char> used(n, 0);
  std::function<void(int, int)> extend = [&](int start, int v) {
    if (static_cast<int>(path.size()) == girth_len) {
      if (g.has_edge(v, start) && path[1] < path.back()) cycles.push_back(path);
      return;
    }
    for (int w : g.neighbors(v)) {
      if (used[w] || w <= start) continue;
      used[w] = 1;
      path.push_back(w);
      extend(start, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    std::fill(used.begin(), used.end(), 0);
    used[s] = 1;
    extend(s, s);
  }
  return cycles;
}

inline CutBoundResult best_over(const Graph& g, const std::vector<VertexSubset>& candidates) {
  CutBoundResult best;
  best.value = std::numeric_limits<double>::infinity();
  for (const auto& h : candidates) {
    const double value = cut_bound(g, h);
    if (value < best.value) {
      best.value = value;
      best.subset = h;
    }
  }
  return best;
}

inline CutBoundResult cut_cycles(const Graph& g) {
  const int n = g.vertex_count();
  const GirthValue gv = girth(g);
  std::vector<VertexSubset> candidates;
  for (int v = 0; v < n; ++v) candidates.push_back(VertexSubset::of({v}));
  if (gv.is_finite() && gv.value() < n) {
    for (const auto& c : shortest_cycles(g, gv.value())) candidates.push_back(VertexSubset::of(c));
  } else if (gv.is_finite() && gv.value() == n) {
    // the graph is the full cycle; use its arcs (a Hamiltonian cycle is not
    // a proper subset)
    const auto cycles = shortest_cycles(g, n);
    if (!cycles.empty()) {
      const auto& cyc = cycles.front();
      for (int len = 1; len < n; ++len)
        for (int i = 0; i < n; ++i) {
          std::vector<int> arc(len);
          for (int k = 0; k < len; ++k) arc[k] = cyc[(i + k) % n];
          candidates.push_back(VertexSubset::of(std::move(arc)));
        }
    }
  }
  return best_over(g, candidates);
}

inline CutBoundResult cut_fiedler_sweep(const Graph& g) {
  const int n = g.vertex_count();
  const std::vector<double> f = fiedler_vector(g);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (f[a] != f[b]) return f[a] < f[b];
    return a < b;
  });
  std::vector<VertexSubset> candidates;
  std::vector<int> prefix;
  for (int k = 0; k + 1 < n; ++k) {
    prefix.push_back(order[k]);
    candidates.push_back(VertexSubset::of(prefix));
  }
  return best_over(g, candidates);
}

}  // namespace detail

// Minimal cut bound under the given search strategy; exhaustive is optimal
// by construction.
inline CutBoundResult best_cut_bound(const Graph& g, CutStrategy strategy) {
  if (g.vertex_count() < 2) throw precondition_error("cut bounds need at least two vertices");
  switch (strategy) {
    case CutStrategy::exhaustive: return detail::cut_exhaustive(g);
    case CutStrategy::cycles: return detail::cut_cycles(g);
    case CutStrategy::fiedler_sweep: return detail::cut_fiedler_sweep(g);
  }
  throw std::invalid_argument("unknown cut strategy");
}

// a(G) <= 2n/((n-g)(g-2)) * (2 - g*chi/n) for a regular graph of girth
// g < n embeddable in a surface of characteristic chi.
inline double regular_girth_bound(const Graph& g, const SurfaceContext& ctx) {
  if (!regular_degree(g)) throw precondition_error("regular girth bound needs a regular graph");
  if (!ctx.surface) throw precondition_error("regular girth bound needs a surface context");
  detail::require_embeddable(g, *ctx.surface, ctx.source);
  const GirthValue gv = girth(g);
  if (!gv.is_finite()) throw precondition_error("regular girth bound needs a cycle");
  const double n = g.vertex_count();
  const double gg = gv.value();
  if (gv.value() >= g.vertex_count())
    throw precondition_error("regular girth bound needs girth smaller than the vertex count");
  const double chi = static_cast<double>(euler_characteristic(*ctx.surface));
  return 2.0 * n / ((n - gg) * (gg - 2.0)) * (2.0 - gg * chi / n);
}

// Simplified cap 4/(g-2) for planar regular graphs of girth g < n.
inline double planar_regular_girth_cap(GirthValue g) {
  if (!g.is_finite() || g.value() < 3) throw precondition_error("cap needs a finite girth >= 3");
  return 4.0 / (g.value() - 2.0);
}

// a(G) <= n - ceil(n / kappa(G)) for non-complete graphs, with exact kappa.
inline double chromatic_bound(const Graph& g, const ChromaticLimits& limits = {}) {
  if (g.is_complete()) throw precondition_error("chromatic bound does not apply to complete graphs");
  const long long n = g.vertex_count();
  const long long kappa = chromatic_number(g, limits);
  return static_cast<double>(n - (n + kappa - 1) / kappa);
}

// Heawood-type surface cap: H(S) for the maximal complete graph (6 on the
// Klein bottle), C(S) = H(S)-1 for non-complete graphs, 5 for planar graphs.
inline double heawood_bound(const Graph& g, const SurfaceContext& ctx) {
  if (!ctx.surface) throw precondition_error("heawood bound needs a surface context");
  const long long chi = euler_characteristic(*ctx.surface);
  detail::require_embeddable(g, *ctx.surface, ctx.source);
  if (chi == 2) return 5.0;
  if (chi > 1) throw precondition_error("no Heawood cap for this characteristic");
  if (g.is_complete()) {
    if (ctx.surface->is_klein_bottle()) return 6.0;  // a(K_6), below H = 7
    return static_cast<double>(heawood_number(chi));
  }
  return static_cast<double>(cook_number(chi));
}

// ---------------------------------------------------------------------------
// Genus lower bound for Ramanujan graphs

namespace detail {

// exact test of 48k >= X^2 - 1 where X = 2d - 5 - 4 sqrt(d-1)
inline bool genus_bound_le(long long d, long long k) {
  using I = __int128;
  const I twod5 = 2 * d - 5;
  const I big_i = twod5 * twod5 + 16 * (d - 1);  // X^2 = big_i - j * sqrt(d-1)
  const I j = 8 * twod5;
  const I a = big_i - 1 - 48 * static_cast<I>(k);  // want j*sqrt(d-1) >= a
  if (a <= 0) return true;
  return j * j * (d - 1) >= a * a;
}

}  // namespace detail

// Orientable genus lower bound ceil(((2d - 4 sqrt(d-1) - 5)^2 - 1) / 48) for
// Ramanujan graphs of degree d >= 9 (nothing follows below 9; the d != n-1
// guard is the caller's). Boundary cases near an integer are settled by
// exact integer comparison.
inline std::optional<long long> ramanujan_genus_lower_bound(long long d) {
  if (d < 9) return std::nullopt;
  if (d > 1'000'000'000) throw std::invalid_argument("degree out of supported range");
  const double x = 2.0 * d - 4.0 * std::sqrt(static_cast<double>(d - 1)) - 5.0;
  const double estimate = (x * x - 1.0) / 48.0;
  long long k = static_cast<long long>(std::ceil(estimate)) - 2;
  if (k < 0) k = 0;
  while (!detail::genus_bound_le(d, k)) ++k;  // smallest k with 48k >= X^2-1
  return k;
}

// ---------------------------------------------------------------------------
// Asymptotic caps (closed forms; evaluated as formulas, not limits)

enum class AsymptoticClass { general, regular, regular_girth, d_regular };

struct AsymptoticCaps {
  std::optional<double> lower;  // only the general class has a witness (2)
  double upper = 0;
};

inline AsymptoticCaps asymptotic_caps(AsymptoticClass cls, int param = 0) {
  switch (cls) {
    case AsymptoticClass::general:
      return {2.0, 6.0};
    case AsymptoticClass::regular:
      return {std::nullopt, 4.0};
    case AsymptoticClass::regular_girth:
      if (param < 3) throw std::invalid_argument("girth class needs g >= 3");
      return {std::nullopt, 4.0 / (param - 2)};
    case AsymptoticClass::d_regular:
      if (param < 2) throw std::invalid_argument("degree class needs d >= 2");
      return {std::nullopt,
              param <= 10 ? param - 2.0 * std::sqrt(static_cast<double>(param - 1)) : 4.0};
  }
  throw std::invalid_argument("unknown asymptotic class");
}

// ---------------------------------------------------------------------------
// Verdict engine

struct BoundEntry {
  std::string name;
  std::optional<double> value;
  bool applicable = false;
  std::string reason;     // failed hypothesis, or a note on a conservative choice
  std::string paper_ref;  // provenance label for the bound
};

struct BoundReport {
  std::string graph_id;
  int n = 0;
  int e = 0;
  double a = 0;
  std::vector<BoundEntry> entries;
  double best_upper = 0;
  bool tight = false;

  std::string to_json() const {
    std::ostringstream out;
    out << "{\"graph\":" << jsonio::quoted(graph_id) << ",\"n\":" << n << ",\"e\":" << e
        << ",\"a\":" << jsonio::real(a) << ",\"entries\":[";
    for (size_t i = 0; i < entries.size(); ++i) {
      const auto& en = entries[i];
      if (i) out << ",";
      out << "{\"name\":" << jsonio::quoted(en.name) << ",\"value\":"
          << (en.value ? jsonio::real(*en.value) : "null")
          << ",\"applicable\":" << (en.applicable ? "true" : "false")
          << ",\"reason\":" << jsonio::quoted(en.reason)
          << ",\"paper_ref\":" << jsonio::quoted(en.paper_ref) << "}";
    }
    out << "],\"best_upper\":" << jsonio::real(best_upper)
        << ",\"tight\":" << (tight ? "true" : "false") << "}";
    return out.str();
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "graph " << graph_id << ": n=" << n << " e=" << e << "  a(G)=" << jsonio::real(a) << "\n";
    for (const auto& en : entries) {
      out << "  " << en.name << ": ";
      if (en.applicable)
        out << jsonio::real(*en.value) << (en.reason.empty() ? "" : "  [" + en.reason + "]");
      else
        out << "inapplicable (" << en.reason << ")";
      out << "  -- " << en.paper_ref << "\n";
    }
    out << "  best upper bound: " << jsonio::real(best_upper) << (tight ? "  (tight)" : "") << "\n";
    return out.str();
  }
};

struct VerdictOptions {
  double tight_tol = 1e-6;  // classification tolerance, far above solver noise
  SolverOptions solver;
  ChromaticLimits chromatic;
};

inline BoundReport verdict(const Graph& g, const SurfaceContext& ctx,
                           const VerdictOptions& opt = {}, const std::string& graph_id = "") {
  if (!is_connected(g)) throw precondition_error("verdict needs a connected graph");
  if (g.vertex_count() < 2) throw precondition_error("verdict needs at least two vertices");

  BoundReport report;
  report.graph_id = graph_id;
  report.n = g.vertex_count();
  report.e = g.edge_count();
  report.a = algebraic_connectivity(g, opt.solver);

  auto add = [&](const std::string& name, const std::string& ref,
                 const std::function<double(std::string&)>& eval) {
    BoundEntry entry;
    entry.name = name;
    entry.paper_ref = ref;
    try {
      std::string note;
      entry.value = eval(note);
      entry.applicable = true;
      entry.reason = note;
    } catch (const precondition_error& err) {
      entry.applicable = false;
      entry.reason = err.what();
    } catch (const resource_limit_error& err) {
      entry.applicable = false;
      entry.reason = err.what();
    }
    report.entries.push_back(std::move(entry));
  };

  add("fiedler_chain", "Fiedler (1973)", [&](std::string&) {
    return fiedler_chain(g).bound;
  });
  add("euler_density", "Euler formula density bound", [&](std::string& note) {
    if (!girth(g).is_finite()) note = "acyclic graph, conservative girth 3";
    return euler_density_bound(g, ctx);
  });
  add("cut_bound", "subset cut bound", [&](std::string& note) {
    const CutStrategy strategy =
        g.vertex_count() <= 16 ? CutStrategy::exhaustive : CutStrategy::fiedler_sweep;
    note = strategy == CutStrategy::exhaustive ? "exhaustive subset search" : "fiedler sweep search";
    CutBoundResult best = best_cut_bound(g, strategy);
    if (strategy != CutStrategy::exhaustive) {
      CutBoundResult viaCycles = best_cut_bound(g, CutStrategy::cycles);
      if (viaCycles.value < best.value) best = viaCycles;
    }
    return best.value;
  });
  add("regular_girth", "regular girth bound", [&](std::string&) {
    return regular_girth_bound(g, ctx);
  });
  add("chromatic", "chromatic partition bound", [&](std::string&) {
    return chromatic_bound(g, opt.chromatic);
  });
  add("heawood_surface", "Heawood-type surface bound", [&](std::string& note) {
    if (ctx.surface && ctx.surface->is_klein_bottle() && g.is_complete())
      note = "Klein bottle cap 6 below Heawood number 7";
    return heawood_bound(g, ctx);
  });

  report.best_upper = std::numeric_limits<double>::infinity();
  for (const auto& entry : report.entries)
    if (entry.applicable) report.best_upper = std::min(report.best_upper, *entry.value);
  report.tight = std::abs(report.a - report.best_upper) <= opt.tight_tol;
  return report;
}

}  // namespace heawood
