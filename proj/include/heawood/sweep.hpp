#pragma once

// Sweep harnesses: run a predicate over every small connected graph (one per
// isomorphism class) and report counterexamples and extremal graphs. Sweeps
// of proved theorems must come back empty; the conjecture sweeps gather
// evidence only. Reports are deterministic for any worker count: graphs are
// visited in canonical order and results merged back in that order.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "heawood/bounds.hpp"
#include "heawood/enumerate.hpp"
#include "heawood/graph6.hpp"
#include "heawood/json.hpp"
#include "heawood/spectral.hpp"

namespace heawood {

enum class SweepPredicate {
  conjecture1_planar_cap,
  conjecture2_planar_bipartite,
  fiedler_chain_holds,
  planar_dmax5_cap,
  planar_cubic_cap,
  chromatic_bound_holds,
  cut_bound_universal,
};

inline const char* to_string(SweepPredicate p) {
  switch (p) {
    case SweepPredicate::conjecture1_planar_cap: return "conjecture1_planar_cap";
    case SweepPredicate::conjecture2_planar_bipartite: return "conjecture2_planar_bipartite";
    case SweepPredicate::fiedler_chain_holds: return "fiedler_chain_holds";
    case SweepPredicate::planar_dmax5_cap: return "planar_dmax5_cap";
    case SweepPredicate::planar_cubic_cap: return "planar_cubic_cap";
    case SweepPredicate::chromatic_bound_holds: return "chromatic_bound_holds";
    case SweepPredicate::cut_bound_universal: return "cut_bound_universal";
  }
  return "?";
}

inline SweepPredicate parse_predicate(const std::string& s) {
  for (SweepPredicate p :
       {SweepPredicate::conjecture1_planar_cap, SweepPredicate::conjecture2_planar_bipartite,
        SweepPredicate::fiedler_chain_holds, SweepPredicate::planar_dmax5_cap,
        SweepPredicate::planar_cubic_cap, SweepPredicate::chromatic_bound_holds,
        SweepPredicate::cut_bound_universal})
    if (s == to_string(p)) return p;
  throw std::invalid_argument("unknown predicate '" + s + "'");
}

struct SweepFilters {
  bool planar = false;
  bool bipartite = false;
  bool regular = false;
  bool cubic = false;
  std::optional<int> max_degree;

  std::vector<std::string> describe() const {
    std::vector<std::string> out;
    if (planar) out.push_back("planar");
    if (bipartite) out.push_back("bipartite");
    if (regular) out.push_back("regular");
    if (cubic) out.push_back("cubic");
    if (max_degree) out.push_back("dmax<=" + std::to_string(*max_degree));
    return out;
  }

  static SweepFilters parse(const std::vector<std::string>& tokens) {
    SweepFilters f;
    for (const auto& t : tokens) {
      if (t == "planar") f.planar = true;
      else if (t == "bipartite") f.bipartite = true;
      else if (t == "regular") f.regular = true;
      else if (t == "cubic") f.cubic = true;
      else if (t.rfind("dmax<=", 0) == 0) f.max_degree = std::stoi(t.substr(6));
      else throw std::invalid_argument("unknown filter '" + t + "'");
    }
    return f;
  }
};

struct ExtremalEntry {
  std::string g6;
  double a = 0;
  double bound = 0;
};

struct SweepReport {
  std::string predicate;
  int n_max = 0;
  std::vector<std::string> filters;
  long long checked = 0;
  std::vector<std::string> counterexamples;  // graph6
  std::vector<ExtremalEntry> extremal;       // bound attained within 1e-6

  std::string to_json() const {
    std::ostringstream out;
    out << "{\"predicate\":" << jsonio::quoted(predicate) << ",\"n_max\":" << n_max
        << ",\"filters\":[";
    for (size_t i = 0; i < filters.size(); ++i)
      out << (i ? "," : "") << jsonio::quoted(filters[i]);
    out << "],\"checked\":" << checked << ",\"counterexamples\":[";
    for (size_t i = 0; i < counterexamples.size(); ++i)
      out << (i ? "," : "") << jsonio::quoted(counterexamples[i]);
    out << "],\"extremal\":[";
    for (size_t i = 0; i < extremal.size(); ++i) {
      out << (i ? "," : "") << "{\"g6\":" << jsonio::quoted(extremal[i].g6)
          << ",\"a\":" << jsonio::real(extremal[i].a)
          << ",\"bound\":" << jsonio::real(extremal[i].bound) << "}";
    }
    out << "]}";
    return out.str();
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "sweep " << predicate << "  n<=" << n_max << "  filters=[";
    for (size_t i = 0; i < filters.size(); ++i) out << (i ? "," : "") << filters[i];
    out << "]\n  graphs checked: " << checked << "\n";
    if (counterexamples.empty()) {
      out << "  counterexamples: none\n";
    } else {
      out << "  *** COUNTEREXAMPLES FOUND (" << counterexamples.size() << ") ***\n";
      for (const auto& g6 : counterexamples) out << "  *** " << g6 << "\n";
    }
    out << "  extremal graphs (" << extremal.size() << "):\n";
    for (const auto& x : extremal)
      out << "    " << x.g6 << "  a=" << jsonio::real(x.a) << "  bound=" << jsonio::real(x.bound)
          << "\n";
    return out.str();
  }
};

struct SweepOptions {
  SweepPredicate predicate = SweepPredicate::fiedler_chain_holds;
  int n_max = 8;
  SweepFilters filters;
  int workers = 1;
  double tol = 1e-6;
};

namespace detail {

struct PerGraphOutcome {
  bool evaluated = false;
  bool violated = false;
  double a = 0;
  double bound = 0;
};

// Evaluation of one predicate on one connected graph. Returns nothing when
// the graph does not meet the predicate's hypotheses.
inline PerGraphOutcome evaluate_predicate(SweepPredicate pred, const Graph& g, double tol) {
  PerGraphOutcome out;
  const double a = g.vertex_count() >= 2 ? algebraic_connectivity(g) : 0.0;
  auto finish = [&](double bound) {
    out.evaluated = true;
    out.a = a;
    out.bound = bound;
    out.violated = a > bound + tol;
  };
  switch (pred) {
    case SweepPredicate::conjecture1_planar_cap:
      if (g.vertex_count() < 2 || !is_planar(g).planar) return out;
      finish(4.0);
      return out;
    case SweepPredicate::conjecture2_planar_bipartite:
      if (g.vertex_count() < 2 || !is_planar(g).planar || !is_bipartite(g)) return out;
      finish(2.0);
      return out;
    case SweepPredicate::fiedler_chain_holds: {
      if (g.vertex_count() < 2 || g.is_complete()) return out;
      const FiedlerChain chain = fiedler_chain(g);
      finish(chain.bound);
      // the whole chain must be ordered, not just its first link
      if (!(chain.vertex_connectivity <= chain.min_degree &&
            chain.min_degree <= chain.average_degree + tol))
        out.violated = true;
      return out;
    }
    case SweepPredicate::planar_dmax5_cap:
      if (g.vertex_count() < 2 || g.max_degree() > 5 || !is_planar(g).planar) return out;
      finish(4.0);
      return out;
    case SweepPredicate::planar_cubic_cap:
      if (g.vertex_count() < 2 || regular_degree(g) != std::optional<int>(3)) return out;
      if (g.is_complete()) return out;  // K_4 is the stated exception
      if (!is_planar(g).planar) return out;
      finish(2.0);
      return out;
    case SweepPredicate::chromatic_bound_holds:
      if (g.vertex_count() < 2 || g.is_complete()) return out;
      finish(chromatic_bound(g));
      return out;
    case SweepPredicate::cut_bound_universal:
      if (g.vertex_count() < 2) return out;
      finish(best_cut_bound(g, CutStrategy::exhaustive).value);
      return out;
  }
  return out;
}

inline bool passes_filters(const Graph& g, const SweepFilters& f) {
  if (f.max_degree && g.max_degree() > *f.max_degree) return false;
  if (f.regular && !regular_degree(g)) return false;
  if (f.cubic && regular_degree(g) != std::optional<int>(3)) return false;
  if (f.bipartite && !is_bipartite(g)) return false;
  if (f.planar && !is_planar(g).planar) return false;
  return true;
}

}  // namespace detail

// Enumeration cap from the environment (default 8).
inline int enumeration_cap() {
  if (const char* env = std::getenv("HEAWOOD_MAX_N")) {
    const int cap = std::atoi(env);
    if (cap >= 1) return cap;
  }
  return 8;
}

inline SweepReport run_sweep(const SweepOptions& opt) {
  if (opt.n_max < 1 || opt.n_max > 9)
    throw std::invalid_argument("sweep supports n_max <= 9");
  if (opt.n_max > enumeration_cap())
    throw resource_limit_error("sweep n_max exceeds HEAWOOD_MAX_N cap of " +
                               std::to_string(enumeration_cap()));
  SweepReport report;
  report.predicate = to_string(opt.predicate);
  report.n_max = opt.n_max;
  report.filters = opt.filters.describe();

  for (int n = 1; n <= opt.n_max; ++n) {
    const std::vector<Graph>& graphs = generate_connected(n);
    const int count = static_cast<int>(graphs.size());
    std::vector<detail::PerGraphOutcome> results(count);
    const int workers = std::max(1, opt.workers);

    std::vector<std::exception_ptr> errors(workers);
    const int block = (count + workers - 1) / workers;  // contiguous canonical-order blocks
    auto work = [&](int w) {
      try {
        const int lo = w * block, hi = std::min(count, lo + block);
        for (int i = lo; i < hi; ++i) {
          if (!detail::passes_filters(graphs[i], opt.filters)) continue;
          results[i] = detail::evaluate_predicate(opt.predicate, graphs[i], opt.tol);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);

    for (int i = 0; i < count; ++i) {  // canonical order merge
      const auto& r = results[i];
      if (!r.evaluated) continue;
      ++report.checked;
      if (r.violated) report.counterexamples.push_back(graph6_encode(graphs[i]));
      else if (std::abs(r.a - r.bound) <= opt.tol)
        report.extremal.push_back({graph6_encode(graphs[i]), r.a, r.bound});
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Family trends: a(G_n) along a size-parameterized family.

struct TrendPoint {
  int n = 0;
  double a = 0;
};

inline bool family_is_sized(const std::string& name) {
  return name == "complete" || name == "cycle" || name == "path" || name == "empty" ||
         name == "double_wheel" || name == "near_complete";
}

inline std::vector<TrendPoint> trend(const std::string& family_name, int lo, int hi) {
  if (!family_is_sized(family_name))
    throw std::invalid_argument("family '" + family_name + "' is not size-parameterized");
  if (lo > hi) throw std::invalid_argument("empty trend range");
  std::vector<TrendPoint> out;
  for (int n = lo; n <= hi; ++n) {
    const Graph g = family(family_name, {n});
    out.push_back({n, algebraic_connectivity(g)});
  }
  return out;
}

inline std::string trend_to_json(const std::string& family_name, const std::vector<TrendPoint>& pts) {
  std::ostringstream out;
  out << "{\"family\":" << jsonio::quoted(family_name) << ",\"points\":[";
  for (size_t i = 0; i < pts.size(); ++i)
    out << (i ? "," : "") << "{\"n\":" << pts[i].n << ",\"a\":" << jsonio::real(pts[i].a) << "}";
  out << "]}";
  return out.str();
}

}  // namespace heawood
