#pragma once

// Exact planarity testing (left-right / LR partition algorithm) and
// Kuratowski witness extraction. When a graph is nonplanar we peel edges
// whose removal keeps it nonplanar; what remains is exactly a subdivision of
// K_5 or K_{3,3}, classified by its branch-vertex degrees.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heawood/graph.hpp"

namespace heawood {

namespace detail {

// Left-right planarity criterion. Edges are directed by a DFS orientation;
// ids are s * n + t for the directed edge s->t.
class LRPlanarity {
 public:
  explicit LRPlanarity(const Graph& g)
      : g_(g),
        n_(g.vertex_count()),
        height_(n_, -1),
        parent_edge_(n_, kNone),
        lowpt_(static_cast<size_t>(n_) * n_, 0),
        lowpt2_(static_cast<size_t>(n_) * n_, 0),
        nesting_(static_cast<size_t>(n_) * n_, 0),
        oriented_(static_cast<size_t>(n_) * n_, 0),
        ref_(static_cast<size_t>(n_) * n_, kNone),
        lowpt_edge_(static_cast<size_t>(n_) * n_, kNone),
        stack_bottom_(static_cast<size_t>(n_) * n_, -1),
        ordered_adj_(n_) {}

  bool run() {
    if (n_ >= 3 && g_.edge_count() > 3 * n_ - 6) return false;
    for (int s = 0; s < n_; ++s)
      if (height_[s] < 0) {
        height_[s] = 0;
        roots_.push_back(s);
        dfs_orient(s);
      }
    for (int v = 0; v < n_; ++v) {
      ordered_adj_[v] = g_.neighbors(v);
      std::sort(ordered_adj_[v].begin(), ordered_adj_[v].end(), [&](int a, int b) {
        int na = oriented_[id(v, a)] ? nesting_[id(v, a)] : INT32_MAX;
        int nb = oriented_[id(v, b)] ? nesting_[id(v, b)] : INT32_MAX;
        if (na != nb) return na < nb;
        return a < b;
      });
    }
    for (int s : roots_)
      if (!dfs_test(s)) return false;
    return true;
  }

 private:
  static constexpr int kNone = -1;

  struct Interval {
    int low = kNone, high = kNone;
    bool empty() const { return low == kNone && high == kNone; }
  };
  struct ConflictPair {
    Interval L, R;
    void swap_sides() { std::swap(L, R); }
  };

  int id(int s, int t) const { return s * n_ + t; }
  int src(int e) const { return e / n_; }
  int tgt(int e) const { return e % n_; }

  void dfs_orient(int v) {
    const int e = parent_edge_[v];
    for (int w : g_.neighbors(v)) {
      const int vw = id(v, w);
      if (oriented_[vw] || oriented_[id(w, v)]) continue;
      oriented_[vw] = 1;
      lowpt_[vw] = height_[v];
      lowpt2_[vw] = height_[v];
      if (height_[w] < 0) {  // tree edge
        parent_edge_[w] = vw;
        height_[w] = height_[v] + 1;
        dfs_orient(w);
      } else {  // back edge
        lowpt_[vw] = height_[w];
      }
      nesting_[vw] = 2 * lowpt_[vw];
      if (lowpt2_[vw] < height_[v]) ++nesting_[vw];  // chordal
      if (e != kNone) {
        if (lowpt_[vw] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
          lowpt_[e] = lowpt_[vw];
        } else if (lowpt_[vw] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
        }
      }
    }
  }

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }

  int lowest(const ConflictPair& p) const {
    if (p.L.empty() && p.R.empty())
      throw std::logic_error("lr planarity: fully trimmed conflict pair");
    if (p.L.empty()) return lowpt_[p.R.low];
    if (p.R.empty()) return lowpt_[p.L.low];
    return std::min(lowpt_[p.L.low], lowpt_[p.R.low]);
  }

  bool dfs_test(int v) {
    const int e = parent_edge_[v];
    bool first_outgoing = true;
    for (int w : ordered_adj_[v]) {
      const int ei = id(v, w);
      if (!oriented_[ei]) continue;  // handled from the other endpoint
      stack_bottom_[ei] = static_cast<int>(stack_.size());
      if (ei == parent_edge_[w]) {
        if (!dfs_test(w)) return false;
      } else {
        lowpt_edge_[ei] = ei;
        stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
      }
      if (lowpt_[ei] < height_[v]) {  // ei has a return edge
        if (first_outgoing) {
          if (e != kNone) lowpt_edge_[e] = lowpt_edge_[ei];
        } else {
          if (!add_constraints(ei, e)) return false;
        }
      }
      first_outgoing = false;
    }
    if (e != kNone) {
      const int u = src(e);
      trim_back_edges(u);
      if (lowpt_[e] < height_[u]) {  // e has a return edge
        if (stack_.empty()) throw std::logic_error("lr planarity: empty stack at side pick");
        const int hl = stack_.back().L.high;
        const int hr = stack_.back().R.high;
        if (hl != kNone && (hr == kNone || lowpt_[hl] > lowpt_[hr]))
          ref_[e] = hl;
        else
          ref_[e] = hr;
      }
    }
    return true;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    // merge return edges of ei into p.R
    do {
      if (stack_.empty()) throw std::logic_error("lr planarity: conflict stack underflow");
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (!q.L.empty()) q.swap_sides();
      if (!q.L.empty()) return false;  // two sides forced onto one
      if (lowpt_[q.R.low] > lowpt_[e]) {
        if (p.R.empty())
          p.R.high = q.R.high;
        else
          ref_[p.R.low] = q.R.high;
        p.R.low = q.R.low;
      } else {
        ref_[q.R.low] = lowpt_edge_[e];
      }
    } while (static_cast<int>(stack_.size()) != stack_bottom_[ei]);
    // merge conflicting return edges of earlier siblings into p.L
    while (!stack_.empty() &&
           (conflicting(stack_.back().L, ei) || conflicting(stack_.back().R, ei))) {
      ConflictPair q = stack_.back();
      stack_.pop_back();
      if (conflicting(q.R, ei)) q.swap_sides();
      if (conflicting(q.R, ei)) return false;
      // interval of q.R below lowpt(ei) stays on the right side
      if (p.R.low != kNone) ref_[p.R.low] = q.R.high;
      if (q.R.low != kNone) p.R.low = q.R.low;
      if (p.L.empty())
        p.L.high = q.L.high;
      else
        ref_[p.L.low] = q.L.high;
      p.L.low = q.L.low;
    }
    if (!p.L.empty() || !p.R.empty()) stack_.push_back(p);
    return true;
  }

  void trim_back_edges(int u) {
    // drop entries that return only to u
    while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
    if (stack_.empty()) return;
    ConflictPair p = stack_.back();
    stack_.pop_back();
    while (p.L.high != kNone && tgt(p.L.high) == u) p.L.high = ref_[p.L.high];
    if (p.L.high == kNone && p.L.low != kNone) {
      ref_[p.L.low] = p.R.low;
      p.L.low = kNone;
    }
    while (p.R.high != kNone && tgt(p.R.high) == u) p.R.high = ref_[p.R.high];
    if (p.R.high == kNone && p.R.low != kNone) {
      ref_[p.R.low] = p.L.low;
      p.R.low = kNone;
    }
    stack_.push_back(p);
  }

  const Graph& g_;
  int n_;
  std::vector<int> height_, parent_edge_;
  std::vector<int> lowpt_, lowpt2_, nesting_;
  std::vector<char> oriented_;
  std::vector<int> ref_, lowpt_edge_, stack_bottom_;
  std::vector<std::vector<int>> ordered_adj_;
  std::vector<ConflictPair> stack_;
  std::vector<int> roots_;
};

inline bool lr_planar(const Graph& g) {
  if (g.vertex_count() <= 4) return true;
  return LRPlanarity(g).run();
}

}  // namespace detail

struct KuratowskiWitness {
  enum class Kind { K5, K33 };
  Kind kind = Kind::K5;
  std::vector<int> branch_vertices;  // degree >= 3 vertices of the subdivision
  std::vector<Edge> subdivision_edges;

  std::string describe() const {
    std::string s = kind == Kind::K5 ? "K5 subdivision on branch vertices {"
                                     : "K3,3 subdivision on branch vertices {";
    for (size_t i = 0; i < branch_vertices.size(); ++i)
      s += (i ? "," : "") + std::to_string(branch_vertices[i]);
    s += "}";
    return s;
  }
};

struct PlanarityVerdict {
  bool planar = false;
  std::optional<KuratowskiWitness> witness;  // present iff non-planar
};

namespace detail {

inline KuratowskiWitness extract_kuratowski(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  const int n = g.vertex_count();
  // peel every edge whose removal keeps the graph nonplanar; one pass is
  // enough because subgraphs of planar graphs stay planar
  for (size_t i = 0; i < edges.size();) {
    std::vector<Edge> trial = edges;
    trial.erase(trial.begin() + static_cast<long>(i));
    Graph h = Graph::build(n, trial);
    if (!lr_planar(h)) {
      edges = std::move(trial);
    } else {
      ++i;
    }
  }
  Graph h = Graph::build(n, edges);
  KuratowskiWitness w;
  w.subdivision_edges = edges;
  for (int v = 0; v < n; ++v)
    if (h.degree(v) >= 3) w.branch_vertices.push_back(v);
  w.kind = w.branch_vertices.size() == 5 ? KuratowskiWitness::Kind::K5
                                         : KuratowskiWitness::Kind::K33;
  return w;
}

}  // namespace detail

inline PlanarityVerdict is_planar(const Graph& g) {
  PlanarityVerdict v;
  v.planar = detail::lr_planar(g);
  if (!v.planar) v.witness = detail::extract_kuratowski(g);
  return v;
}

}  // namespace heawood
