#pragma once

// Surface arithmetic: Euler characteristic, Heawood and Cook numbers,
// complete-graph genus formulas, the largest complete graph per surface, and
// the Euler-formula edge bound. Everything here is integer arithmetic; the
// Heawood/Cook floors are evaluated with integer square roots because the
// extremal cases sit exactly on perfect squares.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "heawood/invariants.hpp"

namespace heawood {

struct Surface {
  bool orientable = true;
  int genus = 0;  // handles when orientable, crosscaps (>= 1) otherwise

  static Surface sphere() { return {true, 0}; }
  static Surface torus() { return {true, 1}; }
  static Surface projective_plane() { return {false, 1}; }
  static Surface klein_bottle() { return {false, 2}; }

  bool operator==(const Surface& o) const {
    return orientable == o.orientable && genus == o.genus;
  }
  bool is_klein_bottle() const { return !orientable && genus == 2; }

  std::string name() const {
    if (orientable) {
      if (genus == 0) return "sphere";
      if (genus == 1) return "torus";
      return "orientable genus " + std::to_string(genus);
    }
    if (genus == 1) return "projective plane";
    if (genus == 2) return "Klein bottle";
    return "non-orientable genus " + std::to_string(genus);
  }
};

inline void validate(const Surface& s) {
  if (s.genus < 0) throw std::invalid_argument("surface genus must be nonnegative");
  if (!s.orientable && s.genus == 0)
    throw std::invalid_argument("non-orientable genus zero is not a surface");
}

inline long long euler_characteristic(const Surface& s) {
  validate(s);
  return s.orientable ? 2 - 2LL * s.genus : 2 - 1LL * s.genus;
}

// floor(sqrt(x)) in pure integer arithmetic.
inline std::uint64_t isqrt(std::uint64_t x) {
  if (x == 0) return 0;
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// H(S) = floor((7 + sqrt(49 - 24*chi)) / 2). Using the integer square root
// gives the same floor, since the outer floor jumps only at perfect squares.
inline long long heawood_number(long long chi) {
  if (chi > 2) throw std::invalid_argument("Heawood number needs chi <= 2");
  const std::uint64_t s = isqrt(static_cast<std::uint64_t>(49 - 24 * chi));
  return (7 + static_cast<long long>(s)) / 2;
}

// C(S) = floor((5 + sqrt(49 - 24*chi)) / 2), an upper bound on the vertex
// connectivity of graphs embeddable in S; valid down from the projective
// plane (chi = 1).
inline long long cook_number(long long chi) {
  if (chi > 1) throw std::invalid_argument("Cook number needs chi <= 1");
  const std::uint64_t s = isqrt(static_cast<std::uint64_t>(49 - 24 * chi));
  return (5 + static_cast<long long>(s)) / 2;
}

// Vertex-connectivity cap for planar graphs by girth. Acyclic graphs take
// the g >= 6 row (they have no shorter cycle to exploit).
inline int cook_planar_girth_cap(GirthValue g) {
  if (!g.is_finite()) return 2;
  if (g.value() < 3) throw std::invalid_argument("girth must be at least 3");
  if (g.value() == 3) return 5;
  if (g.value() <= 5) return 3;
  return 2;
}

// Genus of K_p: ceil((p-3)(p-4)/12) orientable, ceil((p-3)(p-4)/6)
// non-orientable except K_7, which needs three crosscaps.
inline long long complete_graph_genus(long long p, bool orientable) {
  if (p < 3) throw std::invalid_argument("complete graph genus needs p >= 3");
  const long long num = (p - 3) * (p - 4);
  if (orientable) return (num + 11) / 12;
  if (p == 7) return 3;
  return (num + 5) / 6;
}

// Order of the largest complete graph embeddable in s. Coincides with the
// Heawood number except on the Klein bottle (K_6, not K_7) and the sphere.
inline int maximal_complete_graph(const Surface& s) {
  validate(s);
  int best = 4;  // K_4 embeds in every surface
  for (int p = 5;; ++p) {
    if (complete_graph_genus(p, s.orientable) > s.genus) break;
    best = p;
  }
  return best;
}

// Edge bound from Euler's formula: e <= g/(g-2) * (n - chi) for a graph of
// girth g embeddable in a surface of characteristic chi. Acyclic graphs take
// g = 3, the weakest cap.
inline long long euler_edge_bound(long long n, GirthValue girth, long long chi) {
  if (n < 3) throw std::invalid_argument("euler edge bound needs n >= 3");
  const long long g = girth.is_finite() ? girth.value() : 3;
  if (g < 3) throw std::invalid_argument("girth must be at least 3");
  if (n - chi < 0) return 0;
  return g * (n - chi) / (g - 2);
}

}  // namespace heawood
