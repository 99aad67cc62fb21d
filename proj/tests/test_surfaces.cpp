#include <catch2/catch_amalgamated.hpp>

#include "heawood/surfaces.hpp"

using namespace heawood;

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(Surface::sphere()) == 2);
  CHECK(euler_characteristic(Surface::torus()) == 0);
  CHECK(euler_characteristic(Surface::projective_plane()) == 1);
  CHECK(euler_characteristic(Surface::klein_bottle()) == 0);
  CHECK(euler_characteristic({true, 3}) == -4);
  CHECK(euler_characteristic({false, 5}) == -3);
  CHECK_THROWS_AS(euler_characteristic({false, 0}), std::invalid_argument);
  CHECK_THROWS_AS(euler_characteristic({true, -1}), std::invalid_argument);
}

TEST_CASE("integer square root") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(48) == 6);
  CHECK(isqrt(49) == 7);
  CHECK(isqrt(50) == 7);
  for (std::uint64_t x = 0; x < 4000; ++x) {
    const std::uint64_t r = isqrt(x);
    CHECK(r * r <= x);
    CHECK((r + 1) * (r + 1) > x);
  }
}

TEST_CASE("heawood numbers") {
  CHECK(heawood_number(2) == 4);   // sphere
  CHECK(heawood_number(1) == 6);   // projective plane
  CHECK(heawood_number(0) == 7);   // torus / Klein bottle
  CHECK(heawood_number(-2) == 8);
  CHECK(heawood_number(-4) == 9);
  CHECK(heawood_number(-10) == 12);  // 49 + 240 = 17^2, a perfect-square boundary
  CHECK_THROWS_AS(heawood_number(3), std::invalid_argument);
}

TEST_CASE("cook numbers") {
  CHECK(cook_number(0) == 6);
  CHECK(cook_number(1) == 5);
  CHECK(cook_number(-2) == 7);
  CHECK_THROWS_AS(cook_number(2), std::invalid_argument);
  // the two formulas differ by exactly one in the numerator
  for (long long chi = 1; chi >= -100; --chi)
    CHECK(heawood_number(chi) == cook_number(chi) + 1);
}

TEST_CASE("planar girth cap on vertex connectivity") {
  CHECK(cook_planar_girth_cap(GirthValue::of(3)) == 5);
  CHECK(cook_planar_girth_cap(GirthValue::of(4)) == 3);
  CHECK(cook_planar_girth_cap(GirthValue::of(5)) == 3);
  CHECK(cook_planar_girth_cap(GirthValue::of(6)) == 2);
  CHECK(cook_planar_girth_cap(GirthValue::of(11)) == 2);
  CHECK(cook_planar_girth_cap(GirthValue::infinite()) == 2);
  CHECK_THROWS_AS(cook_planar_girth_cap(GirthValue::of(2)), std::invalid_argument);
}

TEST_CASE("complete graph genus") {
  CHECK(complete_graph_genus(4, true) == 0);
  CHECK(complete_graph_genus(5, true) == 1);
  CHECK(complete_graph_genus(7, true) == 1);
  CHECK(complete_graph_genus(8, true) == 2);
  CHECK(complete_graph_genus(5, false) == 1);
  CHECK(complete_graph_genus(6, false) == 1);
  CHECK(complete_graph_genus(7, false) == 3);  // the exceptional case
  CHECK(complete_graph_genus(8, false) == 4);
  CHECK_THROWS_AS(complete_graph_genus(2, true), std::invalid_argument);
}

TEST_CASE("maximal complete graph per surface") {
  CHECK(maximal_complete_graph(Surface::sphere()) == 4);
  CHECK(maximal_complete_graph(Surface::torus()) == 7);
  CHECK(maximal_complete_graph(Surface::projective_plane()) == 6);
  CHECK(maximal_complete_graph(Surface::klein_bottle()) == 6);  // not 7
  CHECK(maximal_complete_graph({true, 2}) == 8);
  CHECK(maximal_complete_graph({false, 3}) == 7);

  // K^gamma order equals the Heawood number except on the Klein bottle
  for (int h = 1; h <= 30; ++h)
    CHECK(maximal_complete_graph({true, h}) == heawood_number(2 - 2LL * h));
  for (int k = 1; k <= 30; ++k) {
    const Surface s{false, k};
    if (s.is_klein_bottle()) continue;
    CHECK(maximal_complete_graph(s) == heawood_number(2 - 1LL * k));
  }
}

TEST_CASE("K_{H(chi)} embeds in its surface") {
  for (int h = 1; h <= 50; ++h)
    CHECK(complete_graph_genus(heawood_number(2 - 2LL * h), true) <= h);
}

TEST_CASE("euler edge bound") {
  CHECK(euler_edge_bound(12, GirthValue::of(3), 2) == 30);
  CHECK(euler_edge_bound(6, GirthValue::of(4), 2) == 8);    // rules out K_{3,3}
  CHECK(euler_edge_bound(7, GirthValue::of(3), 0) == 21);   // K_7 fits the torus exactly
  CHECK(euler_edge_bound(10, GirthValue::infinite(), 2) == 24);  // conservative g = 3
  CHECK_THROWS_AS(euler_edge_bound(2, GirthValue::of(3), 2), std::invalid_argument);
}
