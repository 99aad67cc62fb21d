#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <set>

#include <json.hpp>

#include "heawood/enumerate.hpp"
#include "heawood/sweep.hpp"

using namespace heawood;
using Catch::Approx;

namespace {

std::string canonical_g6(const Graph& g) { return graph6_encode(canonical_form(g)); }

SweepReport sweep_of(SweepPredicate p, int n_max, int workers = 1, SweepFilters filters = {}) {
  SweepOptions opt;
  opt.predicate = p;
  opt.n_max = n_max;
  opt.workers = workers;
  opt.filters = filters;
  return run_sweep(opt);
}

}  // namespace

TEST_CASE("theorem-backed sweeps come back clean") {
  for (SweepPredicate p :
       {SweepPredicate::fiedler_chain_holds, SweepPredicate::chromatic_bound_holds,
        SweepPredicate::cut_bound_universal, SweepPredicate::planar_dmax5_cap,
        SweepPredicate::planar_cubic_cap}) {
    const SweepReport report = sweep_of(p, 6);
    INFO(report.predicate);
    CHECK(report.counterexamples.empty());
    CHECK(report.checked > 0);
  }
}

TEST_CASE("theorem-backed sweeps stay clean through n = 8") {
  for (SweepPredicate p :
       {SweepPredicate::fiedler_chain_holds, SweepPredicate::chromatic_bound_holds,
        SweepPredicate::cut_bound_universal, SweepPredicate::planar_dmax5_cap,
        SweepPredicate::planar_cubic_cap}) {
    const SweepReport report = sweep_of(p, 8, 2);
    INFO(report.predicate);
    REQUIRE(report.counterexamples.empty());
  }
}

TEST_CASE("conjectured planar cap: evidence with the known extremal pair") {
  const SweepReport report = sweep_of(SweepPredicate::conjecture1_planar_cap, 6);
  CHECK(report.counterexamples.empty());
  std::set<std::string> extremal;
  for (const auto& x : report.extremal) extremal.insert(x.g6);
  const std::set<std::string> expected = {canonical_g6(complete_graph(4)),
                                          canonical_g6(octahedron())};
  CHECK(extremal == expected);
}

TEST_CASE("conjectured planar bipartite cap: report shape only") {
  const SweepReport report = sweep_of(SweepPredicate::conjecture2_planar_bipartite, 7);
  CHECK(report.checked > 0);
  CHECK(report.predicate == "conjecture2_planar_bipartite");
  // counterexample list re-verifies on decode
  for (const auto& g6 : report.counterexamples) {
    const Graph g = graph6_decode(g6);
    CHECK(algebraic_connectivity(g) > 2.0 + 1e-6);
  }
}

TEST_CASE("cubic cap sees the prism as extremal") {
  const SweepReport report = sweep_of(SweepPredicate::planar_cubic_cap, 6);
  REQUIRE(report.extremal.size() == 1);
  CHECK(report.extremal[0].g6 == canonical_g6(prism_3()));
  CHECK(report.extremal[0].a == Approx(2.0).margin(1e-8));
}

TEST_CASE("filters restrict the checked set") {
  SweepFilters cubic;
  cubic.cubic = true;
  // connected cubic non-complete graphs up to 6 vertices: prism and K_{3,3}
  const SweepReport r = sweep_of(SweepPredicate::fiedler_chain_holds, 6, 1, cubic);
  CHECK(r.checked == 2);

  SweepFilters dmax2;
  dmax2.max_degree = 2;
  const SweepReport paths = sweep_of(SweepPredicate::fiedler_chain_holds, 5, 1, dmax2);
  // paths and cycles only (P2 = K2 and C3 = K3 are complete, skipped)
  CHECK(paths.checked == 5);

  SweepFilters parse_check = SweepFilters::parse({"planar", "dmax<=3", "bipartite"});
  CHECK(parse_check.planar);
  CHECK(parse_check.bipartite);
  CHECK(parse_check.max_degree == std::optional<int>(3));
  CHECK_THROWS_AS(SweepFilters::parse({"nonsense"}), std::invalid_argument);
}

TEST_CASE("sweep reports are byte-identical for any worker count") {
  for (SweepPredicate p :
       {SweepPredicate::conjecture1_planar_cap, SweepPredicate::fiedler_chain_holds}) {
    const std::string one = sweep_of(p, 6, 1).to_json();
    const std::string eight = sweep_of(p, 6, 8).to_json();
    REQUIRE(one == eight);
  }
}

TEST_CASE("sweep json is schema stable") {
  SweepFilters f;
  f.planar = true;
  const SweepReport report = sweep_of(SweepPredicate::conjecture1_planar_cap, 5, 2, f);
  auto parsed = nlohmann::json::parse(report.to_json());
  CHECK(parsed["predicate"] == "conjecture1_planar_cap");
  CHECK(parsed["n_max"] == 5);
  CHECK(parsed["filters"] == nlohmann::json::array({"planar"}));
  CHECK(parsed["checked"].get<long long>() == report.checked);
  CHECK(parsed["counterexamples"].is_array());
  CHECK(parsed["extremal"].is_array());
  for (const auto& x : parsed["extremal"]) {
    CHECK(x.contains("g6"));
    CHECK(x.contains("a"));
    CHECK(x.contains("bound"));
  }
}

TEST_CASE("sweep validates its inputs") {
  CHECK_THROWS_AS(parse_predicate("nonsense"), std::invalid_argument);
  SweepOptions opt;
  opt.n_max = 10;
  CHECK_THROWS_AS(run_sweep(opt), std::invalid_argument);

  // the environment cap turns oversized requests into resource errors
  setenv("HEAWOOD_MAX_N", "5", 1);
  SweepOptions capped;
  capped.n_max = 7;
  CHECK_THROWS_AS(run_sweep(capped), resource_limit_error);
  unsetenv("HEAWOOD_MAX_N");
  CHECK(enumeration_cap() == 8);
}

TEST_CASE("trend on the double wheel matches its closed form") {
  const auto points = trend("double_wheel", 4, 20);
  REQUIRE(points.size() == 17);
  for (const auto& [n, a] : points) {
    const double want = std::min(4.0 - 2.0 * std::cos(2.0 * std::acos(-1.0) / n),
                                 static_cast<double>(n));
    CHECK(a == Approx(want).margin(1e-8));
  }
}

TEST_CASE("trend on cycles and complete graphs") {
  for (const auto& [n, a] : trend("cycle", 3, 20))
    CHECK(a == Approx(2.0 - 2.0 * std::cos(2.0 * std::acos(-1.0) / n)).margin(1e-8));
  // path closed form a(P_n) = 2 - 2cos(pi/n)
  for (const auto& [n, a] : trend("path", 2, 20))
    CHECK(a == Approx(2.0 - 2.0 * std::cos(std::acos(-1.0) / n)).margin(1e-8));
  for (const auto& [n, a] : trend("complete", 3, 10)) CHECK(a == Approx(n).margin(1e-8));
  for (const auto& [n, a] : trend("empty", 2, 5)) CHECK(a == Approx(0.0).margin(1e-10));
  // the pendant vertex pins the near-complete family at 1
  for (const auto& [n, a] : trend("near_complete", 2, 8)) CHECK(a == Approx(1.0).margin(1e-8));
}

TEST_CASE("trend rejects unsized families and empty ranges") {
  CHECK_THROWS_AS(trend("octahedron", 4, 8), std::invalid_argument);
  CHECK_THROWS_AS(trend("petersen", 4, 8), std::invalid_argument);
  CHECK_THROWS_AS(trend("cycle", 8, 4), std::invalid_argument);
  auto json = trend_to_json("cycle", trend("cycle", 3, 5));
  auto parsed = nlohmann::json::parse(json);
  CHECK(parsed["family"] == "cycle");
  CHECK(parsed["points"].size() == 3);
}
