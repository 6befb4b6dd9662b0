#include "quiverlab/grading.hpp"

#include "doctest.h"

using namespace quiverlab;

TEST_CASE("linear A3 quiver is nicely gradable") {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "2", "3");

  auto result = compute_nice_grading(q);
  REQUIRE(result.ok());
  CHECK(result.grading->values == std::vector<long long>{0, 1, 2});
  CHECK(is_nice_grading(q, *result.grading));
}

TEST_CASE("two-source A3 quiver grades with both sources at zero") {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "3", "2");

  auto result = compute_nice_grading(q);
  REQUIRE(result.ok());
  CHECK(result.grading->values == std::vector<long long>{0, 1, 0});
}

TEST_CASE("triangle with a composite side is not nicely gradable") {
  // al: 1 -> 3 jumps directly; be.ga walks around through 2, so the cyclic
  // walk +al -ga -be has signed length -1.
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("al", "1", "3");
  q.add_arrow("be", "1", "2");
  q.add_arrow("ga", "2", "3");

  auto result = compute_nice_grading(q);
  REQUIRE_FALSE(result.ok());
  REQUIRE(result.counterexample.has_value());
  const Walk& cycle = *result.counterexample;
  CHECK(is_valid_walk(q, cycle));
  CHECK(cycle.is_cyclic());
  CHECK(walk_grade(cycle) != 0);
}

TEST_CASE("oriented cycles are not nicely gradable") {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "2", "1");

  auto result = compute_nice_grading(q);
  REQUIRE_FALSE(result.ok());
  CHECK(walk_grade(*result.counterexample) != 0);
}

TEST_CASE("normalization is per component") {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("a", "1", "2");
  // Vertex 3 is isolated; both components get minimum zero.
  Grading g{{5, 6, -2}};
  CHECK(normalized(q, g).values == std::vector<long long>{0, 1, 0});
}
