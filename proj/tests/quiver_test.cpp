#include "quiverlab/quiver.hpp"

#include <stdexcept>

#include "doctest.h"
#include "quiverlab/walk.hpp"

using namespace quiverlab;

namespace {

Quiver kronecker() {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_arrow("a", "1", "2");
  q.add_arrow("b", "1", "2");
  return q;
}

}  // namespace

TEST_CASE("quiver lookups and adjacency") {
  Quiver q = kronecker();
  CHECK(q.vertex_count() == 2);
  CHECK(q.arrow_count() == 2);
  CHECK(q.require_vertex("2") == 1);
  CHECK(q.arrows_from(0).size() == 2);
  CHECK(q.arrows_into(1).size() == 2);
  CHECK(q.arrows_into(0).empty());
  CHECK_THROWS_AS(q.require_arrow("c"), std::invalid_argument);
  CHECK_THROWS_AS(q.add_vertex("1"), std::invalid_argument);
  CHECK_THROWS_AS(q.add_arrow("x.y", 0, 1), std::invalid_argument);
}

TEST_CASE("paths compose in traversal order") {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  int a = q.add_arrow("a", "1", "2");
  int b = q.add_arrow("b", "2", "3");

  Path p = arrow_path(q, a).then(arrow_path(q, b));
  CHECK(p.source == 0);
  CHECK(p.target == 2);
  CHECK(p.arrows == std::vector<int>{a, b});
  CHECK(is_valid_path(q, p));
  CHECK(path_to_string(q, p) == "a.b");
  CHECK(path_to_string(q, Path::trivial(1)) == "e_2");

  CHECK(p == make_path(q, {"a", "b"}));
  CHECK_THROWS_AS(make_path(q, {"b", "a"}), std::invalid_argument);

  Path wrong{0, 2, {b, a}};
  CHECK_FALSE(is_valid_path(q, wrong));
}

TEST_CASE("canonical order is by length, endpoints, then arrows") {
  Quiver q = kronecker();
  Path pa = make_path(q, {"a"});
  Path pb = make_path(q, {"b"});
  Path e0 = Path::trivial(0);
  CHECK(canonical_less(e0, pa));
  CHECK(canonical_less(pa, pb));
  CHECK_FALSE(canonical_less(pb, pa));
}

TEST_CASE("path enumeration") {
  Quiver q;
  q.add_vertex("v");
  q.add_arrow("x", "v", "v");
  q.add_arrow("y", "v", "v");
  CHECK(enumerate_paths(q, 0, 3).size() == 8);
  CHECK(enumerate_paths_between(q, 0, 0, 2).size() == 4);

  Quiver k = kronecker();
  CHECK(enumerate_paths_between(k, 0, 1, 1).size() == 2);
  CHECK(enumerate_paths_between(k, 0, 1, 2).empty());
  CHECK(enumerate_paths_between(k, 1, 0, 1).empty());
}

TEST_CASE("walks normalize and grade") {
  Quiver q;
  q.add_vertex("1");
  q.add_vertex("2");
  q.add_vertex("3");
  q.add_arrow("al", "1", "3");
  q.add_arrow("be", "1", "2");
  q.add_arrow("ga", "2", "3");

  // +al then backwards along ga, be: a cyclic walk 1 -> 3 -> 1.
  Walk w;
  w.steps.push_back(WalkStep{make_path(q, {"al"}), true});
  w.steps.push_back(WalkStep{make_path(q, {"ga"}), false});
  w.steps.push_back(WalkStep{make_path(q, {"be"}), false});
  CHECK(is_valid_walk(q, w));
  CHECK(w.is_cyclic());
  CHECK(walk_grade(w) == -1);

  Walk n = normalize_walk(w);
  // The two backward legs fuse into one backward path be.ga.
  REQUIRE(n.steps.size() == 2);
  CHECK(n.steps[1].path == make_path(q, {"be", "ga"}));
  CHECK_FALSE(n.steps[1].forward);
  CHECK(walk_grade(n) == -1);

  Walk with_trivial = w;
  with_trivial.steps.push_back(WalkStep{Path::trivial(0), true});
  CHECK(normalize_walk(with_trivial) == n);
}
