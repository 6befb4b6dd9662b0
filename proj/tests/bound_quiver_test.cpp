#include "quiverlab/bound_quiver.hpp"

#include <stdexcept>

#include "doctest.h"

using namespace quiverlab;

namespace {

BoundQuiver commutative_square() {
  BoundQuiver bq;
  bq.quiver.add_vertex("1");
  bq.quiver.add_vertex("2");
  bq.quiver.add_vertex("3");
  bq.quiver.add_vertex("4");
  bq.quiver.add_arrow("a", "1", "2");
  bq.quiver.add_arrow("b", "2", "4");
  bq.quiver.add_arrow("c", "1", "3");
  bq.quiver.add_arrow("d", "3", "4");
  bq.add_relation({PathTerm{Rational(1), make_path(bq.quiver, {"a", "b"})},
                   PathTerm{Rational(-1), make_path(bq.quiver, {"c", "d"})}});
  return bq;
}

}  // namespace

TEST_CASE("make_relation validates shape") {
  BoundQuiver bq = commutative_square();
  const Quiver& q = bq.quiver;

  CHECK_THROWS_AS(
      make_relation(q, {PathTerm{Rational(1), make_path(q, {"a"})}}),
      std::invalid_argument);

  // Non-parallel terms.
  CHECK_THROWS_AS(
      make_relation(q, {PathTerm{Rational(1), make_path(q, {"a", "b"})},
                        PathTerm{Rational(1), make_path(q, {"a"})}}),
      std::invalid_argument);

  // Cancellation to zero.
  CHECK_THROWS_AS(
      make_relation(q, {PathTerm{Rational(1), make_path(q, {"a", "b"})},
                        PathTerm{Rational(-1), make_path(q, {"a", "b"})}}),
      std::invalid_argument);

  // Duplicate monomials merge.
  Relation r =
      make_relation(q, {PathTerm{Rational(1), make_path(q, {"a", "b"})},
                        PathTerm{Rational(1), make_path(q, {"a", "b"})}});
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms[0].coef == 2);
}

TEST_CASE("relation rendering") {
  BoundQuiver bq = commutative_square();
  CHECK(relation_to_string(bq.quiver, bq.relations[0]) == "a.b - c.d");
}

TEST_CASE("normalize_relations produces a canonical echelon per block") {
  BoundQuiver bq = commutative_square();
  const Quiver& q = bq.quiver;
  // Add a redundant multiple and an independent second row in the same block.
  bq.add_relation({PathTerm{Rational(2), make_path(q, {"a", "b"})},
                   PathTerm{Rational(-2), make_path(q, {"c", "d"})}});
  bq.add_relation({PathTerm{Rational(1), make_path(q, {"c", "d"})}});
  bq.normalize_relations();

  // Echelon over the block's two paths: a.b and c.d both die.
  REQUIRE(bq.relations.size() == 2);
  CHECK(bq.relations[0].terms.size() == 1);
  CHECK(bq.relations[0].terms[0].path == make_path(q, {"a", "b"}));
  CHECK(bq.relations[0].terms[0].coef == 1);
  CHECK(bq.relations[1].terms[0].path == make_path(q, {"c", "d"}));

  // Normalizing again is a fixed point.
  auto before = bq.relations;
  bq.normalize_relations();
  CHECK(bq.relations == before);
}

TEST_CASE("monomial convenience adder") {
  BoundQuiver bq;
  bq.quiver.add_vertex("v");
  bq.quiver.add_arrow("x", "v", "v");
  bq.add_relation({{"x", "x"}});
  CHECK(bq.relations[0].length == 2);
  CHECK(bq.relations[0].source == 0);
}
