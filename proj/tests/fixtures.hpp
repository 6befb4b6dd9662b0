#pragma once

#include "quiverlab/bound_quiver.hpp"

// Small bound quivers shared across the test suite. Each builder returns a
// fresh value so tests can mutate their copy freely.
namespace fixtures {

// 1 => 2: two parallel arrows, no relations.
inline quiverlab::BoundQuiver kronecker() {
  quiverlab::BoundQuiver bq;
  bq.quiver.add_vertex("1");
  bq.quiver.add_vertex("2");
  bq.quiver.add_arrow("a", "1", "2");
  bq.quiver.add_arrow("b", "1", "2");
  return bq;
}

// 1 -> 2: a single arrow, no relations.
inline quiverlab::BoundQuiver single_arrow() {
  quiverlab::BoundQuiver bq;
  bq.quiver.add_vertex("1");
  bq.quiver.add_vertex("2");
  bq.quiver.add_arrow("a", "1", "2");
  return bq;
}

// 1 -> 2 <- 3: two sources, one sink, no relations.
inline quiverlab::BoundQuiver two_source_a3() {
  quiverlab::BoundQuiver bq;
  bq.quiver.add_vertex("1");
  bq.quiver.add_vertex("2");
  bq.quiver.add_vertex("3");
  bq.quiver.add_arrow("a", "1", "2");
  bq.quiver.add_arrow("b", "3", "2");
  return bq;
}

// Fan on three vertices: a: 1 -> 3, b: 1 -> 2, g: 2 -> 3, with the composite
// through 2 as a relation. The underlying graph is a triangle, so no grading
// can raise every arrow by one, yet every maximal bound path is an arrow.
inline quiverlab::BoundQuiver fan() {
  quiverlab::BoundQuiver bq;
  bq.quiver.add_vertex("1");
  bq.quiver.add_vertex("2");
  bq.quiver.add_vertex("3");
  bq.quiver.add_arrow("a", "1", "3");
  bq.quiver.add_arrow("b", "1", "2");
  bq.quiver.add_arrow("g", "2", "3");
  bq.add_relation({{"b", "g"}});
  return bq;
}

// A single vertex and nothing else.
inline quiverlab::BoundQuiver point() {
  quiverlab::BoundQuiver bq;
  bq.quiver.add_vertex("v");
  return bq;
}

// 1 -> {2, 3} -> 4 with the two length-2 paths identified.
inline quiverlab::BoundQuiver commutative_square() {
  quiverlab::BoundQuiver bq;
  bq.quiver.add_vertex("1");
  bq.quiver.add_vertex("2");
  bq.quiver.add_vertex("3");
  bq.quiver.add_vertex("4");
  bq.quiver.add_arrow("a", "1", "2");
  bq.quiver.add_arrow("b", "2", "4");
  bq.quiver.add_arrow("c", "1", "3");
  bq.quiver.add_arrow("d", "3", "4");
  bq.add_relation(
      {quiverlab::PathTerm{quiverlab::Rational(1),
                           quiverlab::make_path(bq.quiver, {"a", "b"})},
       quiverlab::PathTerm{quiverlab::Rational(-1),
                           quiverlab::make_path(bq.quiver, {"c", "d"})}});
  return bq;
}

// 2-cycle with radical square zero.
inline quiverlab::BoundQuiver radical_square_cycle() {
  quiverlab::BoundQuiver bq;
  bq.quiver.add_vertex("1");
  bq.quiver.add_vertex("2");
  bq.quiver.add_arrow("a", "1", "2");
  bq.quiver.add_arrow("b", "2", "1");
  bq.add_relation({{"a", "b"}});
  bq.add_relation({{"b", "a"}});
  return bq;
}

}  // namespace fixtures
