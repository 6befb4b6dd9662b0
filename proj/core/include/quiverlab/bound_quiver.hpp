#pragma once

#include "quiverlab/linalg.hpp"
#include "quiverlab/quiver.hpp"

#include <string>
#include <vector>

namespace quiverlab {

struct PathTerm {
  Rational coef;
  Path path;

  friend bool operator==(const PathTerm&, const PathTerm&) = default;
};

// A homogeneous relation: a rational combination of parallel paths of one
// common length >= 2. Terms are kept in canonical path order.
struct Relation {
  int source = -1;
  int target = -1;
  int length = 0;
  std::vector<PathTerm> terms;

  friend bool operator==(const Relation&, const Relation&) = default;
};

// Merges parallel terms, validates shape, and orders terms canonically.
// Throws std::invalid_argument if terms are not parallel paths of one length
// >= 2, or if everything cancels.
Relation make_relation(const Quiver& q, std::vector<PathTerm> terms);

std::string relation_to_string(const Quiver& q, const Relation& r);

// A quiver with relations. The relation list is a generating set of an
// admissible-style ideal; normalize_relations() puts it in a canonical form
// (per-block reduced echelon over paths in canonical order).
struct BoundQuiver {
  Quiver quiver;
  std::vector<Relation> relations;

  void add_relation(std::vector<PathTerm> terms);
  void add_relation(const std::vector<std::vector<std::string>>& monomials);

  void normalize_relations();
};

// Canonical echelon form of a set of relations over the given quiver; rows
// are grouped per (source, target, length) block and sorted.
std::vector<Relation> normalize_relation_set(const Quiver& q,
                                             const std::vector<Relation>& rs);

// Degree horizon used when none is given explicitly: generous enough for any
// algebra that is finite dimensional for a visible reason (vertex count times
// the longest relation, plus slack to witness vanishing).
int default_degree_bound(const BoundQuiver& bq);

}  // namespace quiverlab
