#pragma once

#include "quiverlab/bound_quiver.hpp"

#include <optional>
#include <string>

namespace quiverlab {

/// Quadratic dual of a bound quiver whose relations are all of length 2.
///
/// The dual lives on the same quiver.  For each ordered vertex pair the
/// length-2 paths form a block with the basis-of-paths pairing, and the dual
/// relation block is the orthogonal complement of the original relation rows,
/// returned in canonical echelon form.  Blocks that carry no relation at all
/// contribute *every* length-2 path of the block as a dual relation.
///
/// Throws std::invalid_argument if any relation has length != 2.
BoundQuiver quadratic_dual(const BoundQuiver& bq);

/// Outcome of comparing an algebra against the quadratic part of its own
/// presentation.
struct QuadraticClosureReport {
  bool quadratic = false;
  /// First degree at which the quadratic part fails to generate the ideal
  /// (only set when !quadratic).
  std::optional<int> failing_degree;
  /// Human-readable description of one block witnessing the failure.
  std::string witness;
};

/// Checks whether the degree-2 relations of `bq` already generate the whole
/// relation ideal through degree loewy_bound + 1.  Dimensions of the two
/// quotients are compared degree by degree; the first discrepancy (larger
/// dimension under the quadratic part) is reported with the offending block.
QuadraticClosureReport quadratic_closure_check(const BoundQuiver& bq,
                                               int loewy_bound);

}  // namespace quiverlab
