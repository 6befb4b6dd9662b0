#pragma once

#include "quiverlab/bound_quiver.hpp"
#include "quiverlab/quiver.hpp"

#include <vector>

namespace quiverlab {

enum class ArrowKind { original, returning, loop };

/// A quiver presenting the trivial extension of the algebra of `base` by its
/// dual bimodule: one returning arrow per chosen basis element of the top
/// graded component, running backwards along it.
struct ReturningArrowQuiver {
  /// Extended quiver together with the full relation set (normalized).
  BoundQuiver bound;
  /// The input presentation.
  BoundQuiver base;
  /// Common length n of the maximal bound paths of the base algebra.
  int base_degree = 0;
  /// Chosen basis of the degree-n component; paths of the base quiver.
  std::vector<Path> socle;
  /// Arrow id in bound.quiver of the returning arrow for socle[k].
  std::vector<int> returning_arrows;
  /// Role of every arrow of bound.quiver.
  std::vector<ArrowKind> kinds;
  /// Kernel rows of the socle pairing: combinations of paths through one
  /// returning arrow that act as the zero functional.
  std::vector<Relation> pairing_relations;
  /// Monomial rows through two returning arrows (products of two socle
  /// functionals vanish identically).
  std::vector<Relation> composite_relations;
};

/// Builds the returning arrow quiver of `base`, choosing the canonical greedy
/// basis of maximal bound paths. The base algebra is resolved up to
/// `degree_bound` (a default derived from the quiver size when negative) and
/// must vanish there; all maximal bound paths must share one length.
///
/// The construction is self-checking: the resulting algebra must have twice
/// the dimension of the base and top degree n + 1, otherwise std::logic_error.
ReturningArrowQuiver returning_arrow_quiver(const BoundQuiver& base,
                                            int degree_bound = -1);

/// Same, with an explicit basis of the top graded component. Throws
/// std::invalid_argument if the given paths are not an independent spanning
/// set of the degree-n component.
ReturningArrowQuiver returning_arrow_quiver(const BoundQuiver& base,
                                            std::vector<Path> socle,
                                            int degree_bound = -1);

/// Applies the construction a second time, to the returning arrow quiver
/// itself. New returning arrows that close a cycle at a single vertex are
/// tagged ArrowKind::loop and named after the vertex; the tags of the first
/// round are preserved.
ReturningArrowQuiver double_returning_quiver(const ReturningArrowQuiver& raq,
                                             int degree_bound = -1);

}  // namespace quiverlab
