#pragma once

#include "quiverlab/bound_quiver.hpp"
#include "quiverlab/grading.hpp"
#include "quiverlab/quiver.hpp"

#include <vector>

namespace quiverlab {

enum class LayerArrowKind { floor, ladder, beta };

/// Layered quiver over a nicely graded, properly graded base: floors
/// r = 0..n+1 each carry a copy of the base quiver (n the common length of
/// its maximal bound paths), a ladder arrow climbs each vertex tower one
/// floor at a time, and one beta arrow per chosen basis element p of the
/// top graded component runs from the floor-0 copy of p's end to the
/// top-floor copy of p's start.
///
/// The floor-r copy of base vertex i is named "(i,u,s)" with u the nice
/// grade of i and s = u + r; the floor-r copy of arrow a is "(a,r)", the
/// ladder arrow at vertex i from floor r to r + 1 is "(g_i,r)", and the
/// beta arrow of socle[k] is "b_k". Every arrow raises s by one, so the
/// result is nicely graded by construction.
struct MultilayerQuiver {
  /// The layered quiver with its full relation set (normalized): the base
  /// relations hold on every floor, two consecutive ladder steps vanish,
  /// ladders commute past floor arrows, and every kernel row of the socle
  /// pairing is lifted through its beta arrow (the part traversed before
  /// the beta stays on floor 0, the part after lands on the top floor).
  BoundQuiver bound;
  /// The input presentation.
  BoundQuiver base;
  /// The nice grading of the base used in vertex names.
  Grading base_grading;
  /// Common length n of the maximal bound paths of the base algebra.
  int base_degree = 0;
  /// Chosen basis of the degree-n component; paths of the base quiver.
  std::vector<Path> socle;

  /// Role of every arrow of bound.quiver.
  std::vector<LayerArrowKind> kinds;
  /// vertex_ids[i][r]: the floor-r copy of base vertex i (r = 0..n+1).
  std::vector<std::vector<int>> vertex_ids;
  /// floor_arrows[a][r]: the floor-r copy of base arrow a.
  std::vector<std::vector<int>> floor_arrows;
  /// ladder_arrows[i][r]: floor r -> r+1 at base vertex i (r = 0..n).
  std::vector<std::vector<int>> ladder_arrows;
  /// beta_arrows[k]: the beta arrow of socle[k].
  std::vector<int> beta_arrows;

  /// bound.quiver vertex -> its base vertex and floor.
  std::vector<int> vertex_base;
  std::vector<int> vertex_floor;

  int floor_count() const { return base_degree + 2; }
};

/// Builds the multilayer quiver over `base`, which must admit a nice grading
/// (std::invalid_argument otherwise, naming an obstructing cycle) and be
/// properly graded; the socle and its pairing rows come from the returning
/// arrow construction, whose validation errors propagate unchanged. The
/// result is self-checking: it must come out nicely graded and properly
/// graded of degree n + 1, else std::logic_error.
MultilayerQuiver multilayer_quiver(const BoundQuiver& base,
                                   int degree_bound = -1);

/// Same, with an explicit nice grading (used verbatim in vertex names) and
/// basis of the top graded component.
MultilayerQuiver multilayer_quiver(const BoundQuiver& base,
                                   const Grading& grading,
                                   std::vector<Path> socle,
                                   int degree_bound = -1);

}  // namespace quiverlab
