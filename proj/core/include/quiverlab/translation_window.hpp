#pragma once

#include "quiverlab/bound_quiver.hpp"
#include "quiverlab/multilayer.hpp"
#include "quiverlab/trivial_extension.hpp"

#include <optional>
#include <vector>

namespace quiverlab {

enum class WindowKind { first, second };

/// A finite window [low, high] of one of the two infinite translation
/// coverings attached to a returning arrow quiver. Vertices are copies
/// "(v,t)" of the extended quiver's vertices and arrows are copies "(a,t)" of
/// its arrows, where t is the level of the arrow's source. A relation row is
/// materialized iff every one of its paths lies wholly inside the window, so
/// operations that must be exact near a boundary should run on a window with
/// margin.
struct TranslationWindow {
  BoundQuiver bound;
  /// The returning arrow quiver the window was cut from.
  ReturningArrowQuiver base;
  WindowKind kind = WindowKind::first;
  int low = 0;
  int high = 0;
  /// The translation moves (v, t) to (v, t - tau_shift); its vertex part is
  /// the identity because the extension algebra is symmetric.
  int tau_shift = 1;
  /// Levels within `margin` of a boundary may carry truncated algebra data
  /// (rows reaching past the edge are dropped); operations that must be
  /// exact keep their anchors this far inside.
  int margin = 1;

  /// vertex_ids[extended-quiver vertex][t - low] is the window vertex (v, t).
  std::vector<std::vector<int>> vertex_ids;
  /// Window vertex -> extended-quiver vertex / level.
  std::vector<int> vertex_base;
  std::vector<int> vertex_level;
  /// Window arrow -> extended-quiver arrow / level of the arrow's source.
  std::vector<int> arrow_origin;
  std::vector<int> arrow_level;

  int level_count() const { return high - low + 1; }
  std::optional<int> vertex_at(int base_vertex, int level) const;
  std::optional<int> tau(int window_vertex) const;
  std::optional<int> tau_inverse(int window_vertex) const;
};

/// First covering: one copy of the extended quiver per slab t, with the
/// returning arrows redirected to cross from slab t to t + 1. Every relation
/// row lifts to each start slab, crossing one slab per returning arrow it
/// contains, so slab t alone reproduces the input presentation. tau_shift is
/// 1. Throws std::invalid_argument when low > high.
TranslationWindow zq_first_window(const ReturningArrowQuiver& raq, int low,
                                  int high);

/// Second covering: one copy of *every* extended-quiver arrow from level m to
/// m + 1, and every relation row lifted to each start level, the
/// first-traversed arrow sitting lowest. Its underlying graph splits into as
/// many connected components as the gcd of the extended quiver's cycle
/// lengths. tau_shift is base_degree + 1. Throws std::invalid_argument when
/// low > high.
TranslationWindow zq_second_window(const ReturningArrowQuiver& raq, int low,
                                   int high);

/// A verified identification of a smaller bound quiver with a full
/// sub-bound-quiver of a window.
struct WindowEmbedding {
  std::vector<int> vertex_image;
  std::vector<int> arrow_image;
};

/// Embeds a first-covering window into a second-covering window over the same
/// returning arrow quiver via (v, m) -> (v, (n+1)m + u(v)), where u is the
/// nice grading of the underlying quiver and n its top path length. The image
/// is one connected component of the second covering met with the window;
/// every arrow maps to a copy of the same extended-quiver arrow and the
/// relation rows span the same space block by block (verified, with
/// std::logic_error on failure). Throws std::invalid_argument when the
/// underlying quiver is not nicely graded, the windows disagree about the
/// extended quiver, or the second window cannot hold the image.
WindowEmbedding component_phi(const TranslationWindow& first,
                              const TranslationWindow& second);

/// Identifies a layered quiver with the full sub-bound-quiver of a
/// second-covering window over the doubled extension of its base, on the
/// vertices (v, s) with u(v) <= s <= u(v) + n + 1. Floor copies map to
/// original-arrow copies, ladder arrows to loop copies and returning arrows
/// to returning-arrow copies; the image is a full subquiver and the relation
/// rows span the same space block by block (verified, with std::logic_error
/// on failure). The window must cover levels [0, 2n + 2] and be built over
/// the same base and socle, otherwise std::invalid_argument.
WindowEmbedding embed_multilayer(const MultilayerQuiver& layered,
                                 const TranslationWindow& window);

}  // namespace quiverlab
