#pragma once

#include "quiverlab/bound_quiver.hpp"
#include "quiverlab/linalg.hpp"
#include "quiverlab/quiver.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace quiverlab {

// Degreewise linear model of the path algebra modulo its relation ideal,
// built one degree at a time: the degree-(t+1) component of the projective at
// a vertex is the arrow extension of the degree-t component modulo the rows
// induced by relations whose last arrow lands there. Everything stays in
// algebra-sized coordinates; the exponentially large path spaces are never
// materialized.
class GradedAlgebra {
 public:
  GradedAlgebra(BoundQuiver bq, int degree_bound);

  const BoundQuiver& bound_quiver() const { return bq_; }
  const Quiver& quiver() const { return bq_.quiver; }
  int degree_bound() const { return bound_; }

  // dim e_target A_degree e_source: classes of paths source -> target.
  int dim(int source, int target, int degree) const;
  int module_dim(int source, int degree) const;
  long long dim_at_degree(int degree) const;
  long long total_dim() const;

  // True when some degree <= bound vanished entirely; every later degree is
  // then zero as well and the algebra is finite dimensional.
  bool stabilized() const;
  // Largest degree carrying a nonzero component. Requires stabilized().
  int top_degree() const;

  struct DimEntry {
    int source = -1;
    int target = -1;
    int degree = 0;
    int dim = 0;

    friend bool operator==(const DimEntry&, const DimEntry&) = default;
  };
  // Nonzero entries, ordered by (degree, source, target).
  std::vector<DimEntry> dimension_table() const;

  // Module basis of the projective at `source`: each element carries its end
  // vertex and a representative path.
  int basis_target(int source, int degree, int index) const;
  const Path& basis_rep(int source, int degree, int index) const;
  const std::vector<int>& block(int source, int target, int degree) const;

  // Class of a path (or combination) in module coordinates at
  // (path.source, path.length()).
  SparseVec class_of_path(const Path& p) const;
  SparseVec class_of_terms(const std::vector<PathTerm>& terms) const;
  bool is_zero_path(const Path& p) const { return class_of_path(p).empty(); }

  // Left action of an arrow k -> j on module coordinates at (source, degree):
  // appends the arrow at the end of representatives. Row z is the image of
  // basis element z (zero unless it ends at k). Defined for degree < bound.
  const std::vector<SparseVec>& left_action(int arrow, int source,
                                            int degree) const;
  // Right action: prepends the arrow (whose target must be `source`);
  // coordinates move to the module of arrow.source. Memoized on demand.
  const std::vector<SparseVec>& right_action(int arrow, int source,
                                             int degree) const;

  // Classes in the (source, target, degree) block killed by every arrow on
  // the left and on the right, as module-coordinate vectors. Requires
  // degree < bound.
  std::vector<SparseVec> annihilated_block(int source, int target,
                                           int degree) const;

  // Paths with nonzero class that cannot be extended to a nonzero class by
  // any arrow on either side; canonical order. Requires stabilized().
  std::vector<Path> maximal_bound_paths() const;
  // Greedy maximal independent subset of the above, in canonical order.
  std::vector<Path> maximal_path_basis() const;

  // The common length of all maximal bound paths, when there is one.
  std::optional<int> properly_graded_degree(
      std::pair<Path, Path>* offender = nullptr) const;

 private:
  void build_degree(int degree);

  BoundQuiver bq_;
  int bound_;
  // basis_[i][t][z]: representative path of basis element z at (i, t).
  std::vector<std::vector<std::vector<Path>>> basis_;
  // block_[i][t][j]: module indices of basis elements ending at j.
  std::vector<std::vector<std::vector<std::vector<int>>>> block_;
  // left_[a][i][t]: action matrix, built for t < bound.
  std::vector<std::vector<std::vector<std::vector<SparseVec>>>> left_;
  mutable std::map<std::tuple<int, int, int>, std::vector<SparseVec>>
      right_memo_;
};

}  // namespace quiverlab
