#pragma once

#include "quiverlab/quiver.hpp"
#include "quiverlab/walk.hpp"

#include <optional>
#include <vector>

namespace quiverlab {

// A vertex grading. A quiver is *nicely graded* by `values` if every arrow
// raises the value by exactly one.
struct Grading {
  std::vector<long long> values;

  long long at(int vertex) const { return values.at(vertex); }

  friend bool operator==(const Grading&, const Grading&) = default;
};

bool is_nice_grading(const Quiver& q, const Grading& g);

// Shifts each connected component so that its minimum value is zero.
Grading normalized(const Quiver& q, Grading g);

struct NiceGradingResult {
  // Present iff the quiver admits a nice grading (then it is the normalized
  // one). Otherwise `counterexample` holds a cyclic walk of nonzero signed
  // length, which obstructs every grading.
  std::optional<Grading> grading;
  std::optional<Walk> counterexample;

  bool ok() const { return grading.has_value(); }
};

// Decides nice gradability by labelling the underlying graph; each connected
// component is normalized to minimum zero.
NiceGradingResult compute_nice_grading(const Quiver& q);

}  // namespace quiverlab
