#pragma once

#include "quiverlab/quiver.hpp"

#include <string>
#include <vector>

namespace quiverlab {

// One leg of a walk: a path traversed forwards (source -> target) or
// backwards (target -> source).
struct WalkStep {
  Path path;
  bool forward = true;

  int from() const { return forward ? path.source : path.target; }
  int to() const { return forward ? path.target : path.source; }

  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

// A walk in the underlying graph: consecutive steps chain end to end.
struct Walk {
  std::vector<WalkStep> steps;

  bool empty() const { return steps.empty(); }
  int from() const { return steps.front().from(); }
  int to() const { return steps.back().to(); }
  bool is_cyclic() const { return !empty() && from() == to(); }

  friend bool operator==(const Walk&, const Walk&) = default;
};

bool is_valid_walk(const Quiver& q, const Walk& w);

// Signed total length: forward legs count positively, backward legs
// negatively. This is the quantity that must vanish on every cyclic walk for
// a grading by path length to exist.
long long walk_grade(const Walk& w);

// Drops trivial legs and merges consecutive legs of equal direction.
Walk normalize_walk(const Walk& w);

std::string walk_to_string(const Quiver& q, const Walk& w);

}  // namespace quiverlab
