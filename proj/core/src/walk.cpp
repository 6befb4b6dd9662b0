#include "quiverlab/walk.hpp"

namespace quiverlab {

bool is_valid_walk(const Quiver& q, const Walk& w) {
  int at = -1;
  for (const WalkStep& step : w.steps) {
    if (!is_valid_path(q, step.path)) return false;
    if (at >= 0 && step.from() != at) return false;
    at = step.to();
  }
  return true;
}

long long walk_grade(const Walk& w) {
  long long grade = 0;
  for (const WalkStep& step : w.steps) {
    grade += step.forward ? step.path.length() : -step.path.length();
  }
  return grade;
}

Walk normalize_walk(const Walk& w) {
  Walk out;
  for (const WalkStep& step : w.steps) {
    if (step.path.is_trivial()) continue;
    if (!out.steps.empty() && out.steps.back().forward == step.forward) {
      WalkStep& prev = out.steps.back();
      // Both legs run in the same direction; fuse them into one path when the
      // underlying paths compose.
      if (step.forward && prev.path.target == step.path.source) {
        prev.path = prev.path.then(step.path);
        continue;
      }
      if (!step.forward && step.path.target == prev.path.source) {
        prev.path = step.path.then(prev.path);
        continue;
      }
    }
    out.steps.push_back(step);
  }
  return out;
}

std::string walk_to_string(const Quiver& q, const Walk& w) {
  if (w.steps.empty()) return "(empty walk)";
  std::string out;
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    if (i) out += ' ';
    out += w.steps[i].forward ? '+' : '-';
    out += path_to_string(q, w.steps[i].path);
  }
  return out;
}

}  // namespace quiverlab
