#include "quiverlab/grading.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace quiverlab {

namespace {

// Union of vertex sets reachable in the underlying graph, one id per
// component.
std::vector<int> component_ids(const Quiver& q) {
  std::vector<int> comp(q.vertex_count(), -1);
  int next = 0;
  for (int root = 0; root < q.vertex_count(); ++root) {
    if (comp[root] >= 0) continue;
    comp[root] = next;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      auto visit = [&](int w) {
        if (comp[w] < 0) {
          comp[w] = next;
          queue.push_back(w);
        }
      };
      for (int a : q.arrows_from(v)) visit(q.arrow(a).target);
      for (int a : q.arrows_into(v)) visit(q.arrow(a).source);
    }
    ++next;
  }
  return comp;
}

}  // namespace

bool is_nice_grading(const Quiver& q, const Grading& g) {
  if (static_cast<int>(g.values.size()) != q.vertex_count()) return false;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (g.values[ar.target] != g.values[ar.source] + 1) return false;
  }
  return true;
}

Grading normalized(const Quiver& q, Grading g) {
  if (static_cast<int>(g.values.size()) != q.vertex_count()) {
    throw std::invalid_argument("grading has wrong number of vertices");
  }
  std::vector<int> comp = component_ids(q);
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<long long> min_of(ncomp, std::numeric_limits<long long>::max());
  for (int v = 0; v < q.vertex_count(); ++v) {
    min_of[comp[v]] = std::min(min_of[comp[v]], g.values[v]);
  }
  for (int v = 0; v < q.vertex_count(); ++v) g.values[v] -= min_of[comp[v]];
  return g;
}

NiceGradingResult compute_nice_grading(const Quiver& q) {
  std::vector<long long> value(q.vertex_count(), 0);
  std::vector<bool> seen(q.vertex_count(), false);

  // Parent links of the labelling forest, for reconstructing walks from the
  // root when a conflicting edge shows up.
  struct Link {
    int parent = -1;
    int arrow = -1;
    bool forward = true;  // arrow runs parent -> vertex
  };
  std::vector<Link> link(q.vertex_count());

  auto walk_from_root = [&](int v) {
    Walk w;
    while (link[v].parent >= 0) {
      w.steps.push_back(
          WalkStep{arrow_path(q, link[v].arrow), link[v].forward});
      v = link[v].parent;
    }
    std::reverse(w.steps.begin(), w.steps.end());
    return w;
  };
  auto reversed = [](Walk w) {
    std::reverse(w.steps.begin(), w.steps.end());
    for (WalkStep& s : w.steps) s.forward = !s.forward;
    return w;
  };

  for (int root = 0; root < q.vertex_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      // Examine every incident arrow; tree edges label, back edges must agree.
      struct Incidence {
        int arrow;
        bool outgoing;
      };
      std::vector<Incidence> edges;
      for (int a : q.arrows_from(v)) edges.push_back({a, true});
      for (int a : q.arrows_into(v)) edges.push_back({a, false});
      for (auto [a, outgoing] : edges) {
        const Arrow& ar = q.arrow(a);
        int w = outgoing ? ar.target : ar.source;
        long long expected = outgoing ? value[v] + 1 : value[v] - 1;
        if (!seen[w]) {
          seen[w] = true;
          value[w] = expected;
          link[w] = Link{v, a, outgoing};
          queue.push_back(w);
        } else if (value[w] != expected) {
          // The edge closes a cycle whose signed length cannot vanish: root
          // -> v, across the edge, back from w to root.
          Walk cycle = walk_from_root(v);
          cycle.steps.push_back(WalkStep{arrow_path(q, a), outgoing});
          Walk back = reversed(walk_from_root(w));
          cycle.steps.insert(cycle.steps.end(), back.steps.begin(),
                             back.steps.end());
          cycle = normalize_walk(cycle);
          NiceGradingResult result;
          result.counterexample = std::move(cycle);
          return result;
        }
      }
    }
  }

  NiceGradingResult result;
  result.grading = normalized(q, Grading{std::move(value)});
  return result;
}

}  // namespace quiverlab
