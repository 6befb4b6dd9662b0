#include "quiverlab/multilayer.hpp"

#include "quiverlab/graded_algebra.hpp"
#include "quiverlab/trivial_extension.hpp"
#include "quiverlab/walk.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quiverlab {
namespace {

MultilayerQuiver build_multilayer(const BoundQuiver& base, Grading grading,
                                  std::optional<std::vector<Path>> chosen,
                                  int degree_bound) {
  // The socle and the kernel rows of its pairing come from the returning
  // arrow construction, which also validates the base (finite dimensional,
  // maximal bound paths of one common length, socle spanning the top).
  const ReturningArrowQuiver raq =
      chosen ? returning_arrow_quiver(base, std::move(*chosen), degree_bound)
             : returning_arrow_quiver(base, degree_bound);
  const int n = raq.base_degree;
  const Quiver& bq = base.quiver;
  const int nv = bq.vertex_count();
  const int na = bq.arrow_count();

  MultilayerQuiver out;
  out.base = base;
  out.base_grading = std::move(grading);
  out.base_degree = n;
  out.socle = raq.socle;

  Quiver& q = out.bound.quiver;
  out.vertex_ids.assign(static_cast<std::size_t>(nv), {});
  for (int i = 0; i < nv; ++i) {
    const long long u = out.base_grading.at(i);
    for (int r = 0; r <= n + 1; ++r) {
      out.vertex_ids[i].push_back(q.add_vertex(
          "(" + bq.vertex_name(i) + "," + std::to_string(u) + "," +
          std::to_string(u + r) + ")"));
      out.vertex_base.push_back(i);
      out.vertex_floor.push_back(r);
    }
  }
  for (int a = 0; a < na; ++a) {
    const Arrow& ar = bq.arrow(a);
    out.floor_arrows.emplace_back();
    for (int r = 0; r <= n + 1; ++r) {
      out.floor_arrows.back().push_back(
          q.add_arrow("(" + ar.name + "," + std::to_string(r) + ")",
                      out.vertex_ids[ar.source][r],
                      out.vertex_ids[ar.target][r]));
      out.kinds.push_back(LayerArrowKind::floor);
    }
  }
  for (int i = 0; i < nv; ++i) {
    out.ladder_arrows.emplace_back();
    for (int r = 0; r <= n; ++r) {
      out.ladder_arrows.back().push_back(
          q.add_arrow("(g_" + bq.vertex_name(i) + "," + std::to_string(r) +
                          ")",
                      out.vertex_ids[i][r], out.vertex_ids[i][r + 1]));
      out.kinds.push_back(LayerArrowKind::ladder);
    }
  }
  for (std::size_t k = 0; k < out.socle.size(); ++k) {
    const Path& p = out.socle[k];
    out.beta_arrows.push_back(q.add_arrow("b_" + std::to_string(k),
                                          out.vertex_ids[p.target][0],
                                          out.vertex_ids[p.source][n + 1]));
    out.kinds.push_back(LayerArrowKind::beta);
  }

  const auto on_floor = [&](const Path& p, int r) {
    Path lifted = Path::trivial(out.vertex_ids[p.source][r]);
    for (int a : p.arrows) {
      lifted = lifted.then(arrow_path(q, out.floor_arrows[a][r]));
    }
    return lifted;
  };

  // The base relations hold on every floor.
  for (const Relation& rel : base.relations) {
    for (int r = 0; r <= n + 1; ++r) {
      std::vector<PathTerm> terms;
      terms.reserve(rel.terms.size());
      for (const PathTerm& t : rel.terms) {
        terms.push_back({t.coef, on_floor(t.path, r)});
      }
      out.bound.add_relation(std::move(terms));
    }
  }
  // Two consecutive ladder steps vanish.
  for (int i = 0; i < nv; ++i) {
    for (int r = 0; r + 1 <= n; ++r) {
      out.bound.add_relation(
          {{Rational(1), arrow_path(q, out.ladder_arrows[i][r])
                             .then(arrow_path(q, out.ladder_arrows[i][r + 1]))}});
    }
  }
  // Ladders commute past floor arrows.
  for (int a = 0; a < na; ++a) {
    const Arrow& ar = bq.arrow(a);
    for (int r = 0; r <= n; ++r) {
      Path up_then_across =
          arrow_path(q, out.ladder_arrows[ar.source][r])
              .then(arrow_path(q, out.floor_arrows[a][r + 1]));
      Path across_then_up =
          arrow_path(q, out.floor_arrows[a][r])
              .then(arrow_path(q, out.ladder_arrows[ar.target][r]));
      out.bound.add_relation({{Rational(1), std::move(up_then_across)},
                              {Rational(-1), std::move(across_then_up)}});
    }
  }
  // Every kernel row of the socle pairing lifts through its beta arrow: the
  // part traversed before the returning arrow stays on floor 0, the part
  // after lands on the top floor.
  std::vector<int> socle_of_arrow(
      static_cast<std::size_t>(raq.bound.quiver.arrow_count()), -1);
  for (std::size_t k = 0; k < raq.returning_arrows.size(); ++k) {
    socle_of_arrow[static_cast<std::size_t>(raq.returning_arrows[k])] =
        static_cast<int>(k);
  }
  for (const Relation& rel : raq.pairing_relations) {
    std::vector<PathTerm> terms;
    terms.reserve(rel.terms.size());
    for (const PathTerm& t : rel.terms) {
      Path lifted = Path::trivial(out.vertex_ids[t.path.source][0]);
      bool crossed = false;
      for (int arrow : t.path.arrows) {
        const int k = socle_of_arrow[static_cast<std::size_t>(arrow)];
        if (k >= 0) {
          lifted = lifted.then(arrow_path(q, out.beta_arrows[k]));
          crossed = true;
        } else {
          // Original arrows keep their ids from the base quiver.
          lifted = lifted.then(
              arrow_path(q, out.floor_arrows[arrow][crossed ? n + 1 : 0]));
        }
      }
      terms.push_back({t.coef, std::move(lifted)});
    }
    out.bound.add_relation(std::move(terms));
  }
  out.bound.normalize_relations();

  GradedAlgebra check(out.bound, n + 3);
  if (!check.stabilized() || check.top_degree() != n + 1 ||
      check.properly_graded_degree() != n + 1 ||
      !compute_nice_grading(q).ok()) {
    throw std::logic_error("multilayer_quiver: construction check failed");
  }
  return out;
}

}  // namespace

MultilayerQuiver multilayer_quiver(const BoundQuiver& base, int degree_bound) {
  NiceGradingResult nice = compute_nice_grading(base.quiver);
  if (!nice.ok()) {
    throw std::invalid_argument(
        "multilayer_quiver: the quiver admits no nice grading; the cycle " +
        walk_to_string(base.quiver, *nice.counterexample) +
        " has nonzero signed length");
  }
  return build_multilayer(base, std::move(*nice.grading), std::nullopt,
                          degree_bound);
}

MultilayerQuiver multilayer_quiver(const BoundQuiver& base,
                                   const Grading& grading,
                                   std::vector<Path> socle, int degree_bound) {
  if (grading.values.size() !=
          static_cast<std::size_t>(base.quiver.vertex_count()) ||
      !is_nice_grading(base.quiver, grading)) {
    throw std::invalid_argument(
        "multilayer_quiver: the given grading must assign a value to every "
        "vertex and raise it by one along every arrow");
  }
  return build_multilayer(base, grading, std::move(socle), degree_bound);
}

}  // namespace quiverlab
