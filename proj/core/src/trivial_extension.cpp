#include "quiverlab/trivial_extension.hpp"

#include "quiverlab/graded_algebra.hpp"
#include "quiverlab/linalg.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace quiverlab {
namespace {

using Namer = std::function<std::string(const Path&, int)>;

std::string fresh_arrow_name(const Quiver& q, std::string name) {
  while (q.arrow_id(name)) name.insert(name.begin(), '_');
  return name;
}

// Class of rep.then(suffix) given the class `vec` of rep at (module, degree).
SparseVec append_to_class(const GradedAlgebra& alg, int module, int degree,
             SparseVec vec, const Path& suffix) {
  for (int arrow : suffix.arrows) {
    if (vec.empty()) break;
    vec = apply_rows(alg.left_action(arrow, module, degree), vec);
    ++degree;
  }
  return vec;
}

// Class of prefix.then(rep); the coordinates migrate to the module of
// prefix.source.
SparseVec prepend_to_class(const GradedAlgebra& alg, int module, int degree,
             SparseVec vec, const Path& prefix) {
  for (auto it = prefix.arrows.rbegin(); it != prefix.arrows.rend(); ++it) {
    if (vec.empty()) break;
    vec = apply_rows(alg.right_action(*it, module, degree), vec);
    module = alg.quiver().arrow(*it).source;
    ++degree;
  }
  return vec;
}

struct SocleBlock {
  SpanSolver solver;
  std::vector<int> members;  // socle indices in seeding order
};

ReturningArrowQuiver build_returning(const BoundQuiver& base,
                  std::optional<std::vector<Path>> chosen,
                  int degree_bound, const Namer& namer) {
  const int bound =
    degree_bound > 0 ? degree_bound : default_degree_bound(base);
  GradedAlgebra alg(base, bound);
  if (!alg.stabilized()) {
    throw std::invalid_argument(
      "returning_arrow_quiver: nonzero classes persist at degree " +
      std::to_string(bound) + "; raise the degree bound");
  }
  if (alg.total_dim() == 0) {
    throw std::invalid_argument(
      "returning_arrow_quiver: the quiver has no vertices, so there is "
      "nothing to extend");
  }
  std::pair<Path, Path> offender;
  const std::optional<int> top = alg.properly_graded_degree(&offender);
  if (!top) {
    throw std::invalid_argument(
      "returning_arrow_quiver: maximal bound paths of different "
      "lengths: " +
      path_to_string(base.quiver, offender.first) + " and " +
      path_to_string(base.quiver, offender.second));
  }
  const int n = *top;

  std::vector<Path> socle =
    chosen ? std::move(*chosen) : alg.maximal_path_basis();

  // The socle pairing needs coordinates over the chosen basis, block by
  // block; seeding order inside a block follows the given socle order.
  std::map<std::pair<int, int>, SocleBlock> socle_blocks;
  std::vector<int> socle_pos(socle.size(), 0);
  for (std::size_t k = 0; k < socle.size(); ++k) {
    const Path& f = socle[k];
    if (!is_valid_path(base.quiver, f) || f.length() != n) {
      throw std::invalid_argument(
        "returning_arrow_quiver: socle element " +
        path_to_string(base.quiver, f) + " is not a length-" +
        std::to_string(n) + " path of the quiver");
    }
    SparseVec cls = alg.class_of_path(f);
    if (cls.empty()) {
      throw std::invalid_argument(
        "returning_arrow_quiver: socle element " +
        path_to_string(base.quiver, f) + " has zero class");
    }
    SocleBlock& blk = socle_blocks[{f.source, f.target}];
    if (!blk.solver.add(std::move(cls))) {
      throw std::invalid_argument(
        "returning_arrow_quiver: socle elements are linearly "
        "dependent at " +
        path_to_string(base.quiver, f));
    }
    socle_pos[k] = static_cast<int>(blk.members.size());
    blk.members.push_back(static_cast<int>(k));
  }
  const int nv = base.quiver.vertex_count();
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) {
      const auto it = socle_blocks.find({i, j});
      const int have =
        it == socle_blocks.end() ? 0 : it->second.solver.dim();
      if (have != alg.dim(i, j, n)) {
        throw std::invalid_argument(
          "returning_arrow_quiver: socle does not span the top "
          "graded component at block " +
          base.quiver.vertex_name(i) + " -> " +
          base.quiver.vertex_name(j));
      }
    }
  }

  ReturningArrowQuiver out;
  out.base = base;
  out.base_degree = n;
  out.socle = socle;
  out.bound.quiver = base.quiver;
  out.kinds.assign(static_cast<std::size_t>(base.quiver.arrow_count()),
          ArrowKind::original);
  for (std::size_t k = 0; k < socle.size(); ++k) {
    const Path& f = socle[k];
    const std::string name = fresh_arrow_name(
      out.bound.quiver, namer(f, static_cast<int>(k)));
    out.returning_arrows.push_back(
      out.bound.quiver.add_arrow(name, f.target, f.source));
    out.kinds.push_back(ArrowKind::returning);
  }

  // The relation set grows degree by degree. A candidate row is kept only
  // when its class in the quotient by everything accepted so far is
  // nonzero, i.e. when it is not yet an ideal consequence; homogeneity in
  // the number of returning arrows makes this greedy test exact.
  BoundQuiver working;
  working.quiver = out.bound.quiver;
  working.relations = base.relations;
  auto quotient = std::make_unique<GradedAlgebra>(working, n + 2);
  const auto accept = [&](Relation rel, std::vector<Relation>& family) {
    working.relations.push_back(rel);
    family.push_back(std::move(rel));
    quotient = std::make_unique<GradedAlgebra>(working, n + 2);
  };

  struct Candidate {
    int socle_index;
    Path x;  // leaves the socle path's start
    Path y;  // arrives at the socle path's end
  };

  for (int d = 2; d <= n + 2; ++d) {
    for (int v = 0; v < nv; ++v) {
      for (int vp = 0; vp < nv; ++vp) {
        // Rows through one returning arrow: the combination
        // sum c (x beta_f y) vanishes exactly when the functional
        // sum c x f* y kills every class z between the endpoints,
        // i.e. when the f-coordinate of x z y is zero for all z.
        std::vector<Candidate> cands;
        for (std::size_t k = 0; k < socle.size(); ++k) {
          const Path& f = socle[k];
          for (int ly = 0; ly <= d - 1; ++ly) {
            const int lx = d - 1 - ly;
            for (int ym : alg.block(v, f.target, ly)) {
              for (int xm : alg.block(f.source, vp, lx)) {
                cands.push_back(
                  {static_cast<int>(k),
                  alg.basis_rep(f.source, lx, xm),
                  alg.basis_rep(v, ly, ym)});
              }
            }
          }
        }

        if (!cands.empty()) {
          const int zdeg = n + 1 - d;
          const std::vector<int> zcols =
            zdeg >= 0 ? alg.block(vp, v, zdeg)
                 : std::vector<int>{};
          std::vector<SparseVec> pairing_rows;
          pairing_rows.reserve(cands.size());
          for (const Candidate& c : cands) {
            const Path& f = socle[c.socle_index];
            const SocleBlock& blk =
              socle_blocks.at({f.source, f.target});
            std::vector<std::pair<std::int64_t, Rational>> row;
            for (std::size_t zi = 0; zi < zcols.size(); ++zi) {
              SparseVec w = append_to_class(
                alg, vp, zdeg, unit_vec(zcols[zi]), c.y);
              w = prepend_to_class(alg, vp, zdeg + c.y.length(),
                        std::move(w), c.x);
              if (w.empty()) continue;
              const auto coords = blk.solver.coordinates(w);
              if (!coords) {
                throw std::logic_error(
                  "returning_arrow_quiver: class escapes "
                  "the socle span");
              }
              const Rational& val =
                (*coords)[socle_pos[c.socle_index]];
              if (!val.is_zero()) {
                row.push_back(
                  {static_cast<std::int64_t>(zi), val});
              }
            }
            pairing_rows.push_back(make_sparse(std::move(row)));
          }

          for (const SparseVec& combo : left_kernel(pairing_rows)) {
            std::vector<PathTerm> terms;
            for (const auto& [idx, coef] : combo.terms) {
              const Candidate& c =
                cands[static_cast<std::size_t>(idx)];
              terms.push_back(
                {coef,
                c.y.then(arrow_path(
                    out.bound.quiver,
                    out.returning_arrows[c.socle_index]))
                  .then(c.x)});
            }
            if (!quotient->class_of_terms(terms).empty()) {
              accept(make_relation(out.bound.quiver,
                        std::move(terms)),
                 out.pairing_relations);
            }
          }
        }

        // Monomials through two returning arrows: products of two
        // socle functionals vanish identically, so every such path
        // not already killed becomes a relation.
        for (std::size_t g = 0; g < socle.size(); ++g) {
          if (socle[g].target != v) continue;
          for (std::size_t f = 0; f < socle.size(); ++f) {
            if (socle[f].source != vp) continue;
            for (int zm : alg.block(socle[g].source,
                        socle[f].target, d - 2)) {
              Path full =
                arrow_path(out.bound.quiver,
                     out.returning_arrows[g])
                  .then(alg.basis_rep(socle[g].source,
                            d - 2, zm))
                  .then(arrow_path(
                    out.bound.quiver,
                    out.returning_arrows[f]));
              std::vector<PathTerm> terms{
                {Rational(1), std::move(full)}};
              if (!quotient->class_of_terms(terms).empty()) {
                accept(make_relation(out.bound.quiver,
                          std::move(terms)),
                   out.composite_relations);
              }
            }
          }
        }
      }
    }
  }

  out.bound.relations = working.relations;
  out.bound.normalize_relations();

  GradedAlgebra check(out.bound, n + 2);
  if (!check.stabilized() || check.total_dim() != 2 * alg.total_dim() ||
    check.top_degree() != n + 1) {
    throw std::logic_error(
      "returning_arrow_quiver: construction check failed (dimension " +
      std::to_string(check.total_dim()) + ", expected " +
      std::to_string(2 * alg.total_dim()) + ")");
  }
  return out;
}

Namer default_namer() {
  return [](const Path&, int k) { return "b_" + std::to_string(k); };
}

}  // namespace

ReturningArrowQuiver returning_arrow_quiver(const BoundQuiver& base,
                                            int degree_bound) {
  return build_returning(base, std::nullopt, degree_bound, default_namer());
}

ReturningArrowQuiver returning_arrow_quiver(const BoundQuiver& base,
                                            std::vector<Path> socle,
                                            int degree_bound) {
  return build_returning(base, std::move(socle), degree_bound,
                         default_namer());
}

ReturningArrowQuiver double_returning_quiver(const ReturningArrowQuiver& raq,
                                             int degree_bound) {
  const Quiver& inner = raq.bound.quiver;
  const Namer namer = [&inner](const Path& f, int k) {
    if (f.source == f.target) return "g_" + inner.vertex_name(f.source);
    return "b_" + std::to_string(k);
  };
  ReturningArrowQuiver out =
      build_returning(raq.bound, std::nullopt, degree_bound, namer);
  for (std::size_t i = 0; i < raq.kinds.size(); ++i) {
    out.kinds[i] = raq.kinds[i];
  }
  for (std::size_t k = 0; k < out.socle.size(); ++k) {
    if (out.socle[k].source == out.socle[k].target) {
      out.kinds[static_cast<std::size_t>(out.returning_arrows[k])] =
        ArrowKind::loop;
    }
  }
  return out;
}

}  // namespace quiverlab
