#include "quiverlab/quadratic.hpp"

#include "quiverlab/graded_algebra.hpp"
#include "quiverlab/linalg.hpp"

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace quiverlab {

BoundQuiver quadratic_dual(const BoundQuiver& bq) {
  for (const Relation& rel : bq.relations) {
    if (rel.length != 2) {
      throw std::invalid_argument(
        "quadratic_dual: relation '" + relation_to_string(bq.quiver, rel) +
        "' has length " + std::to_string(rel.length) +
        "; the dual is defined for quadratic presentations only");
    }
  }

  BoundQuiver dual;
  dual.quiver = bq.quiver;

  // Group the relation rows by (source, target) block.
  std::map<std::pair<int, int>, std::vector<const Relation*>> blocks;
  for (const Relation& rel : bq.relations) {
    blocks[{rel.source, rel.target}].push_back(&rel);
  }

  const int nv = static_cast<int>(bq.quiver.vertex_count());
  for (int src = 0; src < nv; ++src) {
    for (int tgt = 0; tgt < nv; ++tgt) {
      std::vector<Path> paths = enumerate_paths_between(bq.quiver, src, tgt, 2);
      if (paths.empty()) continue;

      std::map<std::string, int> column;
      for (std::size_t c = 0; c < paths.size(); ++c) {
        column[path_to_string(bq.quiver, paths[c])] = static_cast<int>(c);
      }

      std::vector<SparseVec> rows;
      auto it = blocks.find({src, tgt});
      if (it != blocks.end()) {
        for (const Relation* rel : it->second) {
          std::vector<std::pair<std::int64_t, Rational>> entries;
          for (const PathTerm& term : rel->terms) {
            entries.emplace_back(
                column.at(path_to_string(bq.quiver, term.path)), term.coef);
          }
          rows.push_back(make_sparse(std::move(entries)));
        }
      }

      // With the paths-as-orthonormal-basis pairing the annihilator of
      // the row span is exactly the right kernel of the row matrix.
      for (const SparseVec& vec :
           kernel_basis(rows, static_cast<int>(paths.size()))) {
        std::vector<PathTerm> terms;
        for (const auto& [col, coef] : vec.terms) {
          terms.push_back({coef, paths[static_cast<std::size_t>(col)]});
        }
        dual.relations.push_back(make_relation(dual.quiver, std::move(terms)));
      }
    }
  }

  dual.normalize_relations();
  return dual;
}

QuadraticClosureReport quadratic_closure_check(const BoundQuiver& bq,
                       int loewy_bound) {
  if (loewy_bound < 0) {
    throw std::invalid_argument("quadratic_closure_check: negative Loewy bound");
  }

  BoundQuiver quadratic_part;
  quadratic_part.quiver = bq.quiver;
  for (const Relation& rel : bq.relations) {
    if (rel.length == 2) quadratic_part.relations.push_back(rel);
  }

  const int bound = loewy_bound + 1;
  GradedAlgebra full(bq, bound);
  GradedAlgebra trimmed(quadratic_part, bound);

  QuadraticClosureReport report;
  const int nv = static_cast<int>(bq.quiver.vertex_count());
  for (int degree = 2; degree <= bound; ++degree) {
    for (int src = 0; src < nv && !report.failing_degree; ++src) {
      for (int tgt = 0; tgt < nv; ++tgt) {
        const int full_dim = full.dim(src, tgt, degree);
        const int trim_dim = trimmed.dim(src, tgt, degree);
        if (trim_dim == full_dim) continue;
        report.failing_degree = degree;
        std::ostringstream msg;
        msg << "block " << bq.quiver.vertex_name(src) << " -> "
          << bq.quiver.vertex_name(tgt) << " at degree " << degree
          << ": quadratic part leaves dimension " << trim_dim
          << ", full relation set gives " << full_dim;
        report.witness = msg.str();
        break;
      }
    }
    if (report.failing_degree) break;
  }

  report.quadratic = !report.failing_degree.has_value();
  return report;
}

}  // namespace quiverlab
