#include "quiverlab/graded_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace quiverlab {

GradedAlgebra::GradedAlgebra(BoundQuiver bq, int degree_bound)
    : bq_(std::move(bq)), bound_(degree_bound) {
  if (bound_ < 0) throw std::invalid_argument("negative degree bound");
  for (const Relation& r : bq_.relations) {
    for (const PathTerm& t : r.terms) {
      if (!is_valid_path(bq_.quiver, t.path)) {
        throw std::invalid_argument("relation term is not a path");
      }
    }
    if (r.length < 2) {
      throw std::invalid_argument("relation of length < 2");
    }
  }

  int nv = bq_.quiver.vertex_count();
  int na = bq_.quiver.arrow_count();
  basis_.assign(nv, std::vector<std::vector<Path>>(bound_ + 1));
  block_.assign(nv, std::vector<std::vector<std::vector<int>>>(
                        bound_ + 1, std::vector<std::vector<int>>(nv)));
  left_.assign(na, std::vector<std::vector<std::vector<SparseVec>>>(
                       nv, std::vector<std::vector<SparseVec>>(bound_)));

  for (int i = 0; i < nv; ++i) {
    basis_[i][0].push_back(Path::trivial(i));
    block_[i][0][i].push_back(0);
  }
  for (int t = 1; t <= bound_; ++t) build_degree(t);
}

void GradedAlgebra::build_degree(int t) {
  const Quiver& q = bq_.quiver;
  int nv = q.vertex_count();
  for (int i = 0; i < nv; ++i) {
    int lower_dim = module_dim(i, t - 1);
    // Per end vertex j: echelon of relation-induced rows over the extension
    // coordinates (arrow into j, basis element at its source).
    for (int j = 0; j < nv; ++j) {
      const std::vector<int>& incoming = q.arrows_into(j);
      if (incoming.empty()) continue;
      auto column = [&](int arrow_pos, int z) {
        return static_cast<std::int64_t>(arrow_pos) * lower_dim + z;
      };
      std::vector<int> pos_of_arrow(q.arrow_count(), -1);
      for (std::size_t p = 0; p < incoming.size(); ++p) {
        pos_of_arrow[incoming[p]] = static_cast<int>(p);
      }

      RowEchelon ech;
      for (const Relation& r : bq_.relations) {
        if (r.target != j || r.length > t) continue;
        int base_degree = t - r.length;
        for (int z0 : block_[i][base_degree][r.source]) {
          std::vector<std::pair<std::int64_t, Rational>> row;
          for (const PathTerm& term : r.terms) {
            int last = term.path.arrows.back();
            // Fold the class of (prefix of the term) * z0 degree by degree.
            SparseVec w = unit_vec(z0);
            int deg = base_degree;
            for (std::size_t k = 0; k + 1 < term.path.arrows.size(); ++k) {
              w = apply_rows(left_[term.path.arrows[k]][i][deg], w);
              ++deg;
            }
            for (const auto& [z, coef] : w.terms) {
              row.emplace_back(column(pos_of_arrow[last], static_cast<int>(z)),
                               term.coef * coef);
            }
          }
          ech.insert(make_sparse(std::move(row)));
        }
      }

      // Surviving extension coordinates, in column order, become the basis.
      std::map<std::int64_t, int> index_of_free;
      for (std::size_t p = 0; p < incoming.size(); ++p) {
        const Arrow& a = q.arrow(incoming[p]);
        for (int z : block_[i][t - 1][a.source]) {
          std::int64_t col = column(static_cast<int>(p), z);
          if (ech.rows().count(col)) continue;
          int idx = module_dim(i, t);
          index_of_free.emplace(col, idx);
          basis_[i][t].push_back(
              basis_[i][t - 1][z].then(arrow_path(q, incoming[p])));
          block_[i][t][j].push_back(idx);
        }
      }

      // Left action rows for every arrow into j.
      for (std::size_t p = 0; p < incoming.size(); ++p) {
        int a = incoming[p];
        int k = q.arrow(a).source;
        auto& matrix = left_[a][i][t - 1];
        matrix.assign(lower_dim, SparseVec{});
        for (int z : block_[i][t - 1][k]) {
          SparseVec residue = ech.reduce(unit_vec(column(static_cast<int>(p), z)));
          std::vector<std::pair<std::int64_t, Rational>> image;
          for (const auto& [col, coef] : residue.terms) {
            image.emplace_back(index_of_free.at(col), coef);
          }
          matrix[z] = make_sparse(std::move(image));
        }
      }
    }
  }
}

int GradedAlgebra::dim(int source, int target, int degree) const {
  if (degree < 0 || degree > bound_) return 0;
  return static_cast<int>(block_[source][degree][target].size());
}

int GradedAlgebra::module_dim(int source, int degree) const {
  if (degree < 0 || degree > bound_) return 0;
  return static_cast<int>(basis_[source][degree].size());
}

long long GradedAlgebra::dim_at_degree(int degree) const {
  long long total = 0;
  for (int i = 0; i < quiver().vertex_count(); ++i) {
    total += module_dim(i, degree);
  }
  return total;
}

long long GradedAlgebra::total_dim() const {
  long long total = 0;
  for (int t = 0; t <= bound_; ++t) total += dim_at_degree(t);
  return total;
}

bool GradedAlgebra::stabilized() const {
  for (int t = 0; t <= bound_; ++t) {
    if (dim_at_degree(t) == 0) return true;
  }
  return false;
}

int GradedAlgebra::top_degree() const {
  if (!stabilized()) {
    throw std::logic_error(
        "top_degree: algebra did not vanish within the degree bound");
  }
  int top = 0;
  for (int t = 0; t <= bound_; ++t) {
    if (dim_at_degree(t) > 0) top = t;
  }
  return top;
}

std::vector<GradedAlgebra::DimEntry> GradedAlgebra::dimension_table() const {
  std::vector<DimEntry> out;
  for (int t = 0; t <= bound_; ++t) {
    for (int i = 0; i < quiver().vertex_count(); ++i) {
      for (int j = 0; j < quiver().vertex_count(); ++j) {
        int d = dim(i, j, t);
        if (d > 0) out.push_back(DimEntry{i, j, t, d});
      }
    }
  }
  return out;
}

int GradedAlgebra::basis_target(int source, int degree, int index) const {
  return basis_[source][degree][index].target;
}

const Path& GradedAlgebra::basis_rep(int source, int degree, int index) const {
  return basis_[source][degree][index];
}

const std::vector<int>& GradedAlgebra::block(int source, int target,
                                             int degree) const {
  return block_[source][degree][target];
}

SparseVec GradedAlgebra::class_of_path(const Path& p) const {
  if (!is_valid_path(bq_.quiver, p)) {
    throw std::invalid_argument("class_of_path: invalid path");
  }
  if (p.length() > bound_) {
    throw std::out_of_range("class_of_path: path exceeds the degree bound");
  }
  SparseVec v = unit_vec(0);
  int degree = 0;
  for (int a : p.arrows) {
    v = apply_rows(left_[a][p.source][degree], v);
    ++degree;
    if (v.empty()) return v;
  }
  return v;
}

SparseVec GradedAlgebra::class_of_terms(const std::vector<PathTerm>& terms) const {
  SparseVec total;
  for (const PathTerm& t : terms) {
    total = axpy(total, t.coef, class_of_path(t.path));
  }
  return total;
}

const std::vector<SparseVec>& GradedAlgebra::left_action(int arrow, int source,
                                                         int degree) const {
  if (degree < 0 || degree >= bound_) {
    throw std::out_of_range("left_action: degree out of range");
  }
  return left_[arrow][source][degree];
}

const std::vector<SparseVec>& GradedAlgebra::right_action(int arrow,
                                                          int source,
                                                          int degree) const {
  if (degree < 0 || degree >= bound_) {
    throw std::out_of_range("right_action: degree out of range");
  }
  const Arrow& a = bq_.quiver.arrow(arrow);
  if (a.target != source) {
    throw std::invalid_argument("right_action: arrow does not end at source");
  }
  auto key = std::make_tuple(arrow, source, degree);
  auto it = right_memo_.find(key);
  if (it != right_memo_.end()) return it->second;
  std::vector<SparseVec> matrix(module_dim(source, degree));
  for (int z = 0; z < module_dim(source, degree); ++z) {
    matrix[z] = class_of_path(arrow_path(bq_.quiver, arrow)
                                  .then(basis_[source][degree][z]));
  }
  return right_memo_.emplace(key, std::move(matrix)).first->second;
}

std::vector<SparseVec> GradedAlgebra::annihilated_block(int source, int target,
                                                        int degree) const {
  if (degree >= bound_) {
    throw std::out_of_range(
        "annihilated_block: need one degree of headroom beyond the block");
  }
  const Quiver& q = bq_.quiver;
  // Row per basis element of the block: concatenation of all images under
  // left actions of arrows leaving `target` and right actions of arrows
  // entering `source`.
  const std::vector<int>& members = block_[source][degree][target];
  std::vector<SparseVec> stacked;
  stacked.reserve(members.size());
  for (int z : members) {
    std::vector<std::pair<std::int64_t, Rational>> row;
    std::int64_t offset = 0;
    for (int a : q.arrows_from(target)) {
      const SparseVec& image = left_action(a, source, degree)[z];
      for (const auto& [col, coef] : image.terms) {
        row.emplace_back(offset + col, coef);
      }
      offset += module_dim(source, degree + 1);
    }
    for (int a : q.arrows_into(source)) {
      const SparseVec& image =
          right_action(a, source, degree)[static_cast<std::size_t>(z)];
      for (const auto& [col, coef] : image.terms) {
        row.emplace_back(offset + col, coef);
      }
      offset += module_dim(q.arrow(a).source, degree + 1);
    }
    stacked.push_back(make_sparse(std::move(row)));
  }
  // Dependencies among the stacked rows = classes killed on both sides.
  std::vector<SparseVec> kernel = left_kernel(stacked);
  // Convert from block-local indices to module coordinates.
  std::vector<SparseVec> out;
  for (const SparseVec& k : kernel) {
    std::vector<std::pair<std::int64_t, Rational>> terms;
    for (const auto& [idx, coef] : k.terms) {
      terms.emplace_back(members[static_cast<std::size_t>(idx)], coef);
    }
    out.push_back(make_sparse(std::move(terms)));
  }
  return out;
}

std::vector<Path> GradedAlgebra::maximal_bound_paths() const {
  if (!stabilized()) {
    throw std::logic_error(
        "maximal_bound_paths: raise the degree bound; the algebra did not "
        "vanish within it");
  }
  const Quiver& q = bq_.quiver;
  int top = top_degree();

  // Annihilated spans per block, built lazily.
  std::map<std::tuple<int, int, int>, RowEchelon> ann;
  auto ann_span = [&](int i, int j, int t) -> RowEchelon& {
    auto key = std::make_tuple(i, j, t);
    auto it = ann.find(key);
    if (it == ann.end()) {
      RowEchelon ech;
      for (const SparseVec& v : annihilated_block(i, j, t)) ech.insert(v);
      it = ann.emplace(key, std::move(ech)).first;
    }
    return it->second;
  };

  std::vector<Path> found;
  for (int i = 0; i < q.vertex_count(); ++i) {
    // DFS over paths with nonzero class; once a class is annihilated on both
    // sides it is maximal, and all extensions vanish anyway.
    Path current = Path::trivial(i);
    auto walk = [&](auto&& self, const SparseVec& cls) -> void {
      int t = current.length();
      if (t <= top && !cls.empty() &&
          ann_span(i, current.target, t).contains(cls)) {
        found.push_back(current);
      }
      if (t >= top) return;
      for (int a : q.arrows_from(current.target)) {
        SparseVec next = apply_rows(left_[a][i][t], cls);
        if (next.empty()) continue;
        int saved = current.target;
        current.arrows.push_back(a);
        current.target = q.arrow(a).target;
        self(self, next);
        current.target = saved;
        current.arrows.pop_back();
      }
    };
    walk(walk, unit_vec(0));
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

std::vector<Path> GradedAlgebra::maximal_path_basis() const {
  std::vector<Path> all = maximal_bound_paths();
  std::map<std::pair<int, int>, SpanSolver> spans;  // (source, degree)
  std::vector<Path> kept;
  for (const Path& p : all) {
    SpanSolver& span = spans[{p.source, p.length()}];
    if (span.add(class_of_path(p))) kept.push_back(p);
  }
  return kept;
}

std::optional<int> GradedAlgebra::properly_graded_degree(
    std::pair<Path, Path>* offender) const {
  std::vector<Path> all = maximal_bound_paths();
  if (all.empty()) return std::nullopt;
  // Canonical order sorts by length first.
  if (all.front().length() == all.back().length()) {
    return all.front().length();
  }
  if (offender) *offender = {all.front(), all.back()};
  return std::nullopt;
}

}  // namespace quiverlab
