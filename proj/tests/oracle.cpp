#include "oracle.hpp"

#include <algorithm>
#include <map>

#include "quiverlab/linalg.hpp"

namespace quiverlab::oracle {

int block_dim(const BoundQuiver& bq, int source, int target, int degree) {
  const Quiver& q = bq.quiver;
  std::vector<Path> columns =
      enumerate_paths_between(q, source, target, degree);
  if (columns.empty()) return 0;
  std::map<std::vector<int>, std::int64_t> column_of;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    column_of[columns[c].arrows] = static_cast<std::int64_t>(c);
  }

  // Ideal slice: w * r * u for every relation r and all paths w: source ->
  // r.source, u: r.target -> target filling the degree.
  RowEchelon ideal;
  for (const Relation& r : bq.relations) {
    if (r.length > degree) continue;
    for (int pre = 0; pre + r.length <= degree; ++pre) {
      int post = degree - r.length - pre;
      for (const Path& w : enumerate_paths_between(q, source, r.source, pre)) {
        for (const Path& u :
             enumerate_paths_between(q, r.target, target, post)) {
          std::vector<std::pair<std::int64_t, Rational>> row;
          for (const PathTerm& t : r.terms) {
            Path full = w.then(t.path).then(u);
            row.emplace_back(column_of.at(full.arrows), t.coef);
          }
          ideal.insert(make_sparse(std::move(row)));
        }
      }
    }
  }
  return static_cast<int>(columns.size()) - ideal.rank();
}

long long degree_dim(const BoundQuiver& bq, int degree) {
  long long total = 0;
  for (int i = 0; i < bq.quiver.vertex_count(); ++i) {
    for (int j = 0; j < bq.quiver.vertex_count(); ++j) {
      total += block_dim(bq, i, j, degree);
    }
  }
  return total;
}

}  // namespace quiverlab::oracle
