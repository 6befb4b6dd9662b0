#include "quiverlab/linalg.hpp"

#include "doctest.h"

using namespace quiverlab;

namespace {

SparseVec vec(std::vector<std::pair<std::int64_t, int>> terms) {
  std::vector<std::pair<std::int64_t, Rational>> t;
  for (auto& [c, v] : terms) t.emplace_back(c, Rational(v));
  return make_sparse(std::move(t));
}

}  // namespace

TEST_CASE("make_sparse merges and drops zeros") {
  SparseVec v = vec({{3, 1}, {1, 2}, {3, -1}, {0, 5}});
  CHECK(v.terms.size() == 2);
  CHECK(v.at(0) == 5);
  CHECK(v.at(1) == 2);
  CHECK(v.at(3) == 0);
}

TEST_CASE("axpy merges terms") {
  SparseVec x = vec({{0, 1}, {2, 3}});
  SparseVec y = vec({{0, 1}, {1, 1}, {2, -1}});
  SparseVec z = axpy(x, Rational(3), y);
  CHECK(z.at(0) == 4);
  CHECK(z.at(1) == 3);
  CHECK(z.at(2) == 0);
}

TEST_CASE("RowEchelon computes canonical reduced forms") {
  RowEchelon ech;
  CHECK(ech.insert(vec({{0, 1}, {1, 1}})));
  CHECK(ech.insert(vec({{1, 2}, {2, 2}})));
  CHECK_FALSE(ech.insert(vec({{0, 1}, {2, -1}})));  // sum of the others
  CHECK(ech.rank() == 2);

  // Fully reduced: the first row lost its column-1 entry.
  const SparseVec& row0 = ech.rows().at(0);
  CHECK(row0.at(1) == 0);
  CHECK(row0.at(2) == -1);

  SparseVec residue = ech.reduce(vec({{0, 2}, {1, 1}, {3, 1}}));
  CHECK(residue.at(0) == 0);
  CHECK(residue.at(1) == 0);
  CHECK(residue.at(3) == 1);
}

TEST_CASE("kernel_basis matches hand computation") {
  // x0 + x1 = 0, x1 + x2 = 0 over 4 columns.
  std::vector<SparseVec> rows = {vec({{0, 1}, {1, 1}}), vec({{1, 1}, {2, 1}})};
  auto kernel = kernel_basis(rows, 4);
  REQUIRE(kernel.size() == 2);
  for (const SparseVec& k : kernel) {
    for (const SparseVec& r : rows) {
      Rational dot = 0;
      for (const auto& [c, v] : r.terms) dot += v * k.at(c);
      CHECK(dot == 0);
    }
  }
  // Free columns are 2 and 3.
  CHECK(kernel[0].at(2) == 1);
  CHECK(kernel[0] == vec({{0, 1}, {1, -1}, {2, 1}}));
  CHECK(kernel[1] == vec({{3, 1}}));
}

TEST_CASE("SpanSolver expresses vectors over kept generators") {
  SpanSolver span;
  CHECK(span.add(vec({{0, 1}, {1, 1}})));
  CHECK(span.add(vec({{1, 1}})));
  CHECK_FALSE(span.add(vec({{0, 2}, {1, 3}})));  // 2*g0 + g1
  CHECK(span.dim() == 2);

  auto coords = span.coordinates(vec({{0, 2}, {1, 3}}));
  REQUIRE(coords.has_value());
  CHECK((*coords)[0] == 2);
  CHECK((*coords)[1] == 1);
  CHECK_FALSE(span.coordinates(vec({{2, 1}})).has_value());
}

TEST_CASE("left_kernel finds row dependencies") {
  std::vector<SparseVec> rows = {vec({{0, 1}}), vec({{1, 1}}),
                                 vec({{0, 2}, {1, -3}})};
  auto deps = left_kernel(rows);
  REQUIRE(deps.size() == 1);
  const SparseVec& d = deps[0];
  // 2*r0 - 3*r1 - r2 = 0 up to scale.
  Rational scale = d.at(2);
  REQUIRE(scale != 0);
  CHECK(d.at(0) / scale == -2);
  CHECK(d.at(1) / scale == 3);
}
