#include "quiverlab/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace quiverlab {

Rational SparseVec::at(std::int64_t col) const {
  auto it = std::lower_bound(
      terms.begin(), terms.end(), col,
      [](const auto& term, std::int64_t c) { return term.first < c; });
  if (it != terms.end() && it->first == col) return it->second;
  return Rational(0);
}

SparseVec make_sparse(std::vector<std::pair<std::int64_t, Rational>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [col, val] : terms) {
    if (!out.terms.empty() && out.terms.back().first == col) {
      out.terms.back().second += val;
      if (out.terms.back().second == 0) out.terms.pop_back();
    } else if (val != 0) {
      out.terms.emplace_back(col, std::move(val));
    }
  }
  return out;
}

SparseVec unit_vec(std::int64_t col) {
  SparseVec v;
  v.terms.emplace_back(col, Rational(1));
  return v;
}

SparseVec axpy(const SparseVec& x, const Rational& c, const SparseVec& y) {
  if (c == 0) return x;
  SparseVec out;
  out.terms.reserve(x.terms.size() + y.terms.size());
  std::size_t i = 0, j = 0;
  while (i < x.terms.size() || j < y.terms.size()) {
    if (j == y.terms.size() ||
        (i < x.terms.size() && x.terms[i].first < y.terms[j].first)) {
      out.terms.push_back(x.terms[i++]);
    } else if (i == x.terms.size() || y.terms[j].first < x.terms[i].first) {
      out.terms.emplace_back(y.terms[j].first, c * y.terms[j].second);
      ++j;
    } else {
      Rational val = x.terms[i].second + c * y.terms[j].second;
      if (val != 0) out.terms.emplace_back(x.terms[i].first, std::move(val));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scaled(SparseVec v, const Rational& c) {
  if (c == 0) return SparseVec{};
  for (auto& [col, val] : v.terms) val *= c;
  return v;
}

SparseVec RowEchelon::reduce(SparseVec v) const {
  // Eliminating at a column never disturbs smaller columns, so a single
  // left-to-right sweep fully reduces v.
  std::size_t i = 0;
  while (i < v.terms.size()) {
    auto it = rows_.find(v.terms[i].first);
    if (it == rows_.end()) {
      ++i;
      continue;
    }
    v = axpy(v, -v.terms[i].second, it->second);
  }
  return v;
}

bool RowEchelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  v = scaled(std::move(v), Rational(1) / v.lead_coef());
  for (auto& [pivot, row] : rows_) {
    Rational c = row.at(v.lead());
    if (c != 0) row = axpy(row, -c, v);
  }
  rows_.emplace(v.lead(), std::move(v));
  return true;
}

std::vector<SparseVec> rref_rows(const std::vector<SparseVec>& rows) {
  RowEchelon ech;
  for (const auto& row : rows) ech.insert(row);
  std::vector<SparseVec> out;
  out.reserve(ech.rows().size());
  for (const auto& [pivot, row] : ech.rows()) out.push_back(row);
  return out;
}

int rank_of(const std::vector<SparseVec>& rows) {
  RowEchelon ech;
  for (const auto& row : rows) ech.insert(row);
  return ech.rank();
}

bool SpanSolver::add(SparseVec v) {
  SparseVec combo;
  std::size_t i = 0;
  while (i < v.terms.size()) {
    auto it = rows_.find(v.terms[i].first);
    if (it == rows_.end()) {
      ++i;
      continue;
    }
    Rational c = -v.terms[i].second;
    combo = axpy(combo, c, it->second.combo);
    v = axpy(v, c, it->second.value);
  }
  if (v.empty()) return false;
  combo = axpy(combo, Rational(1), unit_vec(kept_));
  Rational inv = Rational(1) / v.lead_coef();
  AugRow row{scaled(std::move(v), inv), scaled(std::move(combo), inv)};
  rows_.emplace(row.value.lead(), std::move(row));
  ++kept_;
  return true;
}

bool SpanSolver::contains(const SparseVec& v) const {
  return coordinates(v).has_value();
}

std::optional<std::vector<Rational>> SpanSolver::coordinates(
    const SparseVec& v) const {
  SparseVec residue = v;
  SparseVec combo;
  std::size_t i = 0;
  while (i < residue.terms.size()) {
    auto it = rows_.find(residue.terms[i].first);
    if (it == rows_.end()) {
      ++i;
      continue;
    }
    Rational c = residue.terms[i].second;
    combo = axpy(combo, c, it->second.combo);
    residue = axpy(residue, -c, it->second.value);
  }
  if (!residue.empty()) return std::nullopt;
  std::vector<Rational> coords(kept_, Rational(0));
  for (const auto& [idx, val] : combo.terms) coords[idx] = val;
  return coords;
}

std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& rows,
                                    std::int64_t ncols) {
  RowEchelon ech;
  for (const auto& row : rows) ech.insert(row);
  std::vector<SparseVec> basis;
  for (std::int64_t col = 0; col < ncols; ++col) {
    if (ech.rows().count(col)) continue;
    std::vector<std::pair<std::int64_t, Rational>> terms;
    terms.emplace_back(col, Rational(1));
    for (const auto& [pivot, row] : ech.rows()) {
      Rational c = row.at(col);
      if (c != 0) terms.emplace_back(pivot, -c);
    }
    basis.push_back(make_sparse(std::move(terms)));
  }
  return basis;
}

std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows) {
  // Reduce each row with an augmented identity block; rows that vanish yield
  // dependencies.
  struct Aug {
    SparseVec value;
    SparseVec combo;
  };
  std::map<std::int64_t, Aug> ech;
  std::vector<SparseVec> kernel;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    SparseVec v = rows[r];
    SparseVec combo = unit_vec(static_cast<std::int64_t>(r));
    std::size_t i = 0;
    while (i < v.terms.size()) {
      auto it = ech.find(v.terms[i].first);
      if (it == ech.end()) {
        ++i;
        continue;
      }
      Rational c = -v.terms[i].second;
      combo = axpy(combo, c, it->second.combo);
      v = axpy(v, c, it->second.value);
    }
    if (v.empty()) {
      kernel.push_back(std::move(combo));
    } else {
      Rational inv = Rational(1) / v.lead_coef();
      Aug row{scaled(std::move(v), inv), scaled(std::move(combo), inv)};
      ech.emplace(row.value.lead(), std::move(row));
    }
  }
  return kernel;
}

SparseVec apply_rows(const std::vector<SparseVec>& matrix, const SparseVec& v) {
  SparseVec out;
  for (const auto& [idx, coef] : v.terms) {
    assert(idx >= 0 && static_cast<std::size_t>(idx) < matrix.size());
    out = axpy(out, coef, matrix[static_cast<std::size_t>(idx)]);
  }
  return out;
}

}  // namespace quiverlab
