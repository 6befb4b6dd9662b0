#pragma once

#include "quiverlab/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace quiverlab {

// Sparse vector over an integer-indexed coordinate space: strictly increasing
// column indices, no explicit zeros. The zero vector has no terms.
struct SparseVec {
  std::vector<std::pair<std::int64_t, Rational>> terms;

  bool empty() const { return terms.empty(); }
  std::int64_t lead() const { return terms.front().first; }
  const Rational& lead_coef() const { return terms.front().second; }
  Rational at(std::int64_t col) const;

  friend bool operator==(const SparseVec&, const SparseVec&) = default;
};

// Builds a SparseVec from unordered, possibly repeated terms: sorts, merges
// duplicates, drops zeros.
SparseVec make_sparse(std::vector<std::pair<std::int64_t, Rational>> terms);

SparseVec unit_vec(std::int64_t col);

// x + c*y, term-merged.
SparseVec axpy(const SparseVec& x, const Rational& c, const SparseVec& y);

SparseVec scaled(SparseVec v, const Rational& c);

// Incrementally maintained reduced row echelon basis of a row space. Stored
// rows are monic, have pairwise distinct pivot columns, and are fully reduced
// against each other, so together they are the canonical RREF of everything
// inserted so far.
class RowEchelon {
 public:
  // Canonical residue of v modulo the current row space.
  SparseVec reduce(SparseVec v) const;

  // Reduces v and, if independent, installs the residue. Returns whether the
  // rank grew.
  bool insert(SparseVec v);

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<std::int64_t, SparseVec>& rows() const { return rows_; }

 private:
  std::map<std::int64_t, SparseVec> rows_;  // pivot column -> row
};

// Canonical reduced row echelon form of a row set, sorted by pivot column.
std::vector<SparseVec> rref_rows(const std::vector<SparseVec>& rows);

int rank_of(const std::vector<SparseVec>& rows);

// Tracks a generating set and expresses later vectors over the independent
// generators that were actually kept (in insertion order).
class SpanSolver {
 public:
  // Returns true if v was independent of the generators added before it.
  bool add(SparseVec v);

  int dim() const { return kept_; }
  bool contains(const SparseVec& v) const;

  // Coefficients of v over the kept generators; nullopt if v is not in the
  // span. The returned vector always has dim() entries.
  std::optional<std::vector<Rational>> coordinates(const SparseVec& v) const;

 private:
  struct AugRow {
    SparseVec value;  // reduced vector, monic
    SparseVec combo;  // same vector expressed over kept generator indices
  };
  std::map<std::int64_t, AugRow> rows_;  // pivot column of `value` -> row
  int kept_ = 0;
};

// {x in k^ncols : R x = 0} for the matrix R with the given rows. One basis
// vector per free column, derived from the RREF (canonical).
std::vector<SparseVec> kernel_basis(const std::vector<SparseVec>& rows,
                                    std::int64_t ncols);

// Linear dependencies among the given rows: vectors x over row indices with
// sum_i x_i rows[i] = 0.
std::vector<SparseVec> left_kernel(const std::vector<SparseVec>& rows);

// Row-vector convention: v is a combination of source basis elements, and
// matrix[i] is the image of source basis element i. Returns sum v_i matrix[i].
SparseVec apply_rows(const std::vector<SparseVec>& matrix, const SparseVec& v);

}  // namespace quiverlab
