#ifndef GB_EXACT_MATRIX_HPP
#define GB_EXACT_MATRIX_HPP

#include <optional>
#include <vector>

#include "gb/cyclotomic.hpp"
#include "gb/rational.hpp"

namespace gb {

using CycVec = std::vector<Cyclotomic>;

/// Dense matrix over a cyclotomic field. All operations are exact; the
/// dimensions in play (at most 78) keep density cheap.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static ExactMatrix identity(size_t n);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Cyclotomic& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const Cyclotomic& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  bool operator==(const ExactMatrix& o) const;

  CycVec apply(const CycVec& v) const;  // matrix * column vector
  bool is_zero() const;

  /// In-place reduction to reduced row echelon form; returns pivot columns.
  std::vector<size_t> rref();

  size_t rank() const;

  /// Solves A x = b; empty optional when inconsistent. When the solution is
  /// not unique the free variables are set to zero.
  std::optional<CycVec> solve(const CycVec& b) const;

 private:
  size_t rows_, cols_;
  std::vector<Cyclotomic> e_;
};

/// Exact basis of the right null space, rows in reduced echelon normal form
/// (leading entry 1, zeros above and below pivots) so output is deterministic.
std::vector<CycVec> kernel_basis(const ExactMatrix& m);

/// Canonicalizes a spanning set: rref of the stacked rows, zero rows dropped.
std::vector<CycVec> echelon_span(const std::vector<CycVec>& vectors);

/// Row-reduced span with an exact membership test; the workhorse behind all
/// subspace queries.
class RowSpan {
 public:
  RowSpan(size_t dim) : dim_(dim) {}
  explicit RowSpan(const std::vector<CycVec>& vectors);

  size_t dim() const { return dim_; }
  size_t rank() const { return rows_.size(); }
  const std::vector<CycVec>& rows() const { return rows_; }

  /// Adds a vector to the span; returns false if it was already contained.
  bool insert(CycVec v);
  bool contains(const CycVec& v) const;
  /// Residue of v after reduction by the span rows.
  CycVec reduce(CycVec v) const;

 private:
  size_t dim_;
  std::vector<CycVec> rows_;      // in row echelon form, pivot entry 1
  std::vector<size_t> pivots_;
};

/// Unique rational solution of basis * x = target when the basis is linearly
/// independent; present only when it exists and every coefficient is a
/// nonnegative integer.
std::optional<std::vector<long>> solve_nonneg_integer(
    const std::vector<RatVec>& basis_vectors, const RatVec& target);

}  // namespace gb

#endif
