#include "gb/exact_matrix.hpp"

#include <stdexcept>

namespace gb {

ExactMatrix ExactMatrix::identity(size_t n) {
  ExactMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix::operator*: shape mismatch");
  ExactMatrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Cyclotomic& a = at(i, k);
      if (a.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        const Cyclotomic& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("ExactMatrix::operator-: shape mismatch");
  ExactMatrix r(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

CycVec ExactMatrix::apply(const CycVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("ExactMatrix::apply: shape mismatch");
  CycVec r(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      const Cyclotomic& a = at(i, j);
      if (!a.is_zero() && !v[j].is_zero()) r[i] += a * v[j];
    }
  return r;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<size_t> ExactMatrix::rref() {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < cols_ && row < rows_; ++col) {
    size_t pivot = row;
    while (pivot < rows_ && at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != row)
      for (size_t j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(row, j));
    const Cyclotomic inv = at(row, col).inverse();
    for (size_t j = col; j < cols_; ++j)
      if (!at(row, j).is_zero()) at(row, j) *= inv;
    for (size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col).is_zero()) continue;
      const Cyclotomic f = at(i, col);
      for (size_t j = col; j < cols_; ++j)
        if (!at(row, j).is_zero()) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

size_t ExactMatrix::rank() const {
  ExactMatrix copy = *this;
  return copy.rref().size();
}

std::optional<CycVec> ExactMatrix::solve(const CycVec& b) const {
  if (b.size() != rows_) throw std::invalid_argument("ExactMatrix::solve: shape mismatch");
  ExactMatrix aug(rows_, cols_ + 1);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<size_t> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
  CycVec x(cols_, Cyclotomic(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
  return x;
}

std::vector<CycVec> kernel_basis(const ExactMatrix& m) {
  ExactMatrix red = m;
  std::vector<size_t> pivots = red.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<CycVec> vecs;
  for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    CycVec v(m.cols(), Cyclotomic(0));
    v[free_col] = Cyclotomic(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(r, free_col);
    vecs.push_back(std::move(v));
  }
  return echelon_span(vecs);
}

std::vector<CycVec> echelon_span(const std::vector<CycVec>& vectors) {
  if (vectors.empty()) return {};
  ExactMatrix m(vectors.size(), vectors[0].size());
  for (size_t i = 0; i < vectors.size(); ++i)
    for (size_t j = 0; j < vectors[i].size(); ++j) m.at(i, j) = vectors[i][j];
  size_t nrows = m.rref().size();
  std::vector<CycVec> rows;
  for (size_t i = 0; i < nrows; ++i) {
    CycVec v(m.cols());
    for (size_t j = 0; j < m.cols(); ++j) v[j] = m.at(i, j);
    rows.push_back(std::move(v));
  }
  return rows;
}

RowSpan::RowSpan(const std::vector<CycVec>& vectors)
    : dim_(vectors.empty() ? 0 : vectors[0].size()) {
  for (const auto& v : vectors) insert(v);
}

CycVec RowSpan::reduce(CycVec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Cyclotomic& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    const Cyclotomic f = c;  // pivot entries are 1
    for (size_t j = pivots_[r]; j < dim_; ++j)
      if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
  }
  return v;
}

bool RowSpan::insert(CycVec v) {
  v = reduce(std::move(v));
  size_t lead = dim_;
  for (size_t j = 0; j < dim_; ++j)
    if (!v[j].is_zero()) {
      lead = j;
      break;
    }
  if (lead == dim_) return false;
  const Cyclotomic inv = v[lead].inverse();
  for (size_t j = lead; j < dim_; ++j)
    if (!v[j].is_zero()) v[j] *= inv;
  // Keep earlier rows reduced against the new one.
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Cyclotomic c = rows_[r][lead];
    if (c.is_zero()) continue;
    for (size_t j = lead; j < dim_; ++j)
      if (!v[j].is_zero()) rows_[r][j] -= c * v[j];
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

bool RowSpan::contains(const CycVec& v) const {
  CycVec res = reduce(v);
  for (const auto& x : res)
    if (!x.is_zero()) return false;
  return true;
}

std::optional<std::vector<long>> solve_nonneg_integer(
    const std::vector<RatVec>& basis_vectors, const RatVec& target) {
  if (basis_vectors.empty()) {
    if (is_zero_vec(target)) return std::vector<long>{};
    return std::nullopt;
  }
  const size_t dim = basis_vectors[0].size();
  const size_t k = basis_vectors.size();
  // Columns are the basis vectors; augmented column is the target.
  std::vector<RatVec> m(dim, RatVec(k + 1, Rational(0)));
  for (size_t j = 0; j < k; ++j)
    for (size_t i = 0; i < dim; ++i) m[i][j] = basis_vectors[j][i];
  for (size_t i = 0; i < dim; ++i) m[i][k] = target[i];

  size_t row = 0;
  std::vector<size_t> pivot_of_col(k, dim);
  for (size_t col = 0; col < k && row < dim; ++col) {
    size_t p = row;
    while (p < dim && m[p][col] == 0) ++p;
    if (p == dim) continue;  // dependent column; pre-condition violated
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][col];
    for (size_t j = col; j <= k; ++j) m[row][j] *= inv;
    for (size_t i = 0; i < dim; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (size_t j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  // Inconsistent rows mean the target is outside the span.
  for (size_t i = row; i < dim; ++i)
    if (m[i][k] != 0) return std::nullopt;
  std::vector<long> coeffs(k, 0);
  for (size_t col = 0; col < k; ++col) {
    if (pivot_of_col[col] == dim) return std::nullopt;
    const Rational& c = m[pivot_of_col[col]][k];
    if (c < 0 || !is_integer(c)) return std::nullopt;
    coeffs[col] = static_cast<long>(c.get_num().get_si());
  }
  return coeffs;
}

}  // namespace gb
