#include "torelli/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "torelli/simd/kernels.hpp"

namespace torelli {

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = field.reduce(rows[r][c]);
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Residue v) { return v == 0; });
}

std::vector<Residue> Matrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  std::vector<Residue> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = simd::dot(row(r), v, field_.prime());
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  const std::uint32_t p = a.field_.prime();
  for (std::size_t i = 0; i < a.rows_; ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Residue c = a.at(i, k);
      if (c != 0) simd::axpy(dst, b.row(k), c, p);
    }
  }
  return out;
}

Echelon rref(Matrix m) {
  const PrimeField F = m.field();
  const std::uint32_t p = F.prime();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m.at(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r) {
      auto a = m.row(pr);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    // Columns left of c are already zero in the pivot row.
    auto pivot_row = m.row(r).subspan(c);
    simd::scale(pivot_row, F.inv(m.at(r, c)), p);
    for (std::size_t o = 0; o < m.rows(); ++o) {
      if (o == r) continue;
      const Residue factor = m.at(o, c);
      if (factor == 0) continue;
      simd::axpy(m.row(o).subspan(c), pivot_row, F.neg(factor), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

RankKernel rank_kernel(const Matrix& m) {
  const PrimeField F = m.field();
  Echelon e = rref(m);
  RankKernel out;
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Residue> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = F.neg(e.reduced.at(i, f));
    out.kernel.push_back(std::move(v));
    out.free_columns.push_back(f);
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

}  // namespace torelli
