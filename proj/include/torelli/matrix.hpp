#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "torelli/field.hpp"

namespace torelli {

/// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(PrimeField field, std::size_t n);
  static Matrix from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Matrix transposed() const;
  bool is_zero() const;
  std::vector<Residue> apply(std::span<const Residue> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// Reduced row echelon form with pivot columns in increasing order.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m);

struct RankKernel {
  std::size_t rank = 0;
  /// One vector per free column f: 1 at f, 0 at every other free column.
  /// This is the unique reduced basis of the kernel.
  std::vector<std::vector<Residue>> kernel;
  /// free_columns[k] is the free column of kernel[k], ascending.
  std::vector<std::size_t> free_columns;
};

RankKernel rank_kernel(const Matrix& m);
std::size_t rank(const Matrix& m);

}  // namespace torelli
