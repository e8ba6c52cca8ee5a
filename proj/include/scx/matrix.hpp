#pragma once
#include <cstddef>
#include <string>
#include <vector>

#include "scx/poly.hpp"

namespace scx {

// Dense matrix over a Ring. Entry (i, j) is row i, column j; maps act on columns.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Ring& r, std::size_t rows, std::size_t cols);

  static Matrix zero(const Ring& r, std::size_t rows, std::size_t cols) { return Matrix(r, rows, cols); }
  static Matrix identity(const Ring& r, std::size_t n);
  static Matrix from_rows(const Ring& r, const std::vector<std::vector<Poly>>& rows);
  static Matrix from_ints(const Ring& r, const std::vector<std::vector<long long>>& rows);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Poly& p);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Poly& c) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void put(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix column(std::size_t j) const { return block(0, j, rows_, 1); }
  Matrix row(std::size_t i) const { return block(i, 0, 1, cols_); }
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += c * row[src]
  void add_row(std::size_t dst, std::size_t src, const Poly& c);
  void add_col(std::size_t dst, std::size_t src, const Poly& c);
  void scale_row(std::size_t i, const Poly& c);
  void scale_col(std::size_t j, const Poly& c);

  std::string str() const;

 private:
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> e_;
};

// Entry-wise base change.
Matrix base_change(const Matrix& m, const Ring& target, const VarMap& map);

}  // namespace scx
