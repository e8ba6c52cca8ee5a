#include "scx/matrix.hpp"

#include "scx/error.hpp"

namespace scx {

Matrix::Matrix(const Ring& r, std::size_t rows, std::size_t cols)
    : ring_(r), rows_(rows), cols_(cols), e_(rows * cols, Poly(r)) {}

Matrix Matrix::identity(const Ring& r, std::size_t n) {
  Matrix m(r, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::one(r);
  return m;
}

Matrix Matrix::from_rows(const Ring& r, const std::vector<std::vector<Poly>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(r, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw DomainError("ragged matrix");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_ints(const Ring& r, const std::vector<std::vector<long long>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(r, rows.size(), nc);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != nc) throw DomainError("ragged matrix");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = Poly(r, rows[i][j]);
  }
  return m;
}

const Poly& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DomainError("matrix index out of range");
  return (*this)(i, j);
}

void Matrix::set(std::size_t i, std::size_t j, const Poly& p) {
  if (i >= rows_ || j >= cols_) throw DomainError("matrix index out of range");
  if (p.ring() != ring_) throw RingMismatch("entry ring " + p.ring().name() + " vs " + ring_.name());
  (*this)(i, j) = p;
}

static void same_ring(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring()) throw RingMismatch("matrix rings differ: " + a.ring().name() + " vs " + b.ring().name());
}

Matrix Matrix::operator*(const Matrix& o) const {
  same_ring(*this, o);
  if (cols_ != o.rows_)
    throw DomainError("shape mismatch in product: " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                      " * " + std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  Matrix r(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Poly& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Poly& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  same_ring(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("shape mismatch in sum");
  Matrix r = *this;
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (!o.e_[k].is_zero()) r.e_[k] += o.e_[k];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& p : r.e_)
    if (!p.is_zero()) p = -p;
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::scaled(const Poly& c) const {
  Matrix r = *this;
  for (auto& p : r.e_)
    if (!p.is_zero()) p = p * c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool Matrix::is_zero() const {
  for (auto& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DomainError("block out of range");
  Matrix r(ring_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

void Matrix::put(std::size_t r0, std::size_t c0, const Matrix& b) {
  same_ring(*this, b);
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DomainError("put out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  same_ring(a, b);
  if (a.rows_ != b.rows_) throw DomainError("hstack row mismatch");
  Matrix r(a.ring_, a.rows_, a.cols_ + b.cols_);
  r.put(0, 0, a);
  r.put(0, a.cols_, b);
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  same_ring(a, b);
  if (a.cols_ != b.cols_) throw DomainError("vstack column mismatch");
  Matrix r(a.ring_, a.rows_ + b.rows_, a.cols_);
  r.put(0, 0, a);
  r.put(a.rows_, 0, b);
  return r;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void Matrix::add_row(std::size_t dst, std::size_t src, const Poly& c) {
  if (c.is_zero()) return;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!(*this)(src, j).is_zero()) (*this)(dst, j) += c * (*this)(src, j);
}

void Matrix::add_col(std::size_t dst, std::size_t src, const Poly& c) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, src).is_zero()) (*this)(i, dst) += (*this)(i, src) * c;
}

void Matrix::scale_row(std::size_t i, const Poly& c) {
  for (std::size_t j = 0; j < cols_; ++j)
    if (!(*this)(i, j).is_zero()) (*this)(i, j) = c * (*this)(i, j);
}

void Matrix::scale_col(std::size_t j, const Poly& c) {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, j).is_zero()) (*this)(i, j) = (*this)(i, j) * c;
}

std::string Matrix::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
    s += "]";
  }
  return s + "]";
}

Matrix base_change(const Matrix& m, const Ring& target, const VarMap& map) {
  Matrix r(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = base_change(m(i, j), target, map);
  return r;
}

}  // namespace scx
