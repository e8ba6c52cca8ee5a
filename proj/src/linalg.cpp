#include "scx/linalg.hpp"

#include "scx/error.hpp"

namespace scx {

namespace {

void require_euclidean(const Ring& r, const char* what) {
  if (!r.is_euclidean()) throw UnsupportedRing(std::string(what) + " is not available over " + r.name());
}

// Lowest and highest T-exponent of a nonzero element of F[T^±1].
std::pair<int, int> t_span(const Poly& a) {
  int lo = a.terms().begin()->first.t[0], hi = lo;
  for (auto& [m, c] : a.terms()) {
    lo = std::min(lo, m.t[0]);
    hi = std::max(hi, m.t[0]);
  }
  return {lo, hi};
}

// Dense coefficients of T^-lo * a, index = exponent.
std::vector<mpq_class> dense(const Poly& a, int lo, int hi) {
  std::vector<mpq_class> v(hi - lo + 1, 0);
  for (auto& [m, c] : a.terms()) v[m.t[0] - lo] = c;
  return v;
}

Poly from_dense(const Ring& r, const std::vector<mpq_class>& v, int shift) {
  Poly::Terms t;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      Monomial m;
      m.t[0] = static_cast<int>(i) + shift;
      t[m] = v[i];
    }
  return Poly(r, std::move(t));
}

mpq_class field_reduce(Coeff c, const mpq_class& v) {
  if (c != Coeff::GF2) return v;
  mpz_class n = v.get_num() % 2;
  return n == 0 ? 0 : 1;
}

}  // namespace

mpz_class euclid_norm(const Poly& a) {
  const Ring& r = a.ring();
  require_euclidean(r, "Euclidean norm");
  if (a.is_zero()) return -1;
  if (r.tag() == Ring::Tag::Z) return abs(a.constant_coeff().get_num());
  if (r.is_field()) return 0;
  auto [lo, hi] = t_span(a);
  return hi - lo;
}

DivMod euclid_divmod(const Poly& a, const Poly& b) {
  const Ring& r = a.ring();
  require_euclidean(r, "division with remainder");
  if (a.ring() != b.ring()) throw RingMismatch("divmod ring mismatch");
  if (b.is_zero()) throw DomainError("division by zero");
  if (a.is_zero()) return {Poly(r), Poly(r)};
  if (r.tag() == Ring::Tag::Z) {
    mpz_class na = a.constant_coeff().get_num(), nb = b.constant_coeff().get_num(), q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
    return {Poly::monomial(r, mpq_class(q), Monomial{}), Poly::monomial(r, mpq_class(rem), Monomial{})};
  }
  if (r.is_field()) return {*divide(a, b), Poly(r)};
  // F[T^±1]: long division of the polynomial parts.
  auto [alo, ahi] = t_span(a);
  auto [blo, bhi] = t_span(b);
  std::vector<mpq_class> num = dense(a, alo, ahi), den = dense(b, blo, bhi);
  int db = bhi - blo;
  if (static_cast<int>(num.size()) - 1 < db) return {Poly(r), a};
  std::vector<mpq_class> q(num.size() - db, 0);
  mpq_class lead_inv = 1 / den.back();
  for (int k = static_cast<int>(num.size()) - 1; k >= db; --k) {
    mpq_class c = field_reduce(r.coeff(), num[k] * lead_inv);
    if (c == 0) continue;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) num[k - db + j] = field_reduce(r.coeff(), num[k - db + j] - c * den[j]);
  }
  num.resize(db);
  return {from_dense(r, q, alo - blo), from_dense(r, num, alo)};
}

Poly canonical_unit(const Poly& a) {
  const Ring& r = a.ring();
  if (a.is_zero()) throw DomainError("canonical unit of zero");
  if (r.tag() == Ring::Tag::Z) return Poly(r, a.constant_coeff() < 0 ? -1 : 1);
  if (r.is_field()) return unit_inverse(a);
  if (r.tag() == Ring::Tag::F_LAURENT_T || r.tag() == Ring::Tag::Z_LAURENT_T) {
    auto [lo, hi] = t_span(a);
    const mpq_class& lc = a.lead_coeff();
    mpq_class s = r.coeff() == Coeff::ZZ ? mpq_class(lc < 0 ? -1 : 1) : mpq_class(1 / lc);
    Monomial m;
    m.t[0] = -lo;
    return Poly::monomial(r, s, m);
  }
  return Poly::one(r);
}

Poly canonical_associate(const Poly& a) {
  if (a.is_zero()) return a;
  return a * canonical_unit(a);
}

Poly euclid_gcd(const Poly& a0, const Poly& b0) {
  require_euclidean(a0.ring(), "gcd");
  Poly a = a0, b = b0;
  while (!b.is_zero()) {
    Poly r = euclid_divmod(a, b).r;
    a = b;
    b = r;
  }
  return canonical_associate(a);
}

SmithResult smith_normal_form(const Matrix& M) {
  const Ring& ring = M.ring();
  require_euclidean(ring, "Smith normal form");
  const std::size_t m = M.rows(), n = M.cols();
  Matrix A = M, U = Matrix::identity(ring, m), V = Matrix::identity(ring, n);
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool found = false;
    std::size_t pi = 0, pj = 0;
    mpz_class best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (!A(i, j).is_zero()) {
          mpz_class nk = euclid_norm(A(i, j));
          if (!found || nk < best) {
            found = true;
            best = nk;
            pi = i;
            pj = j;
          }
        }
    if (!found) break;
    A.swap_rows(t, pi);
    U.swap_rows(t, pi);
    A.swap_cols(t, pj);
    V.swap_cols(t, pj);
    for (;;) {
      bool changed = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (A(i, t).is_zero()) continue;
        DivMod qr = euclid_divmod(A(i, t), A(t, t));
        A.add_row(i, t, -qr.q);
        U.add_row(i, t, -qr.q);
        if (!qr.r.is_zero()) {
          A.swap_rows(i, t);
          U.swap_rows(i, t);
          changed = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (A(t, j).is_zero()) continue;
        DivMod qr = euclid_divmod(A(t, j), A(t, t));
        A.add_col(j, t, -qr.q);
        V.add_col(j, t, -qr.q);
        if (!qr.r.is_zero()) {
          A.swap_cols(j, t);
          V.swap_cols(j, t);
          changed = true;
        }
      }
      if (changed) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n && !fixed; ++j)
          if (!A(i, j).is_zero() && !divide(A(i, j), A(t, t))) {
            A.add_row(t, i, Poly::one(ring));
            U.add_row(t, i, Poly::one(ring));
            fixed = true;
          }
      if (!fixed) break;
    }
    Poly u = canonical_unit(A(t, t));
    A.scale_row(t, u);
    U.scale_row(t, u);
  }
  return {A, U, V, t};
}

std::size_t rank(const Matrix& M) {
  Matrix A = M;
  const std::size_t m = A.rows(), n = A.cols();
  Poly prev = Poly::one(A.ring());
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && A(p, c).is_zero()) ++p;
    if (p == m) continue;
    A.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        Poly v = A(r, c) * A(i, j) - A(i, c) * A(r, j);
        if (v.is_zero()) {
          A(i, j) = v;
          continue;
        }
        auto q = divide(v, prev);
        if (!q) throw Error("fraction-free elimination: inexact division");
        A(i, j) = *q;
      }
      A(i, c) = Poly(A.ring());
    }
    prev = A(r, c);
    ++r;
  }
  return r;
}

namespace {

// Unit-pivot elimination: x = P y with the residual system R y = 0.
Matrix kernel_unit_pivot(const Matrix& M) {
  const Ring& ring = M.ring();
  Matrix P = Matrix::identity(ring, M.cols());
  Matrix R = M;
  for (;;) {
    bool found = false;
    std::size_t pi = 0, pj = 0;
    for (std::size_t i = 0; i < R.rows() && !found; ++i)
      for (std::size_t j = 0; j < R.cols() && !found; ++j)
        if (is_unit(R(i, j))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    // y_pj = -u^{-1} sum_{k != pj} R(pi,k) y_k
    const std::size_t k = R.cols();
    Matrix S(ring, k, k - 1);
    Poly ninv = -unit_inverse(R(pi, pj));
    for (std::size_t c = 0, col = 0; c < k; ++c) {
      if (c == pj) continue;
      S(c, col) = Poly::one(ring);
      S(pj, col) = ninv * R(pi, c);
      ++col;
    }
    P = P * S;
    Matrix RS = R * S;
    Matrix Rn(ring, RS.rows() - 1, RS.cols());
    for (std::size_t i = 0, row = 0; i < RS.rows(); ++i) {
      if (i == pi) continue;
      for (std::size_t j = 0; j < RS.cols(); ++j) Rn(row, j) = RS(i, j);
      ++row;
    }
    R = Rn;
  }
  if (R.is_zero()) return P;
  if (rank(R) == R.cols()) return Matrix(ring, M.cols(), 0);
  throw UnsupportedRing("kernel over " + ring.name() + " not decided by unit pivots");
}

}  // namespace

Matrix kernel_basis(const Matrix& M) {
  if (!M.ring().is_euclidean()) return kernel_unit_pivot(M);
  SmithResult s = smith_normal_form(M);
  return s.V_right.block(0, s.rank, M.cols(), M.cols() - s.rank);
}

std::optional<Matrix> solve(const Matrix& M, const Matrix& b) {
  require_euclidean(M.ring(), "solve");
  if (b.rows() != M.rows() || b.cols() != 1) throw DomainError("solve: right-hand side shape");
  SmithResult s = smith_normal_form(M);
  Matrix ub = s.U_left * b;
  Matrix y(M.ring(), M.cols(), 1);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (i < s.rank) {
      auto q = divide(ub(i, 0), s.D(i, i));
      if (!q) return std::nullopt;
      y(i, 0) = *q;
    } else if (!ub(i, 0).is_zero()) {
      return std::nullopt;
    }
  }
  return s.V_right * y;
}

HomologySummary homology(const Matrix& d_in, const Matrix& d_out) {
  if (d_in.ring() != d_out.ring()) throw RingMismatch("homology: rings differ");
  require_euclidean(d_in.ring(), "homology");
  if (d_out.cols() != d_in.rows()) throw DomainError("homology: maps are not composable");
  if (!(d_out * d_in).is_zero()) throw DomainError("homology: d_out * d_in != 0");
  SmithResult s = smith_normal_form(d_in);
  HomologySummary h;
  h.free_rank = d_in.rows() - rank(d_out) - s.rank;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (!is_unit(s.D(i, i))) h.torsion.push_back(s.D(i, i));
  return h;
}

}  // namespace scx
