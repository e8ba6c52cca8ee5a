#pragma once
#include <random>

#include "scx/poly.hpp"
#include "scx/linalg.hpp"
#include "scx/scomplex.hpp"

namespace testing {

inline scx::Poly random_poly(std::mt19937& rng, const scx::Ring& r, int max_terms = 3) {
  std::uniform_int_distribution<int> nt(0, max_terms), e(-2, 2), c(-3, 3), xe(0, 2);
  scx::Poly::Terms t;
  int n = nt(rng);
  for (int k = 0; k < n; ++k) {
    scx::Monomial m;
    if (r.is_f4()) {
      m.x = xe(rng);
    } else {
      for (int i = 0; i < r.num_t(); ++i) m.t[i] = e(rng);
      if (r.has_u()) m.u = scx::Rational(e(rng), r.u_den());
      if (r.has_x()) m.x = xe(rng);
    }
    t[m] += c(rng);
  }
  return scx::Poly(r, t);
}

}  // namespace testing


namespace testing {

inline scx::Poly random_nonzero(std::mt19937& rng, const scx::Ring& r, int max_terms = 2) {
  for (;;) {
    scx::Poly p = random_poly(rng, r, max_terms);
    if (!p.is_zero()) return p;
  }
}

// Tower with one reducible-facing generator at the bottom: gens g_{k-1},...,g_0
// at gradings 1+2(k-1),...,1 with v g_{i+1} = c_i g_i and delta1 g_0 = c.
inline scx::SComplex tower(std::mt19937& rng, const scx::Ring& r, int k) {
  std::vector<scx::Generator> g;
  for (int i = k - 1; i >= 0; --i) g.push_back({"t" + std::to_string(i), 1 + 2 * i, std::nullopt, std::nullopt});
  scx::SComplex C(r, g);
  for (int i = 0; i + 1 < k; ++i) C.v(i + 1, i) = random_nonzero(rng, r);
  C.delta1(0, k - 1) = random_nonzero(rng, r);
  return C;
}

inline scx::SComplex direct_sum(const scx::SComplex& A, const scx::SComplex& B) {
  auto g = A.gens;
  g.insert(g.end(), B.gens.begin(), B.gens.end());
  scx::SComplex S(A.ring, g);
  const std::size_t n = A.size();
  S.d.put(0, 0, A.d);
  S.d.put(n, n, B.d);
  S.v.put(0, 0, A.v);
  S.v.put(n, n, B.v);
  S.delta1.put(0, 0, A.delta1);
  S.delta1.put(0, n, B.delta1);
  S.delta2.put(0, 0, A.delta2);
  S.delta2.put(n, 0, B.delta2);
  S.v_trusted = A.v_trusted && B.v_trusted;
  return S;
}

// Pair a -> c*b with zero equivariant data.
inline scx::SComplex acyclic_pair(std::mt19937& rng, const scx::Ring& r) {
  int g = std::uniform_int_distribution<int>(0, 3)(rng);
  scx::SComplex C(r, {{"p", g, std::nullopt, std::nullopt}, {"q", g - 1, std::nullopt, std::nullopt}});
  C.d(1, 0) = random_nonzero(rng, r);
  return C;
}

// C' = P C P^-1 for a random grading preserving unimodular P.
inline scx::SComplex conjugate(std::mt19937& rng, const scx::SComplex& C) {
  const std::size_t n = C.size();
  const scx::Ring& r = C.ring;
  scx::Matrix P = scx::Matrix::identity(r, n), Pi = P;
  std::uniform_int_distribution<std::size_t> pick(0, n ? n - 1 : 0);
  for (int s = 0; s < 4 && n > 1; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j || C.gens[i].gr != C.gens[j].gr) continue;
    scx::Poly c = random_poly(rng, r, 2);
    P.add_row(i, j, c);      // P <- E P
    Pi.add_col(j, i, -c);    // P^-1 <- P^-1 E^-1
  }
  scx::SComplex D = C;
  D.d = P * C.d * Pi;
  D.v = P * C.v * Pi;
  D.delta1 = C.delta1 * Pi;
  D.delta2 = P * C.delta2;
  return D;
}

// Random valid v-nilpotent complex with at most max_size generators and known h.
struct RandomComplex {
  scx::SComplex C;
  int h = 0;
};

inline RandomComplex random_complex(std::mt19937& rng, const scx::Ring& r, std::size_t max_size = 3) {
  int k = std::uniform_int_distribution<int>(-2, 2)(rng);
  if (std::abs(k) > static_cast<int>(max_size)) k = 0;
  scx::SComplex C = scx::SComplex::trivial(r);
  if (k > 0) C = tower(rng, r, k);
  if (k < 0) C = scx::dual(tower(rng, r, -k));
  if (C.size() + 2 <= max_size && std::uniform_int_distribution<int>(0, 1)(rng))
    C = direct_sum(C, acyclic_pair(rng, r));
  return {conjugate(rng, C), k};
}

inline scx::Matrix random_matrix(std::mt19937& rng, const scx::Ring& r, std::size_t m, std::size_t n) {
  scx::Matrix M(r, m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) M(i, j) = random_poly(rng, r, 2);
  return M;
}

inline bool is_smith(const scx::Matrix& D) {
  std::size_t k = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < D.rows(); ++i)
    for (std::size_t j = 0; j < D.cols(); ++j)
      if (i != j && !D(i, j).is_zero()) return false;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (D(i, i).is_zero()) {
      if (!D(i + 1, i + 1).is_zero()) return false;
      continue;
    }
    if (!D(i + 1, i + 1).is_zero() && !scx::divide(D(i + 1, i + 1), D(i, i))) return false;
  }
  return true;
}

// determinant by cofactor expansion, small matrices only
inline scx::Poly det(const scx::Matrix& M) {
  const std::size_t n = M.rows();
  if (n == 0) return scx::Poly::one(M.ring());
  scx::Poly s(M.ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (M(0, j).is_zero()) continue;
    scx::Matrix minor(M.ring(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = M(i, k);
    scx::Poly t = M(0, j) * det(minor);
    s = (j % 2) ? s - t : s + t;
  }
  return s;
}


}  // namespace testing
