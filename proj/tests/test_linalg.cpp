#include <doctest.h>

#include "scx/error.hpp"
#include "scx/linalg.hpp"
#include "support.hpp"

using namespace scx;

using testing::det;
using testing::is_smith;
using testing::random_matrix;

TEST_CASE("smith normal form of a small integer matrix") {
  Ring Z = Ring::Z();
  auto r = smith_normal_form(Matrix::from_ints(Z, {{2, 4}, {6, 8}}));
  CHECK(r.D == Matrix::from_ints(Z, {{2, 0}, {0, 4}}));
  CHECK(r.rank == 2);
}

TEST_CASE("smith normal form certificate on random matrices") {
  std::mt19937 rng(7);
  for (Ring R : {Ring::Z(), Ring::FT(Coeff::GF2), Ring::Q(), Ring::FT(Coeff::QQ)}) {
    for (int t = 0; t < 40; ++t) {
      std::size_t m = 1 + rng() % 4, n = 1 + rng() % 4;
      Matrix M = random_matrix(rng, R, m, n);
      auto s = smith_normal_form(M);
      CHECK(s.U_left * M * s.V_right == s.D);
      CHECK(is_smith(s.D));
      CHECK(is_unit(det(s.U_left)));
      CHECK(is_unit(det(s.V_right)));
      CHECK(s.rank == rank(M));
    }
  }
}

TEST_CASE("smith normal form is refused on non-euclidean rings") {
  Ring R = Ring::ZT();
  Matrix M = Matrix::from_rows(R, {{Poly(R, 2), Poly::T(R) + Poly(R, 1)}});
  CHECK_THROWS_AS(smith_normal_form(M), UnsupportedRing);
}

TEST_CASE("euclidean division over F2[T^-1,T]") {
  Ring R = Ring::FT(Coeff::GF2);
  Poly a = Poly::T(R, 3) + Poly::T(R, -1), b = Poly::T(R, 1) + Poly::one(R);
  auto dm = euclid_divmod(a, b);
  CHECK(dm.q * b + dm.r == a);
  CHECK(euclid_norm(dm.r) < euclid_norm(b));
  CHECK(euclid_gcd(Poly::T(R, 2) + Poly::one(R), b) == b);
}

TEST_CASE("rank over any ring") {
  Ring R = Ring::universal(3);
  Poly a = Poly::U(R, Rational(1, 3)) * (Poly::T(R, 2) - Poly::T(R, -2));
  Matrix M = Matrix::from_rows(R, {{a, a * a}, {Poly(R, 2) * a, Poly(R, 2) * a * a}});
  CHECK(rank(M) == 1);
  CHECK(rank(Matrix(R, 3, 2)) == 0);
}

TEST_CASE("kernel basis spans the kernel") {
  std::mt19937 rng(11);
  for (Ring R : {Ring::Z(), Ring::FT(Coeff::GF2), Ring::Q()}) {
    for (int t = 0; t < 30; ++t) {
      std::size_t m = 1 + rng() % 3, n = 1 + rng() % 4;
      Matrix M = random_matrix(rng, R, m, n);
      Matrix K = kernel_basis(M);
      CHECK(K.rows() == n);
      CHECK((M * K).is_zero());
      CHECK(K.cols() == n - rank(M));
    }
  }
}

TEST_CASE("kernel over Z[T^-1,T] by unit pivots") {
  Ring R = Ring::ZT();
  Poly c = Poly::T(R, 2) - Poly::T(R, -2);
  Matrix M = Matrix::from_rows(R, {{c, Poly::one(R), Poly(R)}});
  Matrix K = kernel_basis(M);
  CHECK(K.cols() == 2);
  CHECK((M * K).is_zero());
}

TEST_CASE("solve over euclidean rings") {
  Ring Z = Ring::Z();
  Matrix M = Matrix::from_ints(Z, {{2, 0}, {0, 3}});
  auto s = solve(M, Matrix::from_ints(Z, {{4}, {9}}));
  REQUIRE(s);
  CHECK(M * *s == Matrix::from_ints(Z, {{4}, {9}}));
  CHECK(!solve(M, Matrix::from_ints(Z, {{1}, {0}})));
}

TEST_CASE("homology with torsion") {
  Ring Z = Ring::Z();
  Matrix din = Matrix::from_ints(Z, {{2}, {0}});
  Matrix dout = Matrix::from_ints(Z, {{0, 0}});
  auto h = homology(din, dout);
  CHECK(h.free_rank == 1);
  REQUIRE(h.torsion.size() == 1);
  CHECK(h.torsion[0] == Poly(Z, 2));
  CHECK_THROWS(homology(din, Matrix::from_ints(Z, {{1, 0}})));
}
