#pragma once
#include <optional>
#include <vector>

#include "scx/matrix.hpp"

namespace scx {

// Division with remainder in a Euclidean ring: a = q*b + r with norm(r) < norm(b).
struct DivMod {
  Poly q, r;
};
DivMod euclid_divmod(const Poly& a, const Poly& b);
// Euclidean norm key. Z: |a|; fields: 0; F[T^±1]: max T-degree minus min T-degree.
mpz_class euclid_norm(const Poly& a);
// Unit u such that u*a is the canonical associate (positive, monic with lowest
// T-exponent 0, or 1 in a field). Requires a != 0.
Poly canonical_unit(const Poly& a);
Poly canonical_associate(const Poly& a);
// gcd up to units, normalized by canonical_associate.
Poly euclid_gcd(const Poly& a, const Poly& b);

struct SmithResult {
  Matrix D, U_left, V_right;
  std::size_t rank = 0;
};
// U_left * M * V_right = D with d1 | d2 | ... and zero entries last.
// Throws UnsupportedRing outside Z, fields and F[T^±1].
SmithResult smith_normal_form(const Matrix& M);

// Rank over the fraction field (fraction-free elimination). Any ring.
std::size_t rank(const Matrix& M);

// Columns generate ker M. Exact over Euclidean rings; elsewhere computed by
// unit-pivot elimination, throwing UnsupportedRing when that does not decide.
Matrix kernel_basis(const Matrix& M);

// Some s with M*s = b, or nullopt. Euclidean rings only.
std::optional<Matrix> solve(const Matrix& M, const Matrix& b);

struct HomologySummary {
  std::size_t free_rank = 0;
  std::vector<Poly> torsion;
};
// Homology at the middle of  . --d_in--> C --d_out--> .
HomologySummary homology(const Matrix& d_in, const Matrix& d_out);

}  // namespace scx
