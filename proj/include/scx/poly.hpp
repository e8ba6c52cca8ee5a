#pragma once
#include <gmpxx.h>

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scx/rational.hpp"
#include "scx/ring.hpp"

namespace scx {

// Exponent tuple; ordered lexicographically on (x, u, t).
struct Monomial {
  int x = 0;
  Rational u;
  std::array<int, 3> t{0, 0, 0};

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;
  Monomial operator*(const Monomial& o) const;
  bool is_one() const { return x == 0 && u.is_zero() && t == std::array<int, 3>{0, 0, 0}; }
};

// Element of one of the rings described by Ring. Immutable value type.
class Poly {
 public:
  using Terms = std::map<Monomial, mpq_class>;

  Poly() = default;  // zero of Z
  explicit Poly(const Ring& r) : ring_(r) {}
  Poly(const Ring& r, long long c);
  Poly(const Ring& r, Terms terms);

  static Poly zero(const Ring& r) { return Poly(r); }
  static Poly one(const Ring& r) { return Poly(r, 1); }
  static Poly monomial(const Ring& r, const mpq_class& c, const Monomial& m);
  // T-variable number idx (0 for T or T1).
  static Poly T(const Ring& r, int exp = 1, int idx = 0);
  static Poly U(const Ring& r, const Rational& exp);
  static Poly x(const Ring& r, int exp = 1);

  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  // Leading term under the canonical order.
  const Monomial& lead_monomial() const;
  const mpq_class& lead_coeff() const;
  mpq_class constant_coeff() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const mpq_class& c) const;
  Poly shifted(const Monomial& m) const;
  Poly pow(long long n) const;

  bool operator==(const Poly& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::string str() const;
  static Poly parse(const Ring& r, const std::string& s);

 private:
  void normalize();
  Ring ring_;
  Terms terms_;
};

using LaurentPoly = Poly;

enum class ArithOp { Add, Mul, Neg };
// Checked arithmetic; throws RingMismatch when the rings differ.
Poly ring_arith(const Poly& a, const Poly& b, ArithOp op);

bool is_unit(const Poly& a);
// Inverse of a unit; throws DomainError otherwise.
Poly unit_inverse(const Poly& a);
// Exact quotient a/b when b divides a; nullopt otherwise. Throws on b = 0.
std::optional<Poly> divide(const Poly& a, const Poly& b);

// Variable assignment for base change. Keys: "U", "T", "T1", "T2", "T3", "x".
using VarMap = std::map<std::string, Poly>;

// Substitutes variables and maps coefficients through the canonical map from the
// source's coefficient base. A variable without an entry is kept when the target
// ring has it.
Poly base_change(const Poly& p, const Ring& target, const VarMap& map);

// Parses "U=1,T=x" style assignments with images in the target ring.
VarMap parse_varmap(const Ring& target, const std::string& spec);

// P = T1T2T3 + T1^-1T2^-1T3 + T1^-1T2T3^-1 + T1T2^-1T3^-1 in S_BN.
Poly bn_P();

}  // namespace scx
