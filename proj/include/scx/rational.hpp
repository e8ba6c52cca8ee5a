#pragma once
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

namespace scx {

// Small exact rational in lowest terms, denominator > 0.
// Used for U-exponents and instanton gradings, which stay tiny.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  long long floor() const;
  long long ceil() const;
  // Representative of this mod 1 in (0,1].
  Rational frac_pos() const;

  Rational operator-() const { return Rational(-num_, den_); }
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  // "a/b"; integers print as "a/1" when always_fraction is set.
  std::string str(bool always_fraction = false) const;
  static Rational parse(const std::string& s);

 private:
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace scx

template <>
struct std::hash<scx::Rational> {
  size_t operator()(const scx::Rational& r) const noexcept {
    return std::hash<long long>()(r.num()) * 1000003u ^ std::hash<long long>()(r.den());
  }
};
