#include "scx/rational.hpp"

#include <numeric>

#include "scx/error.hpp"

namespace scx {

namespace {

long long narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw DomainError("rational overflow");
  return static_cast<long long>(v);
}

Rational make(__int128 n, __int128 d) {
  if (d == 0) throw DomainError("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n, b = d;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    n /= a;
    d /= a;
  }
  return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw DomainError("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num_ = n;
  den_ = d;
}

long long Rational::floor() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

long long Rational::ceil() const { return -(-*this).floor(); }

Rational Rational::frac_pos() const {
  Rational r = *this - Rational(floor());
  if (r.is_zero()) return Rational(1);
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return make(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
              static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  return make(static_cast<__int128>(num_) * o.num_, static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw DomainError("division by zero rational");
  return make(static_cast<__int128>(num_) * o.den_, static_cast<__int128>(den_) * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  __int128 l = static_cast<__int128>(num_) * o.den_;
  __int128 r = static_cast<__int128>(o.num_) * den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str(bool always_fraction) const {
  if (den_ == 1 && !always_fraction) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
  try {
    size_t pos = 0;
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      long long n = std::stoll(s, &pos);
      if (pos != s.size()) throw ParseError("bad rational: " + s);
      return Rational(n);
    }
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    long long n = std::stoll(a, &pos);
    if (pos != a.size()) throw ParseError("bad rational: " + s);
    long long d = std::stoll(b, &pos);
    if (pos != b.size() || d == 0) throw ParseError("bad rational: " + s);
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw ParseError("bad rational: " + s);
  }
}

}  // namespace scx
