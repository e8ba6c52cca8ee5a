#pragma once
#include <memory>
#include <string>

namespace scx {

// Coefficient base of a ring: integers, rationals or the field with two elements.
enum class Coeff { ZZ, QQ, GF2 };

// Descriptor of a coefficient ring.
//   Z, Q, F2            scalars
//   F4                  F2[x]/(x^2+x+1), elements stored as polynomials in x of degree <= 1
//   Z_LAURENT_T         Z[T^±1]
//   F_LAURENT_T         F[T^±1] with F = Q or F2
//   R_UNIVERSAL(N)      Z[U^{±1/N}, T^±1]
//   S_BN                F2[T1^±1, T2^±1, T3^±1]
//   POLY_X(inner)       inner[x]
class Ring {
 public:
  enum class Tag { Z, Q, F2, F4, Z_LAURENT_T, F_LAURENT_T, R_UNIVERSAL, S_BN, POLY_X };

  Ring() = default;  // Z
  static Ring Z() { return Ring(Tag::Z, Coeff::ZZ); }
  static Ring Q() { return Ring(Tag::Q, Coeff::QQ); }
  static Ring F2() { return Ring(Tag::F2, Coeff::GF2); }
  static Ring F4() { return Ring(Tag::F4, Coeff::GF2); }
  static Ring ZT() { return Ring(Tag::Z_LAURENT_T, Coeff::ZZ); }
  static Ring FT(Coeff field);
  static Ring universal(long long N);
  static Ring sbn() { return Ring(Tag::S_BN, Coeff::GF2); }
  static Ring poly_x(const Ring& inner);

  Tag tag() const { return tag_; }
  Coeff coeff() const { return coeff_; }
  long long u_den() const { return N_; }
  const Ring* inner() const { return inner_.get(); }

  // Number of T-type variables (0, 1 or 3 for S_BN).
  int num_t() const;
  bool has_u() const;
  bool has_x() const { return tag_ == Tag::POLY_X; }
  bool is_f4() const { return tag_ == Tag::F4; }
  bool is_field() const;
  // Z, fields, and F[T^±1]: the rings where Smith normal form is available.
  bool is_euclidean() const;
  bool is_laurent_field_t() const { return tag_ == Tag::F_LAURENT_T; }
  int characteristic() const { return coeff_ == Coeff::GF2 ? 2 : 0; }

  std::string name() const;
  static Ring parse(const std::string& s);

  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  Ring(Tag t, Coeff c) : tag_(t), coeff_(c) {}
  Tag tag_ = Tag::Z;
  Coeff coeff_ = Coeff::ZZ;
  long long N_ = 1;
  std::shared_ptr<const Ring> inner_;
};

}  // namespace scx
