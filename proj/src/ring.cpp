#include "scx/ring.hpp"

#include "scx/error.hpp"

namespace scx {

Ring Ring::FT(Coeff field) {
  if (field == Coeff::ZZ) return ZT();
  return Ring(Tag::F_LAURENT_T, field);
}

Ring Ring::universal(long long N) {
  if (N < 1) throw DomainError("universal ring needs N >= 1");
  Ring r(Tag::R_UNIVERSAL, Coeff::ZZ);
  r.N_ = N;
  return r;
}

Ring Ring::poly_x(const Ring& inner) {
  if (inner.tag_ == Tag::POLY_X || inner.tag_ == Tag::F4)
    throw UnsupportedRing("cannot adjoin x to " + inner.name());
  Ring r(Tag::POLY_X, inner.coeff_);
  r.N_ = inner.N_;
  r.inner_ = std::make_shared<const Ring>(inner);
  return r;
}

int Ring::num_t() const {
  switch (tag_) {
    case Tag::Z_LAURENT_T:
    case Tag::F_LAURENT_T:
    case Tag::R_UNIVERSAL:
      return 1;
    case Tag::S_BN:
      return 3;
    case Tag::POLY_X:
      return inner_->num_t();
    default:
      return 0;
  }
}

bool Ring::has_u() const {
  if (tag_ == Tag::R_UNIVERSAL) return true;
  if (tag_ == Tag::POLY_X) return inner_->has_u();
  return false;
}

bool Ring::is_field() const {
  return tag_ == Tag::Q || tag_ == Tag::F2 || tag_ == Tag::F4;
}

bool Ring::is_euclidean() const {
  return tag_ == Tag::Z || is_field() || tag_ == Tag::F_LAURENT_T;
}

std::string Ring::name() const {
  switch (tag_) {
    case Tag::Z: return "Z";
    case Tag::Q: return "Q";
    case Tag::F2: return "F2";
    case Tag::F4: return "F4";
    case Tag::Z_LAURENT_T: return "Z[T]";
    case Tag::F_LAURENT_T: return coeff_ == Coeff::QQ ? "Q[T]" : "F2[T]";
    case Tag::R_UNIVERSAL: return "R_UNIVERSAL(" + std::to_string(N_) + ")";
    case Tag::S_BN: return "S_BN";
    case Tag::POLY_X: return "POLY_X(" + inner_->name() + ")";
  }
  return "?";
}

Ring Ring::parse(const std::string& s) {
  if (s == "Z") return Z();
  if (s == "Q") return Q();
  if (s == "F2") return F2();
  if (s == "F4") return F4();
  if (s == "Z[T]") return ZT();
  if (s == "Q[T]") return FT(Coeff::QQ);
  if (s == "F2[T]") return FT(Coeff::GF2);
  if (s == "S_BN") return sbn();
  const std::string u = "R_UNIVERSAL(", px = "POLY_X(";
  if (s.size() > u.size() && s.compare(0, u.size(), u) == 0 && s.back() == ')') {
    try {
      return universal(std::stoll(s.substr(u.size(), s.size() - u.size() - 1)));
    } catch (const std::logic_error&) {
      throw ParseError("bad ring: " + s);
    }
  }
  if (s.size() > px.size() && s.compare(0, px.size(), px) == 0 && s.back() == ')')
    return poly_x(parse(s.substr(px.size(), s.size() - px.size() - 1)));
  throw ParseError("unknown ring: " + s);
}

bool Ring::operator==(const Ring& o) const {
  if (tag_ != o.tag_ || coeff_ != o.coeff_) return false;
  if (tag_ == Tag::R_UNIVERSAL) return N_ == o.N_;
  if (tag_ == Tag::POLY_X) return *inner_ == *o.inner_;
  return true;
}

}  // namespace scx
