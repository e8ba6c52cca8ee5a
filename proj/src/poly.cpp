#include "scx/poly.hpp"

#include <cctype>
#include <sstream>

#include "scx/error.hpp"

namespace scx {

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  m.x = x + o.x;
  m.u = u + o.u;
  for (int i = 0; i < 3; ++i) m.t[i] = t[i] + o.t[i];
  return m;
}

namespace {

void check_monomial(const Ring& r, const Monomial& m) {
  if (m.x < 0) throw DomainError("negative x-exponent in " + r.name());
  if (m.x != 0 && !r.has_x() && !r.is_f4()) throw DomainError("x not in ring " + r.name());
  if (!m.u.is_zero()) {
    if (!r.has_u()) throw DomainError("U not in ring " + r.name());
    if (r.u_den() % m.u.den() != 0)
      throw DomainError("U-exponent " + m.u.str() + " not allowed in " + r.name());
  }
  for (int i = r.num_t(); i < 3; ++i)
    if (m.t[i] != 0) throw DomainError("T-variable not in ring " + r.name());
}

mpq_class reduce_coeff(Coeff c, const mpq_class& v) {
  switch (c) {
    case Coeff::QQ:
      return v;
    case Coeff::ZZ:
      if (v.get_den() != 1) throw DomainError("non-integer coefficient " + v.get_str());
      return v;
    case Coeff::GF2: {
      if (v.get_den() % 2 == 0) throw DomainError("coefficient not defined mod 2: " + v.get_str());
      mpz_class n = v.get_num() % 2;
      return mpq_class(n == 0 ? 0 : 1);
    }
  }
  return v;
}

bool coeff_is_unit(Coeff c, const mpq_class& v) {
  if (v == 0) return false;
  if (c == Coeff::ZZ) return v == 1 || v == -1;
  return true;
}

}  // namespace

Poly::Poly(const Ring& r, long long c) : ring_(r) {
  if (c != 0) terms_[Monomial{}] = mpq_class(static_cast<signed long>(c));
  normalize();
}

Poly::Poly(const Ring& r, Terms terms) : ring_(r), terms_(std::move(terms)) { normalize(); }

Poly Poly::monomial(const Ring& r, const mpq_class& c, const Monomial& m) {
  Terms t;
  t[m] = c;
  return Poly(r, std::move(t));
}

Poly Poly::T(const Ring& r, int exp, int idx) {
  Monomial m;
  m.t[idx] = exp;
  return monomial(r, 1, m);
}

Poly Poly::U(const Ring& r, const Rational& exp) {
  Monomial m;
  m.u = exp;
  return monomial(r, 1, m);
}

Poly Poly::x(const Ring& r, int exp) {
  Monomial m;
  m.x = exp;
  return monomial(r, 1, m);
}

void Poly::normalize() {
  Terms out;
  for (auto& [m, c] : terms_) {
    if (c == 0) continue;
    Monomial mm = m;
    if (ring_.is_f4()) {
      if (!mm.u.is_zero() || mm.t != std::array<int, 3>{0, 0, 0} || mm.x < 0)
        throw DomainError("bad F4 element");
      int k = mm.x % 3;
      mpq_class cc = reduce_coeff(Coeff::GF2, c);
      if (cc == 0) continue;
      // x^2 = x + 1
      std::vector<int> parts = k == 2 ? std::vector<int>{1, 0} : std::vector<int>{k};
      for (int e : parts) {
        Monomial q;
        q.x = e;
        out[q] += 1;
      }
      continue;
    }
    check_monomial(ring_, mm);
    out[mm] += c;
  }
  terms_.clear();
  for (auto& [m, c] : out) {
    mpq_class cc = reduce_coeff(ring_.coeff(), c);
    if (cc != 0) terms_.emplace(m, cc);
  }
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

const Monomial& Poly::lead_monomial() const {
  if (terms_.empty()) throw DomainError("lead of zero");
  return terms_.rbegin()->first;
}

const mpq_class& Poly::lead_coeff() const {
  if (terms_.empty()) throw DomainError("lead of zero");
  return terms_.rbegin()->second;
}

mpq_class Poly::constant_coeff() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

static void require_same(const Ring& a, const Ring& b) {
  if (a != b) throw RingMismatch("ring mismatch: " + a.name() + " vs " + b.name());
}

Poly Poly::operator+(const Poly& o) const {
  require_same(ring_, o.ring_);
  Terms t = terms_;
  for (auto& [m, c] : o.terms_) t[m] += c;
  return Poly(ring_, std::move(t));
}

Poly Poly::operator-() const {
  Terms t = terms_;
  for (auto& [m, c] : t) c = -c;
  return Poly(ring_, std::move(t));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  require_same(ring_, o.ring_);
  Terms t;
  for (auto& [m1, c1] : terms_)
    for (auto& [m2, c2] : o.terms_) t[m1 * m2] += c1 * c2;
  return Poly(ring_, std::move(t));
}

Poly Poly::scaled(const mpq_class& c) const {
  Terms t = terms_;
  for (auto& [m, v] : t) v *= c;
  return Poly(ring_, std::move(t));
}

Poly Poly::shifted(const Monomial& s) const {
  Terms t;
  for (auto& [m, c] : terms_) t[m * s] = c;
  return Poly(ring_, std::move(t));
}

Poly Poly::pow(long long n) const {
  if (n < 0) return unit_inverse(*this).pow(-n);
  Poly r = one(ring_), b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

// ---- text form ------------------------------------------------------------

namespace {

std::string var_power(const std::string& name, long long e) {
  if (e == 1) return name;
  return name + "^" + std::to_string(e);
}

std::string monomial_str(const Ring& r, const Monomial& m) {
  std::vector<std::string> f;
  if (!m.u.is_zero()) {
    if (m.u.is_integer())
      f.push_back(var_power("U", m.u.num()));
    else
      f.push_back("U^{" + m.u.str() + "}");
  }
  if (r.num_t() == 1) {
    if (m.t[0] != 0) f.push_back(var_power("T", m.t[0]));
  } else {
    for (int i = 0; i < 3; ++i)
      if (m.t[i] != 0) f.push_back(var_power("T" + std::to_string(i + 1), m.t[i]));
  }
  if (m.x != 0) f.push_back(var_power("x", m.x));
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) s += (i ? "*" : "") + f[i];
  return s;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    mpq_class a = abs(c);
    bool neg = c < 0;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    std::string ms = monomial_str(ring_, m);
    if (ms.empty())
      s += a.get_str();
    else if (a == 1)
      s += ms;
    else
      s += a.get_str() + "*" + ms;
  }
  return s;
}

namespace {

struct Parser {
  const Ring& ring;
  std::string s;
  size_t i = 0;

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial '" + s + "': " + why + " at position " + std::to_string(i));
  }
  bool eof() const { return i >= s.size(); }
  char peek() const { return eof() ? '\0' : s[i]; }

  std::string digits() {
    size_t st = i;
    while (!eof() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (st == i) fail("expected digits");
    return s.substr(st, i - st);
  }

  long long signed_int() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++i;
    }
    std::string d = digits();
    long long v = std::stoll(d);
    return neg ? -v : v;
  }

  Rational exponent() {
    if (peek() == '{') {
      ++i;
      size_t st = i;
      while (!eof() && s[i] != '}') ++i;
      if (eof()) fail("unterminated exponent");
      Rational r = Rational::parse(s.substr(st, i - st));
      ++i;
      return r;
    }
    return Rational(signed_int());
  }

  // factor: number | variable [^ exponent]
  void factor(mpq_class& c, Monomial& m) {
    char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = digits();
      if (peek() == '/') {
        ++i;
        num += "/" + digits();
      }
      c *= mpq_class(num);
      return;
    }
    std::string name;
    if (ch == 'U' || ch == 'x') {
      name = ch;
      ++i;
    } else if (ch == 'T') {
      name = "T";
      ++i;
      if (std::isdigit(static_cast<unsigned char>(peek()))) name += s[i++];
    } else {
      fail("unexpected character");
    }
    Rational e(1);
    if (peek() == '^') {
      ++i;
      e = exponent();
    }
    if (name == "U") {
      m.u += e;
      return;
    }
    if (!e.is_integer()) fail("fractional exponent on " + name);
    int k = static_cast<int>(e.num());
    if (name == "x") {
      m.x += k;
    } else if (name == "T") {
      if (ring.num_t() != 1) fail("T not in ring");
      m.t[0] += k;
    } else {
      int idx = name[1] - '1';
      if (ring.num_t() != 3 || idx < 0 || idx > 2) fail(name + " not in ring");
      m.t[idx] += k;
    }
  }

  Poly parse() {
    std::string t;
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    s = t;
    if (s.empty()) fail("empty");
    Poly::Terms terms;
    bool first = true;
    while (!eof()) {
      mpq_class sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++i;
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      mpq_class c = sign;
      Monomial m;
      factor(c, m);
      while (peek() == '*') {
        ++i;
        factor(c, m);
      }
      if (!eof() && peek() != '+' && peek() != '-') fail("unexpected character");
      terms[m] += c;
    }
    try {
      return Poly(ring, std::move(terms));
    } catch (const DomainError& e) {
      throw ParseError("polynomial '" + s + "': " + e.what());
    }
  }
};

}  // namespace

Poly Poly::parse(const Ring& r, const std::string& s) {
  Parser p{r, s};
  try {
    return p.parse();
  } catch (const std::logic_error&) {
    throw ParseError("polynomial '" + s + "': bad number");
  }
}

// ---- checked arithmetic, units, division ------------------------------------

Poly ring_arith(const Poly& a, const Poly& b, ArithOp op) {
  require_same(a.ring(), b.ring());
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Neg: return -a;
  }
  return a;
}

namespace {

// Nonzero elements of F4 in the basis (1, x): index = c0 + 2*c1.
int f4_code(const Poly& a) {
  int code = 0;
  for (auto& [m, c] : a.terms()) code |= (m.x == 0 ? 1 : 2);
  return code;
}

Poly f4_from_code(int code) {
  Poly::Terms t;
  if (code & 1) t[Monomial{}] = 1;
  if (code & 2) {
    Monomial m;
    m.x = 1;
    t[m] = 1;
  }
  return Poly(Ring::F4(), std::move(t));
}

}  // namespace

bool is_unit(const Poly& a) {
  if (a.is_zero()) return false;
  if (a.ring().is_f4()) return true;
  if (a.size() != 1) return false;
  const auto& [m, c] = *a.terms().begin();
  if (m.x != 0) return false;
  return coeff_is_unit(a.ring().coeff(), c);
}

Poly unit_inverse(const Poly& a) {
  if (!is_unit(a)) throw DomainError("not a unit: " + a.str());
  if (a.ring().is_f4()) {
    // 1 -> 1, x -> x+1, x+1 -> x
    static const int inv[4] = {0, 1, 3, 2};
    return f4_from_code(inv[f4_code(a)]);
  }
  const auto& [m, c] = *a.terms().begin();
  Monomial mi;
  mi.u = -m.u;
  for (int i = 0; i < 3; ++i) mi.t[i] = -m.t[i];
  return Poly::monomial(a.ring(), 1 / c, mi);
}

std::optional<Poly> divide(const Poly& a, const Poly& b) {
  require_same(a.ring(), b.ring());
  if (b.is_zero()) throw DomainError("division by zero");
  if (a.is_zero()) return Poly(a.ring());
  const Ring& r = a.ring();
  if (r.is_f4()) {
    static const int inv[4] = {0, 1, 3, 2};
    return a * f4_from_code(inv[f4_code(b)]);
  }
  // Bounding box of exponents of the quotient: Newton polytopes add.
  auto coords = [](const Monomial& m) {
    std::array<Rational, 5> c{Rational(m.x), m.u, Rational(m.t[0]), Rational(m.t[1]),
                              Rational(m.t[2])};
    return c;
  };
  auto bounds = [&](const Poly& p, std::array<Rational, 5>& lo, std::array<Rational, 5>& hi) {
    bool first = true;
    for (auto& [m, c] : p.terms()) {
      auto v = coords(m);
      for (int k = 0; k < 5; ++k) {
        if (first || v[k] < lo[k]) lo[k] = v[k];
        if (first || v[k] > hi[k]) hi[k] = v[k];
      }
      first = false;
    }
  };
  std::array<Rational, 5> alo, ahi, blo, bhi;
  bounds(a, alo, ahi);
  bounds(b, blo, bhi);
  const Monomial& lb = b.lead_monomial();
  const mpq_class& lc = b.lead_coeff();
  Poly rem = a;
  Poly::Terms q;
  while (!rem.is_zero()) {
    const Monomial& lm = rem.lead_monomial();
    Monomial qm;
    qm.x = lm.x - lb.x;
    qm.u = lm.u - lb.u;
    for (int k = 0; k < 3; ++k) qm.t[k] = lm.t[k] - lb.t[k];
    if (qm.x < 0) return std::nullopt;
    auto v = coords(qm);
    for (int k = 0; k < 5; ++k)
      if (v[k] < alo[k] - blo[k] || v[k] > ahi[k] - bhi[k]) return std::nullopt;
    mpq_class qc = rem.lead_coeff() / lc;
    if (r.coeff() == Coeff::ZZ && qc.get_den() != 1) return std::nullopt;
    if (r.u_den() % qm.u.den() != 0) return std::nullopt;
    Poly term = Poly::monomial(r, qc, qm);
    q[qm] += qc;
    rem = rem - term * b;
  }
  return Poly(r, std::move(q));
}

// ---- base change ------------------------------------------------------------

namespace {

mpq_class map_coeff(Coeff from, const Ring& to, const mpq_class& c) {
  if (from == Coeff::GF2 && to.coeff() != Coeff::GF2)
    throw DomainError("no ring map from characteristic 2 to " + to.name());
  if (from == Coeff::QQ && to.coeff() == Coeff::ZZ && c.get_den() != 1)
    throw DomainError("rational coefficient has no image in " + to.name());
  return c;
}

const Poly* lookup(const VarMap& m, const std::string& k) {
  auto it = m.find(k);
  return it == m.end() ? nullptr : &it->second;
}

Poly image_of_var(const std::string& name, const VarMap& map, const Ring& target) {
  if (const Poly* p = lookup(map, name)) {
    if (p->ring() != target) throw RingMismatch("image of " + name + " not in " + target.name());
    return *p;
  }
  bool ok = false;
  if (name == "U") ok = target.has_u();
  if (name == "T") ok = target.num_t() == 1;
  if (name.size() == 2 && name[0] == 'T') ok = target.num_t() == 3;
  if (name == "x") ok = target.has_x() || target.is_f4();
  if (!ok) throw DomainError("no image given for variable " + name);
  if (name == "U") return Poly::U(target, Rational(1));
  if (name == "T") return Poly::T(target);
  if (name == "x") return Poly::x(target);
  return Poly::T(target, 1, name[1] - '1');
}

// g^e for rational e: integral powers need g a unit when e < 0; fractional powers
// need g to be a bare monomial whose exponents scale into the target ring.
Poly rational_power(const Poly& g, const Rational& e, const std::string& name) {
  if (e.is_integer()) return g.pow(e.num());
  if (g.is_one()) return g;
  if (g.size() != 1 || g.terms().begin()->second != 1)
    throw DomainError("fractional power of " + name + " needs a monomial image");
  const Monomial& m = g.terms().begin()->first;
  Monomial out;
  Rational xe = Rational(m.x) * e;
  if (!xe.is_integer()) throw DomainError("fractional power of " + name + " not in target");
  out.x = static_cast<int>(xe.num());
  out.u = m.u * e;
  for (int k = 0; k < 3; ++k) {
    Rational te = Rational(m.t[k]) * e;
    if (!te.is_integer()) throw DomainError("fractional power of " + name + " not in target");
    out.t[k] = static_cast<int>(te.num());
  }
  return Poly::monomial(g.ring(), 1, out);
}

}  // namespace

Poly base_change(const Poly& p, const Ring& target, const VarMap& map) {
  const Ring& src = p.ring();
  Poly out(target);
  if (p.is_zero()) return out;
  std::map<std::string, Poly> cache;
  auto img = [&](const std::string& n) -> const Poly& {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, image_of_var(n, map, target)).first;
    return it->second;
  };
  std::vector<std::string> tnames =
      src.num_t() == 3 ? std::vector<std::string>{"T1", "T2", "T3"} : std::vector<std::string>{"T"};
  const bool src_f4 = src.is_f4();
  for (auto& [m, c] : p.terms()) {
    Poly term = Poly::monomial(target, map_coeff(src.coeff(), target, c), Monomial{});
    if (!m.u.is_zero()) term = term * rational_power(img("U"), m.u, "U");
    for (int k = 0; k < src.num_t(); ++k)
      if (m.t[k] != 0) term = term * img(tnames[k]).pow(m.t[k]);
    if (m.x != 0) {
      if (src_f4) throw DomainError("base change out of F4 is not supported");
      term = term * img("x").pow(m.x);
    }
    out += term;
  }
  return out;
}

VarMap parse_varmap(const Ring& target, const std::string& spec) {
  VarMap m;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("bad assignment: " + item);
    std::string k = item.substr(0, eq);
    while (!k.empty() && std::isspace(static_cast<unsigned char>(k.back()))) k.pop_back();
    while (!k.empty() && std::isspace(static_cast<unsigned char>(k.front()))) k.erase(0, 1);
    if (k != "U" && k != "T" && k != "T1" && k != "T2" && k != "T3" && k != "x")
      throw ParseError("unknown variable in assignment: " + k);
    m.insert_or_assign(k, Poly::parse(target, item.substr(eq + 1)));
  }
  return m;
}

Poly bn_P() {
  Ring r = Ring::sbn();
  auto mono = [&](int a, int b, int c) {
    Monomial m;
    m.t = {a, b, c};
    return Poly::monomial(r, 1, m);
  };
  return mono(1, 1, 1) + mono(-1, -1, 1) + mono(-1, 1, -1) + mono(1, -1, -1);
}

}  // namespace scx
