#include "scx/scomplex.hpp"

#include <sstream>

#include "scx/error.hpp"

namespace scx {

SComplex::SComplex(const Ring& r, std::vector<Generator> g)
    : ring(r), gens(std::move(g)) {
  const std::size_t n = gens.size();
  d = Matrix(r, n, n);
  v = Matrix(r, n, n);
  delta1 = Matrix(r, 1, n);
  delta2 = Matrix(r, n, 1);
  for (auto& x : gens) x.gr = mod4(x.gr);
}

bool SComplex::i_graded() const {
  for (auto& g : gens)
    if (!g.deg_I) return false;
  return true;
}

std::vector<int> SComplex::gradings() const {
  std::vector<int> out;
  for (auto& g : gens) out.push_back(g.gr);
  return out;
}

Matrix SComplex::tilde() const {
  const std::size_t n = size();
  Matrix t(ring, 2 * n + 1, 2 * n + 1);
  t.put(0, 0, d);
  t.put(n, 0, v);
  t.put(n, n, -d);
  t.put(n, 2 * n, delta2);
  t.put(2 * n, 0, delta1);
  return t;
}

std::vector<int> SComplex::tilde_gradings() const {
  std::vector<int> out;
  for (auto& g : gens) out.push_back(g.gr);
  for (auto& g : gens) out.push_back(mod4(g.gr + 1));
  out.push_back(0);
  return out;
}

Matrix SComplex::chi() const {
  const std::size_t n = size();
  Matrix x(ring, 2 * n + 1, 2 * n + 1);
  for (std::size_t i = 0; i < n; ++i) x(n + i, i) = Poly::one(ring);
  return x;
}

bool SComplex::operator==(const SComplex& o) const {
  return ring == o.ring && gens == o.gens && d == o.d && v == o.v && delta1 == o.delta1 &&
         delta2 == o.delta2 && v_trusted == o.v_trusted;
}

bool ValidationReport::has(const std::string& relation) const {
  for (auto& i : issues)
    if (i.relation == relation) return true;
  return false;
}

std::string ValidationReport::str() const {
  if (ok()) return "ok";
  std::string s;
  for (auto& i : issues) s += i.relation + ": " + i.detail + "\n";
  return s;
}

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

// First nonzero entry of m, described.
void zero_check(ValidationReport& rep, const std::string& rel, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) {
        rep.issues.push_back({rel, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + m(i, j).str()});
        return;
      }
}

// Level-0 condition for one U-exponent a on a map from g (deg ds) to h (deg dt).
bool level_ok(const Rational& a, const Rational& ds, const Rational& dt, bool strict) {
  if (strict ? !(a > Rational(0)) : a < Rational(0)) return false;
  Rational diff = a - (ds - dt);
  return diff.is_integer();
}

void level_check(ValidationReport& rep, const std::string& rel, const Matrix& m,
                 const std::vector<Rational>& src, const std::vector<Rational>& dst, bool strict) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (auto& [mono, c] : m(i, j).terms())
        if (!level_ok(mono.u, src[j], dst[i], strict)) {
          rep.issues.push_back({"level(" + rel + ")", "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                          ") has U-exponent " + mono.u.str()});
          return;
        }
}

}  // namespace

ValidationReport validate(const SComplex& C) {
  ValidationReport rep;
  const std::size_t n = C.size();
  auto shape_ok = [&](const char* nm, const Matrix& m, std::size_t r, std::size_t c) {
    if (m.rows() != r || m.cols() != c) {
      rep.issues.push_back({"shape", std::string(nm) + " is " + shape(m)});
      return false;
    }
    if (m.ring() != C.ring) {
      rep.issues.push_back({"ring", std::string(nm) + " is over " + m.ring().name()});
      return false;
    }
    return true;
  };
  bool ok = shape_ok("d", C.d, n, n) & shape_ok("v", C.v, n, n) & shape_ok("delta1", C.delta1, 1, n) &
            shape_ok("delta2", C.delta2, n, 1);
  if (!ok) return rep;

  zero_check(rep, "d^2", C.d * C.d);
  zero_check(rep, "delta1 d", C.delta1 * C.d);
  zero_check(rep, "d delta2", C.d * C.delta2);
  zero_check(rep, "dv - vd - delta2 delta1", C.d * C.v - C.v * C.d - C.delta2 * C.delta1);

  auto gr = C.gradings();
  auto grade = [&](const char* nm, const Matrix& m, auto want) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!m(i, j).is_zero() && !want(i, j)) {
          rep.issues.push_back({std::string("grading(") + nm + ")",
                                "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not homogeneous"});
          return;
        }
  };
  grade("d", C.d, [&](std::size_t i, std::size_t j) { return mod4(gr[j] - gr[i]) == 1; });
  grade("v", C.v, [&](std::size_t i, std::size_t j) { return mod4(gr[j] - gr[i]) == 2; });
  grade("delta1", C.delta1, [&](std::size_t, std::size_t j) { return gr[j] == 1; });
  grade("delta2", C.delta2, [&](std::size_t i, std::size_t) { return gr[i] == 2; });

  std::size_t with_deg = 0;
  for (auto& g : C.gens) with_deg += g.deg_I.has_value();
  if (with_deg != 0 && with_deg != n) rep.issues.push_back({"deg_I", "present on some generators only"});
  if (n > 0 && C.i_graded() && C.ring.has_u()) {
    std::vector<Rational> deg, zero{Rational(0)};
    for (auto& g : C.gens) deg.push_back(*g.deg_I);
    level_check(rep, "d", C.d, deg, deg, true);
    level_check(rep, "v", C.v, deg, deg, false);
    level_check(rep, "delta1", C.delta1, deg, zero, true);
    level_check(rep, "delta2", C.delta2, zero, deg, true);
  }
  return rep;
}

namespace {

Matrix kron(const Matrix& A, const Matrix& B) {
  Matrix K(A.ring(), A.rows() * B.rows(), A.cols() * B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (A(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < B.rows(); ++k)
        for (std::size_t l = 0; l < B.cols(); ++l)
          if (!B(k, l).is_zero()) K(i * B.rows() + k, j * B.cols() + l) = A(i, j) * B(k, l);
    }
  return K;
}

Matrix sign_map(const SComplex& C) {
  Matrix E(C.ring, C.size(), C.size());
  for (std::size_t i = 0; i < C.size(); ++i) E(i, i) = Poly(C.ring, C.gens[i].gr % 2 ? -1 : 1);
  return E;
}

std::optional<Rational> add_opt(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

}  // namespace

SComplex tensor(const SComplex& A, const SComplex& B) {
  if (A.ring != B.ring) throw RingMismatch("tensor: rings differ");
  const Ring& R = A.ring;
  const std::size_t n = A.size(), m = B.size(), nm = n * m;
  std::vector<Generator> g;
  for (int blk = 0; blk < 2; ++blk)
    for (auto& a : A.gens)
      for (auto& b : B.gens)
        g.push_back({a.name + "*" + b.name + (blk ? "[1]" : ""), mod4(a.gr + b.gr + blk),
                     add_opt(a.deg_I, b.deg_I), add_opt(a.hol, b.hol)});
  for (auto& a : A.gens) g.push_back({a.name + "*1", a.gr, a.deg_I, a.hol});
  for (auto& b : B.gens) g.push_back({"1*" + b.name, b.gr, b.deg_I, b.hol});
  SComplex T(R, g);
  T.v_trusted = A.v_trusted && B.v_trusted;
  if (!A.i_graded() || !B.i_graded())
    for (auto& x : T.gens) x.deg_I.reset();

  const Matrix E = sign_map(A), Im = Matrix::identity(R, m);
  const std::size_t o2 = nm, o3 = 2 * nm, o4 = 2 * nm + n;
  // d
  T.d.put(0, 0, kron(A.d, Im) + kron(E, B.d));
  T.d.put(o2, 0, -kron(E * A.v, Im) + kron(E, B.v));
  T.d.put(o2, o2, kron(A.d, Im) - kron(E, B.d));
  T.d.put(o2, o3, kron(E, B.delta2));
  T.d.put(o2, o4, -kron(A.delta2, Im));
  T.d.put(o3, 0, kron(E, B.delta1));
  T.d.put(o3, o3, A.d);
  T.d.put(o4, 0, kron(A.delta1, Im));
  T.d.put(o4, o4, B.d);
  // v
  T.v.put(0, 0, kron(A.v, Im));
  T.v.put(0, o4, kron(A.delta2, Im));
  T.v.put(o2, o2, kron(A.v, Im));
  T.v.put(o3, o3, A.v);
  T.v.put(o4, o2, kron(A.delta1, Im));
  T.v.put(o4, o4, B.v);
  // delta1, delta2
  T.delta1.put(0, o3, A.delta1);
  T.delta1.put(0, o4, B.delta1);
  T.delta2.put(o3, 0, A.delta2);
  T.delta2.put(o4, 0, B.delta2);
  return T;
}

SComplex dual(const SComplex& C) {
  std::vector<Generator> g;
  for (auto& x : C.gens) {
    Generator y{x.name + "^", mod4(3 - x.gr), std::nullopt, std::nullopt};
    if (x.deg_I) y.deg_I = -*x.deg_I;
    if (x.hol) y.hol = -*x.hol;
    g.push_back(y);
  }
  SComplex D(C.ring, g);
  D.v_trusted = C.v_trusted;
  const std::size_t n = C.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Poly& e = C.d(a, b);
      if (!e.is_zero()) D.d(b, a) = C.gens[a].gr % 2 ? -e : e;
    }
  D.v = C.v.transpose();
  D.delta1 = C.delta2.transpose();
  D.delta2 = -C.delta1.transpose();
  return D;
}

ValidationReport check_morphism(const SMorphism& f) {
  ValidationReport rep;
  const SComplex &A = f.source, &B = f.target;
  const std::size_t n = A.size(), m = B.size();
  auto shape_ok = [&](const char* nm, const Matrix& x, std::size_t r, std::size_t c) {
    if (x.rows() != r || x.cols() != c || x.ring() != A.ring) {
      rep.issues.push_back({"shape", std::string(nm) + " is " + shape(x)});
      return false;
    }
    return true;
  };
  if (A.ring != B.ring) {
    rep.issues.push_back({"ring", "source and target rings differ"});
    return rep;
  }
  bool ok = shape_ok("lambda", f.lambda, m, n) & shape_ok("mu", f.mu, m, n) &
            shape_ok("Delta1", f.Delta1, 1, n) & shape_ok("Delta2", f.Delta2, m, 1);
  if (!ok) return rep;
  zero_check(rep, "lambda d - d' lambda", f.lambda * A.d - B.d * f.lambda);
  zero_check(rep, "Delta1 d + delta1 - delta1' lambda", f.Delta1 * A.d + A.delta1 - B.delta1 * f.lambda);
  zero_check(rep, "d' Delta2 - delta2' + lambda delta2", B.d * f.Delta2 - B.delta2 + f.lambda * A.delta2);
  zero_check(rep, "mu d + lambda v + Delta2 delta1 - v' lambda + d' mu - delta2' Delta1",
             f.mu * A.d + f.lambda * A.v + f.Delta2 * A.delta1 - B.v * f.lambda + B.d * f.mu -
                 B.delta2 * f.Delta1);
  return rep;
}

SMorphism identity_morphism(const SComplex& C) {
  const std::size_t n = C.size();
  return {C, C, Matrix::identity(C.ring, n), Matrix(C.ring, n, n), Matrix(C.ring, 1, n), Matrix(C.ring, n, 1)};
}

long long euler_characteristic(const SComplex& C) {
  long long chi = 0;
  for (auto& g : C.gens) chi += g.gr % 2 ? -1 : 1;
  return chi;
}

SComplex base_change_complex(const SComplex& C, const Ring& target, const VarMap& map) {
  SComplex D = C;
  D.ring = target;
  D.d = base_change(C.d, target, map);
  D.v = base_change(C.v, target, map);
  D.delta1 = base_change(C.delta1, target, map);
  D.delta2 = base_change(C.delta2, target, map);
  return D;
}

ChainComplex tilde_complex(const SComplex& C) { return {C.ring, C.tilde(), C.tilde_gradings()}; }

ChainComplex sharp_complex(const SComplex& C, bool twisted) {
  const Ring& R = C.ring;
  if (twisted && R.num_t() != 1) throw UnsupportedRing("twisted sharp complex needs a T-variable");
  const Matrix dt = C.tilde(), X = C.chi();
  const std::size_t k = dt.rows();
  Matrix D(R, 2 * k, 2 * k);
  D.put(0, 0, dt);
  D.put(k, k, dt);
  D.put(k, 0, X.scaled(Poly(R, 2)));
  if (twisted) {
    Poly c = Poly::T(R, 2).scaled(2) + Poly::T(R, -2).scaled(2) - Poly(R, 4);
    D.put(0, k, X.scaled(c));
  }
  std::vector<int> gr;
  auto tg = C.tilde_gradings();
  for (int g : tg) gr.push_back(mod4(g + 2));
  for (int g : tg) gr.push_back(g);
  return {R, D, gr};
}

namespace {

Matrix graded_block(const ChainComplex& K, int from) {
  std::vector<std::size_t> src, dst;
  for (std::size_t i = 0; i < K.gr.size(); ++i) {
    if (K.gr[i] == from) src.push_back(i);
    if (K.gr[i] == mod4(from - 1)) dst.push_back(i);
  }
  Matrix B(K.ring, dst.size(), src.size());
  for (std::size_t a = 0; a < dst.size(); ++a)
    for (std::size_t b = 0; b < src.size(); ++b) B(a, b) = K.D(dst[a], src[b]);
  return B;
}

void check_homogeneous(const ChainComplex& K) {
  for (std::size_t i = 0; i < K.D.rows(); ++i)
    for (std::size_t j = 0; j < K.D.cols(); ++j)
      if (!K.D(i, j).is_zero() && mod4(K.gr[j] - K.gr[i]) != 1)
        throw DomainError("differential is not of degree -1");
}

}  // namespace

std::array<std::size_t, 4> graded_ranks(const ChainComplex& K) {
  check_homogeneous(K);
  std::array<std::size_t, 4> dim{}, rk{}, out{};
  for (int g : K.gr) ++dim[g];
  for (int g = 0; g < 4; ++g) rk[g] = rank(graded_block(K, g));
  for (int g = 0; g < 4; ++g) out[g] = dim[g] - rk[g] - rk[mod4(g + 1)];
  return out;
}

std::size_t total_rank(const ChainComplex& K) { return K.D.rows() - 2 * rank(K.D); }

HomologySummary total_homology(const ChainComplex& K) { return homology(K.D, K.D); }

std::array<std::size_t, 4> irreducible_graded_ranks(const SComplex& C) {
  return graded_ranks({C.ring, C.d, C.gradings()});
}

}  // namespace scx
