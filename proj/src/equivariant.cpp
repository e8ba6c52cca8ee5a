#include "scx/equivariant.hpp"

#include <algorithm>
#include <set>

#include "scx/error.hpp"

namespace scx {

namespace {

void require_trusted(const SComplex& C, const std::string& what) {
  if (!C.v_trusted) throw DomainError(what + ": v is not trusted for this complex");
}

Matrix vpow(const SComplex& C, int k) {
  Matrix P = Matrix::identity(C.ring, C.size());
  for (int i = 0; i < k; ++i) P = P * C.v;
  return P;
}

Matrix select_cols(const Matrix& M, const std::vector<std::size_t>& idx) {
  Matrix S(M.ring(), M.rows(), idx.size());
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) S(i, j) = M(i, idx[j]);
  return S;
}

// d stacked over delta1 v^j for j <= k-2.
Matrix cycle_conditions(const SComplex& C, int k) {
  Matrix M = C.d, r = C.delta1;
  for (int j = 0; j + 2 <= k; ++j) {
    M = Matrix::vstack(M, r);
    r = r * C.v;
  }
  return M;
}

// Columns d | -delta2 | -v delta2 | ... | -v^m delta2.
Matrix negative_system(const SComplex& C, int m) {
  Matrix A = C.d, col = -C.delta2;
  for (int j = 0; j <= m; ++j) {
    A = Matrix::hstack(A, col);
    col = C.v * col;
  }
  return A;
}

void require_searchable(const SComplex& C, const std::string& what) {
  if (!C.ring.is_field() && !v_nilpotent(C))
    throw DomainError(what + ": v is not nilpotent over a non-field ring");
}

// Hat differential on (alpha, a_0..a_N).
Matrix hat_d(const SComplex& C, int N) {
  const std::size_t n = C.size();
  Matrix D(C.ring, n + N + 1, n + N + 1);
  D.put(0, 0, C.d);
  Matrix col = -C.delta2;
  for (int i = 0; i <= N; ++i) {
    D.put(0, n + i, col);
    col = C.v * col;
  }
  return D;
}

Matrix hat_x(const SComplex& C, int N) {
  const std::size_t n = C.size();
  Matrix X(C.ring, n + N + 2, n + N + 1);
  X.put(0, 0, C.v);
  X.put(n, 0, C.delta1);
  for (int i = 0; i <= N; ++i) X(n + i + 1, n + i) = Poly::one(C.ring);
  return X;
}

// i on (alpha, a_0..a_N); rows are x-degrees N, N-1, ..., floor.
Matrix image_map(const SComplex& C, int N, int floor) {
  const std::size_t n = C.size();
  Matrix Y(C.ring, N - floor + 1, n + N + 1);
  for (int deg = N; deg >= floor; --deg) {
    std::size_t row = N - deg;
    if (deg >= 0) Y(row, n + deg) = Poly::one(C.ring);
    else Y.put(row, 0, C.delta1 * vpow(C, -deg - 1));
  }
  return Y;
}

void zero_check(ValidationReport& rep, const std::string& what, const Matrix& M) {
  if (!M.is_zero()) rep.issues.push_back({what, "fails"});
}

// Layouts for the equivalence check.
struct Layout {
  std::size_t n;
  std::size_t L(int M) const { return (M + 1) * (2 * n + 1); }
  std::size_t S(int M) const { return n + M + 1; }
  std::size_t la(int i, std::size_t k) const { return i * (2 * n + 1) + k; }
  std::size_t lb(int i, std::size_t k) const { return i * (2 * n + 1) + n + k; }
  std::size_t lr(int i) const { return i * (2 * n + 1) + 2 * n; }
  std::size_t sr(int i) const { return n + i; }
};

}  // namespace

bool v_nilpotent(const SComplex& C) { return vpow(C, static_cast<int>(C.size())).is_zero(); }

SmallModels small_models(const SComplex& C, int N, int floor) {
  if (N < 0 || floor > -1) throw DomainError("small models need N >= 0 and floor <= -1");
  const std::size_t n = C.size(), m = -floor;
  SmallModels out{{C, N, hat_d(C, N), hat_x(C, N)}, {C, floor, Matrix(), Matrix()}};
  Matrix D(C.ring, n + m, n + m), X(C.ring, n + m, n + m);
  D.put(0, 0, C.d);
  for (int i = floor; i <= -1; ++i) D.put(n + (i - floor), 0, C.delta1 * vpow(C, -i - 1));
  X.put(0, 0, C.v);
  if (m) X.put(0, n + m - 1, C.delta2);
  for (int i = floor; i <= -2; ++i) X(n + (i + 1 - floor), n + (i - floor)) = Poly::one(C.ring);
  out.check.d = D;
  out.check.x = X;
  return out;
}

ValidationReport check_small_models(const SmallModels& m) {
  ValidationReport rep;
  const SComplex& C = m.hat.base;
  zero_check(rep, "hat d^2", m.hat.d * m.hat.d);
  zero_check(rep, "hat dx - xd", hat_d(C, m.hat.N + 1) * m.hat.x - m.hat.x * m.hat.d);
  zero_check(rep, "check d^2", m.check.d * m.check.d);
  Matrix comm = m.check.d * m.check.x - m.check.x * m.check.d;
  const std::size_t n = C.size();
  if (comm.rows() > n) {
    // the floor row sees the truncated term
    for (std::size_t j = 0; j < comm.cols(); ++j) comm(n, j) = Poly(C.ring);
  }
  zero_check(rep, "check dx - xd", comm);
  return rep;
}

ValidationReport verify_model_equivalence(const SComplex& C, int N) {
  if (N < 1) throw DomainError("model equivalence needs N >= 1");
  const Ring& R = C.ring;
  const std::size_t n = C.size();
  const Layout Lo{n};
  const Matrix dt = C.tilde(), X = C.chi();
  const std::size_t w = 2 * n + 1;

  auto dL = [&](int M) {
    Matrix D(R, Lo.L(M + 1), Lo.L(M));
    for (int i = 0; i <= M; ++i) {
      D.put(i * w, i * w, -dt);
      D.put((i + 1) * w, i * w, X);
    }
    return D;
  };
  auto xL = [&](int M) {
    Matrix D(R, Lo.L(M + 1), Lo.L(M));
    for (std::size_t k = 0; k < Lo.L(M); ++k) D(k + w, k) = Poly::one(R);
    return D;
  };
  auto EL = [&](int M, int M2) {
    Matrix D(R, Lo.L(M2), Lo.L(M));
    for (std::size_t k = 0; k < Lo.L(M); ++k) D(k, k) = Poly::one(R);
    return D;
  };
  auto ES = [&](int M, int M2) {
    Matrix D(R, Lo.S(M2), Lo.S(M));
    for (std::size_t k = 0; k < Lo.S(M); ++k) D(k, k) = Poly::one(R);
    return D;
  };
  auto Phi = [&](int M) {
    Matrix P(R, Lo.S(M), Lo.L(M));
    for (int i = 0; i <= M; ++i) {
      P.put(0, Lo.lb(i, 0), vpow(C, i));
      for (int j = 0; j < i; ++j) P.put(Lo.sr(i - j - 1), Lo.lb(i, 0), C.delta1 * vpow(C, j));
      P(Lo.sr(i), Lo.lr(i)) = Poly::one(R);
    }
    return P;
  };
  auto Psi = [&](int M) {
    Matrix P(R, Lo.L(M), Lo.S(M));
    P.put(Lo.lb(0, 0), 0, Matrix::identity(R, n));
    for (int i = 0; i <= M; ++i) {
      P(Lo.lr(i), Lo.sr(i)) = Poly::one(R);
      for (int j = 0; j < i; ++j) P.put(Lo.la(i - j - 1, 0), Lo.sr(i), vpow(C, j) * C.delta2);
    }
    return P;
  };
  auto Kh = [&](int M) {
    Matrix K(R, Lo.L(M), Lo.L(M));
    for (int i = 0; i <= M; ++i)
      for (int j = 0; j < i; ++j) K.put(Lo.la(i - j - 1, 0), Lo.lb(i, 0), -vpow(C, j));
    return K;
  };
  auto Kx = [&](int M) {
    Matrix K(R, Lo.L(M), Lo.S(M));
    K.put(0, 0, -Matrix::identity(R, n));
    return K;
  };
  auto dS = [&](int M) { return hat_d(C, M); };
  auto xS = [&](int M) { return hat_x(C, M); };

  ValidationReport rep;
  zero_check(rep, "large d^2", dL(N + 1) * dL(N));
  zero_check(rep, "small d^2", dS(N) * dS(N));
  zero_check(rep, "Phi Psi = id", Phi(N) * Psi(N) - Matrix::identity(R, Lo.S(N)));
  zero_check(rep, "Psi Phi - id = dK + Kd",
             EL(N, N + 1) * (Psi(N) * Phi(N) - Matrix::identity(R, Lo.L(N))) - dL(N) * Kh(N) -
                 Kh(N + 1) * dL(N));
  zero_check(rep, "Phi chain map", Phi(N + 1) * dL(N) - ES(N, N + 1) * dS(N) * Phi(N));
  zero_check(rep, "Psi chain map", dL(N) * Psi(N) - EL(N, N + 1) * Psi(N) * dS(N));
  zero_check(rep, "Phi x = x Phi", Phi(N + 1) * xL(N) - xS(N) * Phi(N));
  // with K_x(alpha, f) = (-alpha, 0, 0) the commutator comes out as Psi x - x Psi
  zero_check(rep, "Psi x - x Psi = dK_x + K_x d",
             Psi(N + 1) * xS(N) - xL(N) * Psi(N) - dL(N) * Kx(N) - EL(N, N + 1) * Kx(N) * dS(N));
  return rep;
}

ValidationReport verify_triangle_exactness(const SComplex& C, int N) {
  if (!v_nilpotent(C)) throw DomainError("triangle exactness needs nilpotent v");
  const std::size_t n = C.size();
  N = std::max<int>(N, static_cast<int>(n));
  const int floor = -static_cast<int>(n) - 1;
  const Ring& R = C.ring;
  Matrix D = hat_d(C, N), Y = image_map(C, N, floor);
  // alpha with d alpha = 0 and delta1 v^k alpha = 0 for all k: the check cycles mod tails
  Matrix P = cycle_conditions(C, static_cast<int>(n) + 1);
  Matrix E(R, D.rows(), n);
  for (std::size_t k = 0; k < n; ++k) E(k, k) = Poly::one(R);
  ValidationReport rep;
  zero_check(rep, "i d = 0", Y * D);
  if (rank(Matrix::vstack(P, Y * E)) != rank(P)) rep.issues.push_back({"i j = 0", "fails on check cycles"});
  if (rank(Matrix::vstack(P, D * E)) != rank(P)) rep.issues.push_back({"j chain map", "fails on check cycles"});
  std::size_t dimW = D.cols() - rank(Matrix::vstack(D, Y));
  Matrix big(R, P.rows() + D.rows(), n + D.cols());
  big.put(0, 0, P);
  big.put(P.rows(), 0, -E);
  big.put(P.rows(), n, D);
  std::size_t dimJB = rank(big) - rank(P);
  if (dimW != dimJB)
    rep.issues.push_back({"ker i = im j", "kernel rank " + std::to_string(dimW) + " vs image rank " +
                                              std::to_string(dimJB)});
  return rep;
}

int h_invariant(const SComplex& C) {
  require_trusted(C, "h");
  require_searchable(C, "h");
  const int n = static_cast<int>(C.size());
  int best = 0;
  Matrix M = C.d, r = C.delta1;
  for (int k = 1; k <= n + 1; ++k) {
    Matrix S = Matrix::vstack(M, r);
    if (rank(S) > rank(M)) best = k;
    M = S;
    r = r * C.v;
  }
  if (best > 0) return best;
  Matrix A = C.d, col = -C.delta2;
  for (int k = 0; k >= -(n + 1); --k) {
    Matrix full = Matrix::hstack(A, col);
    if (rank(full) == rank(A)) return k;
    A = full;
    col = C.v * col;
  }
  throw DomainError("h: search did not terminate");
}

int h_invariant_via_image(const SComplex& C) {
  require_trusted(C, "h");
  if (!v_nilpotent(C)) throw DomainError("h via image: v is not nilpotent");
  const int n = static_cast<int>(C.size());
  const int N = n + 1, floor = -n - 1;
  Matrix D = hat_d(C, N), Y = image_map(C, N, floor);
  // least D0 with a cycle whose image vanishes above D0 but not identically
  std::optional<int> low;
  for (int D0 = N; D0 >= floor; --D0) {
    Matrix hi = Matrix::vstack(D, Y.block(0, 0, N - D0, Y.cols()));
    if (rank(Matrix::vstack(hi, Y)) > rank(hi)) low = D0;
  }
  if (!low) throw DomainError("h via image: image is zero in the window");
  return -*low;
}

bool Ideal::is_whole() const {
  for (auto& g : gens)
    if (is_unit(g)) return true;
  return false;
}

std::string Ideal::str() const {
  if (gens.empty()) return "0";
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].str();
  return s + ")";
}

Ideal make_ideal(const Ring& r, std::vector<Poly> gens) {
  std::vector<Poly> nz;
  for (auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  if (nz.empty()) return {r, {}};
  if (r.is_euclidean()) {
    Poly g = nz[0];
    for (std::size_t i = 1; i < nz.size(); ++i) g = euclid_gcd(g, nz[i]);
    return {r, {canonical_associate(g)}};
  }
  for (auto& g : nz)
    if (is_unit(g)) return {r, {Poly::one(r)}};
  std::vector<Poly> out;
  for (auto& g : nz) {
    Poly c = canonical_associate(g);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return {r, out};
}

bool ideal_contains(const Ideal& I, const Poly& p) {
  if (p.is_zero()) return true;
  if (I.is_zero()) return false;
  for (auto& g : I.gens)
    if (divide(p, g)) return true;
  if (I.ring.is_euclidean() || I.gens.size() == 1) return false;
  throw UnsupportedRing("ideal membership needs a Euclidean ring");
}

bool ideal_subset(const Ideal& I, const Ideal& J) {
  for (auto& g : I.gens)
    if (!ideal_contains(J, g)) return false;
  return true;
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  std::vector<Poly> g;
  for (auto& a : I.gens)
    for (auto& b : J.gens) g.push_back(a * b);
  return make_ideal(I.ring, g);
}

Ideal j_ideal(const SComplex& C, int i) {
  require_trusted(C, "J ideals");
  if (!v_nilpotent(C)) throw DomainError("J ideals: v is not nilpotent");
  std::vector<Poly> gens;
  if (i > 0) {
    Matrix K = kernel_basis(cycle_conditions(C, i));
    Matrix img = C.delta1 * vpow(C, i - 1) * K;
    for (std::size_t j = 0; j < img.cols(); ++j) gens.push_back(img(0, j));
  } else {
    Matrix K = kernel_basis(negative_system(C, -i));
    const std::size_t row = C.size() - i;
    for (std::size_t j = 0; j < K.cols(); ++j) gens.push_back(K(row, j));
  }
  return make_ideal(C.ring, gens);
}

std::map<int, Ideal> j_ideals(const SComplex& C, int lo, int hi) {
  std::map<int, Ideal> out;
  for (int i = lo; i <= hi; ++i) out.emplace(i, j_ideal(C, i));
  return out;
}

GammaValue gamma(const SComplex& C0, int k) {
  if (!C0.i_graded() && C0.size()) throw DomainError("gamma needs deg_I on every generator");
  require_trusted(C0, "gamma");
  SComplex C = C0;
  if (C.ring.has_u()) C = base_change_complex(C0, Ring::ZT(), {{"U", Poly::one(Ring::ZT())}});
  require_searchable(C, "gamma");

  struct Slot {
    Rational level;
    std::size_t gen;
  };
  std::vector<Slot> slots;
  for (std::size_t g = 0; g < C.size(); ++g) {
    int gr = C.gens[g].gr;
    if (mod4(2 * k - 1 - gr) != 0) continue;
    slots.push_back({*C.gens[g].deg_I + Rational(2 * k - 1 - gr, 4), g});
  }
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.level < b.level; });

  auto feasible = [&](std::size_t upto) {
    std::vector<std::size_t> cols;
    for (std::size_t s = 0; s < upto; ++s) cols.push_back(slots[s].gen);
    if (k > 0) {
      Matrix M = select_cols(cycle_conditions(C, k), cols);
      Matrix r = select_cols(C.delta1 * vpow(C, k - 1), cols);
      return rank(Matrix::vstack(M, r)) > rank(M);
    }
    Matrix A = select_cols(C.d, cols);
    Matrix last;
    for (int j = 0; j <= -k; ++j) {
      if (mod4(j - k) % 2) continue;
      Matrix col = -(vpow(C, j) * C.delta2);
      if (j == -k) last = col;
      else A = Matrix::hstack(A, col);
    }
    return rank(Matrix::hstack(A, last)) == rank(A);
  };

  if (k <= 0 && feasible(0)) return {false, Rational(0)};
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (s + 1 < slots.size() && slots[s + 1].level == slots[s].level) continue;
    if (feasible(s + 1)) {
      Rational t = slots[s].level;
      if (k <= 0 && t < Rational(0)) t = Rational(0);
      return {false, t};
    }
  }
  return {true, Rational(0)};
}

ModulePresentation hat_presentation(const SComplex& C) {
  require_trusted(C, "hat presentation");
  if (!C.d.is_zero() || !C.delta2.is_zero())
    throw DomainError("hat presentation: hat differential is nonzero");
  const Ring R = Ring::poly_x(C.ring);
  const std::size_t n = C.size();
  ModulePresentation p{R, {}, Matrix(R, n + 1, n)};
  for (auto& g : C.gens) p.gens.push_back(g.name);
  p.gens.push_back("e0");
  Matrix v = base_change(C.v, R, {}), d1 = base_change(C.delta1, R, {});
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) p.relations(h, g) = -v(h, g);
    p.relations(g, g) += Poly::x(R);
    p.relations(n, g) = -d1(0, g);
  }
  return p;
}

ModulePresentation bn_presentation(const ModulePresentation& p) {
  const Ring* inner = p.ring.inner();
  if (!p.ring.has_x() || !inner || inner->coeff() != Coeff::GF2 || inner->has_u())
    throw UnsupportedRing("BN presentation needs a presentation over F2[T^±1][x] or F2[x]");
  const Ring S = Ring::sbn();
  VarMap map{{"x", bn_P()}};
  if (inner->num_t()) map["T"] = Poly::T(S, 1, 0);
  return {S, p.gens, base_change(p.relations, S, map)};
}

}  // namespace scx
