#include "scx/knots.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <tuple>

#include "scx/error.hpp"

namespace scx {

namespace {

long long pmod(long long a, long long p) { return ((a % p) + p) % p; }

long long inverse_mod(long long a, long long p) {
  long long g = p, x = 0, x1 = 1, b = pmod(a, p);
  while (b) {
    long long t = g / b;
    std::tie(g, b) = std::make_pair(b, g - t * b);
    std::tie(x, x1) = std::make_pair(x1, x - t * x1);
  }
  if (g != 1) throw DomainError("not invertible mod p");
  return pmod(x, p);
}

void check_two_bridge(long long p, long long q) {
  if (p < 1 || p % 2 == 0) throw DomainError("two-bridge knots need odd p >= 1");
  if (std::gcd(p, std::llabs(q)) != 1) throw DomainError("p and q must be coprime");
}

long long rep(long long r, long long p) { return r == 0 ? p : r; }

}  // namespace

std::pair<long long, long long> count_N1N2(long long k1, long long k2, long long p, long long q) {
  if (k1 < 1 || k2 < 1) throw DomainError("count_N1N2 needs k1, k2 >= 1");
  long long n1 = 0, n2 = 0;
  for (long long b = -k2; b <= k2; ++b) {
    // a = -q b mod p, all representatives with |a| <= k1
    long long a0 = pmod(-q * b, p);
    for (long long a = a0 - ((a0 + k1) / p) * p; a <= k1; a += p) {
      if (a < -k1) continue;
      long long A = std::llabs(a), Bb = std::llabs(b);
      if (A < k1 && Bb < k2) ++n1;
      else if ((A < k1 && Bb == k2) || (A == k1 && Bb < k2)) ++n2;
    }
  }
  return {n1, n2};
}

long long normalize_q(long long p, long long q) {
  long long r = pmod(q, p);
  return p == 1 ? 1 : r;
}

std::optional<ModuliCertificate> solve_k1k2(long long p, long long q, int i, int j) {
  check_two_bridge(p, q);
  q = normalize_q(p, q);
  const long long qi = inverse_mod(q, p);
  std::vector<ModuliCertificate> cand;
  for (int e1 : {1, -1})
    for (int e2 : {1, -1}) {
      long long r1 = rep(pmod(e1 * i + e2 * j, p), p);
      long long r2 = rep(pmod(qi * pmod(-e1 * i + e2 * j, p), p), p);
      for (long long k1 = r1; k1 * r2 <= 4 * p; k1 += p)
        for (long long k2 = r2; k1 * k2 <= 4 * p; k2 += p) cand.push_back({i, j, k1, k2, 0, 0, e1, e2});
    }
  std::sort(cand.begin(), cand.end(), [](const ModuliCertificate& a, const ModuliCertificate& b) {
    return std::make_tuple(a.k1 * a.k2, a.k1, a.k2, -a.e1, -a.e2) <
           std::make_tuple(b.k1 * b.k2, b.k1, b.k2, -b.e1, -b.e2);
  });
  for (auto& c : cand) {
    auto [n1, n2] = count_N1N2(c.k1, c.k2, p, q);
    if (n1 == 1 && n2 == 0) {
      c.N1 = n1;
      c.N2 = n2;
      if (c.k1 * c.k2 >= 2 * p) throw Error("certificate beyond the proven bound");
      return c;
    }
  }
  return std::nullopt;
}

namespace {

// Sign exponents for the entries, by GF(2) elimination.
std::optional<std::vector<int>> solve_signs(std::size_t nvars, const std::vector<std::vector<std::size_t>>& eqs) {
  std::vector<std::vector<char>> rows;
  for (auto& e : eqs) {
    std::vector<char> r(nvars + 1, 0);
    for (auto v : e) r[v] ^= 1;
    r[nvars] = 1;
    rows.push_back(r);
  }
  std::vector<int> pivcol;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < nvars && rk < rows.size(); ++c) {
    std::size_t piv = rk;
    while (piv < rows.size() && !rows[piv][c]) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rk], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rk && rows[r][c])
        for (std::size_t k = 0; k <= nvars; ++k) rows[r][k] ^= rows[rk][k];
    pivcol.push_back(static_cast<int>(c));
    ++rk;
  }
  for (std::size_t r = rk; r < rows.size(); ++r)
    if (rows[r][nvars]) return std::nullopt;
  std::vector<int> x(nvars, 0);
  for (std::size_t r = 0; r < rk; ++r) x[pivcol[r]] = rows[r][nvars];
  return x;
}

}  // namespace

TwoBridgeReport two_bridge(long long p, long long q_in, const Ring& ring) {
  check_two_bridge(p, q_in);
  TwoBridgeReport out;
  out.p = p;
  out.q_input = q_in;
  out.q = normalize_q(p, q_in);
  const long long q = out.q;
  const int n = static_cast<int>((p - 1) / 2);
  if (out.q != q_in) out.notes.push_back("q normalized to " + std::to_string(out.q));

  const Ring U = Ring::universal(p);
  std::vector<Generator> gens;
  const long long qi = p > 1 ? inverse_mod(q, p) : 0;
  for (int i = 1; i <= n; ++i) {
    long long k1 = i, k2 = rep(pmod(-i * qi, p), p);
    auto [n1, n2] = count_N1N2(k1, k2, p, q);
    if (n2 % 2) throw Error("odd boundary count for the grading certificate");
    long long kk = pmod(k1 * k2, p);
    gens.push_back({"xi" + std::to_string(i), mod4(n1 + n2 / 2), Rational(kk == 0 ? p : kk, p), std::nullopt});
  }

  // entries a_ij, i is the source, 0 stands for the reducible
  std::map<std::pair<int, int>, long long> A;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      auto c = solve_k1k2(p, q, i, j);
      if (!c) continue;
      out.certificates.push_back(*c);
      if ((c->k1 * c->k2) % 2) A[{i, j}] = c->k1 * c->k2;
    }

  std::map<std::pair<int, int>, std::size_t> var;
  for (auto& [e, kk] : A) {
    std::size_t id = var.size();
    var[e] = id;
  }
  std::map<std::tuple<int, int, long long>, std::vector<int>> groups;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i == 0 && j == 0) continue;
      for (int k = 1; k <= n; ++k) {
        auto a = A.find({i, k}), b = A.find({k, j});
        if (a == A.end() || b == A.end()) continue;
        groups[{i, j, a->second + b->second}].push_back(k);
      }
    }
  std::vector<std::vector<std::size_t>> eqs;
  for (auto& [key, ks] : groups) {
    auto [i, j, e] = key;
    if (ks.size() != 2)
      throw Error("two-bridge: " + std::to_string(ks.size()) + " paths with one U-exponent from " +
                  std::to_string(i) + " to " + std::to_string(j));
    eqs.push_back({var[{i, ks[0]}], var[{ks[0], j}], var[{i, ks[1]}], var[{ks[1], j}]});
  }
  auto signs = solve_signs(var.size(), eqs);
  if (!signs) throw Error("two-bridge: sign system has no solution");
  out.signs_solved = true;
  if (!eqs.empty()) out.notes.push_back("signs solved");

  SComplex C(U, gens);
  const Poly tt = Poly::T(U, 2) - Poly::T(U, -2);
  for (auto& [e, kk] : A) {
    Poly entry = Poly::U(U, Rational(kk, p)) * tt;
    if ((*signs)[var[e]]) entry = -entry;
    auto [i, j] = e;
    if (i > 0 && j > 0) C.d(j - 1, i - 1) = entry;
    else if (j == 0) C.delta1(0, i - 1) = entry;
    else C.delta2(j - 1, 0) = entry;
  }
  bool gap2 = false;
  for (auto& g : gens)
    for (auto& h : gens) gap2 |= mod4(g.gr - h.gr) == 2;

  if (ring.tag() == Ring::Tag::R_UNIVERSAL) {
  } else if (ring.num_t() == 1 && !ring.has_x() && ring.tag() != Ring::Tag::S_BN) {
    C = base_change_complex(C, ring, {{"U", Poly::one(ring)}});
  } else if (ring.is_f4()) {
    C = base_change_complex(C, ring, {{"U", Poly::one(ring)}, {"T", Poly::x(ring)}});
  } else if (ring.tag() == Ring::Tag::Z || ring.tag() == Ring::Tag::Q || ring.tag() == Ring::Tag::F2) {
    C = base_change_complex(C, ring, {{"U", Poly::one(ring)}, {"T", Poly::one(ring)}});
  } else {
    throw UnsupportedRing("two-bridge complexes are not generated over " + ring.name());
  }
  out.consistent = (C.delta2 * C.delta1).is_zero();
  bool untwisted = ring.num_t() == 0 && !ring.is_f4() && ring.tag() != Ring::Tag::R_UNIVERSAL;
  C.v_trusted = out.consistent && (untwisted || !gap2);
  if (!out.consistent) out.notes.push_back("inconsistent: delta2 delta1 != 0 with v = 0");
  else if (!C.v_trusted) out.notes.push_back("v untrusted");
  out.complex = C;
  return out;
}

SComplex two_bridge_complex(long long p, long long q, const Ring& ring) { return two_bridge(p, q, ring).complex; }

std::array<std::size_t, 4> lens_sasahira(long long p, long long q) {
  auto rep = two_bridge(p, -q, Ring::universal(p));
  const Ring F = Ring::F2();
  SComplex C(F, rep.complex.gens);
  for (auto& c : rep.certificates)
    if (c.i > 0 && c.j > 0 && (c.k1 * c.k2) % 2) C.d(c.j - 1, c.i - 1) = Poly::one(F);
  return irreducible_graded_ranks(C);
}

long long two_bridge_signature_oracle(long long p, long long q) {
  check_two_bridge(p, q);
  if (p == 1) return 0;
  long long qq = pmod(q, p);
  if (qq % 2) qq -= p;
  // even continued fraction p/qq = b1 - 1/(b2 - 1/(...))
  std::vector<long long> b;
  long long num = p, den = qq;
  for (;;) {
    if (den < 0) num = -num, den = -den;
    if (num % den == 0) {
      b.push_back(num / den);
      break;
    }
    // nearest even integer to num/den
    long long h = num >= 0 ? num / (2 * den) : -((-num + 2 * den - 1) / (2 * den));
    long long r = num - 2 * h * den;  // in [0, 2 den)
    long long c = 2 * h + (r > den ? 2 : 0);
    b.push_back(c);
    long long rnum = c * den - num;
    num = den;
    den = rnum;
  }
  // signature of the tridiagonal form from leading minors
  long long prev2 = 0, prev = 1, sig = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    long long cur = b[i] * prev - (i ? prev2 : 0);
    if (cur == 0) throw Error("signature oracle: singular leading minor");
    sig += (cur > 0) == (prev > 0) ? 1 : -1;
    prev2 = prev;
    prev = cur;
  }
  if (std::llabs(prev) != p) throw Error("signature oracle: determinant mismatch");
  return -sig;
}

long long torus_B(long long p, long long q) {
  long long count = 0;
  for (long long m = 1; m <= (p - 1) / 2; ++m)
    for (long long n = 1; n <= q - 1; ++n)
      if (2 * (m * q + n * p) >= p * q) ++count;
  return count;
}

namespace {

void check_torus(long long& p, long long& q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1) throw DomainError("torus knots need coprime p, q >= 2");
  if (p % 2 == 0) std::swap(p, q);
}

}  // namespace

long long torus_signature(long long p, long long q) {
  check_torus(p, q);
  long long s = (p - 1) * (q - 1) - 4 * torus_B(p, q);
  // closed forms, doubled to stay integral
  for (long long k = 0; 2 * k * p - 2 <= q; ++k)
    for (long long e : {1, -1}) {
      if (q == 2 * k * p + 2 * e) {
        if (-(p - 1) * (k * p + k + e) != s) throw Error("signature closed form disagrees");
        long long B4 = (p - 1) * (3 * k * p + k - 1 + 3 * e);  // 4B
        if (B4 != 4 * torus_B(p, q)) throw Error("B closed form disagrees");
      }
      if (q == (2 * k + 1) * p + 2 * e) {
        if (-(p - 1) * ((2 * k + 1) * (p + 1) / 2 + 2 * e) + 4 * e * (p / 4) != s)
          throw Error("signature closed form disagrees");
        // 8B = (p-1)((2k+1)(3p+1) - 2 + 8e) - 8e floor(p/4)
        long long B8 = (p - 1) * ((2 * k + 1) * (3 * p + 1) - 2 + 8 * e) - 8 * e * (p / 4);
        if (B8 != 8 * torus_B(p, q)) throw Error("B closed form disagrees");
      }
    }
  return s;
}

AlexanderResult torus_alexander(long long p, long long q) {
  check_torus(p, q);
  auto tpoly = [](long long n) {
    std::vector<long long> r(n + 1, 0);
    r[0] = -1;
    r[n] = 1;
    return r;
  };
  auto mul = [](const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  std::vector<long long> num = mul(tpoly(p * q), tpoly(1)), den = mul(tpoly(p), tpoly(q));
  std::vector<long long> quo(num.size() - den.size() + 1, 0);
  for (std::size_t i = quo.size(); i-- > 0;) {
    long long c = num[i + den.size() - 1] / den.back();
    quo[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (long long r : num)
    if (r) throw Error("Alexander polynomial division is not exact");
  const Ring R = Ring::ZT();
  const long long shift = static_cast<long long>(quo.size() - 1) / 2;
  AlexanderResult out{Poly(R), 0};
  Poly::Terms t;
  for (std::size_t i = 0; i < quo.size(); ++i)
    if (quo[i]) {
      Monomial m;
      m.t[0] = static_cast<int>(i - shift);
      t[m] = mpq_class(static_cast<long>(quo[i]));
      out.abs_sum += std::llabs(quo[i]);
    }
  out.delta = Poly(R, t);
  for (long long l = 0; l * p - 2 <= q; ++l)
    for (long long e : {1, -1})
      if (q == l * p + 2 * e) {
        // 2|Delta| = (p-1)((p+1)l + 2e) + 2e
        if ((p - 1) * ((p + 1) * l + 2 * e) + 2 * e != 2 * out.abs_sum)
          throw Error("Alexander closed form disagrees");
      }
  return out;
}

bool vanishing_check(long long p, long long q) {
  return 1 + std::llabs(torus_signature(p, q)) == torus_alexander(p, q).abs_sum;
}

bool in_vanishing_family(long long p, long long q) {
  check_torus(p, q);
  if (p % 2 == 0) return false;
  for (long long k = 1; 2 * p * k - p <= q; ++k) {
    if (q == 2 * p * k + 2) return true;
    if (p % 4 == 1 && q == 2 * p * k + (2 - p)) return true;
    if (p % 4 == 3 && q == 2 * p * k - (2 - p)) return true;
  }
  return false;
}

SComplex fixture(const std::string& name) {
  const Ring Z = Ring::Z();
  if (name == "trivial") return SComplex::trivial(Z);
  if (name == "trefoil") return two_bridge_complex(3, -1, Ring::universal(3));
  if (name == "t35" || name == "t34") {
    std::vector<Generator> g{{"a1", 1, std::nullopt, std::nullopt}, {"a2", 1, std::nullopt, std::nullopt},
                             {"b1", 3, std::nullopt, std::nullopt}};
    if (name == "t35") g.push_back({"b2", 3, std::nullopt, std::nullopt});
    SComplex C(Z, g);
    C.delta1(0, 0) = Poly(Z, 1);
    C.delta1(0, 1) = Poly(Z, -1);
    return C;
  }
  throw DomainError("unknown fixture " + name);
}

}  // namespace scx
