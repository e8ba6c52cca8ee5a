#pragma once
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scx/scomplex.hpp"

namespace scx {

struct ModuliCertificate {
  int i = 0, j = 0;
  long long k1 = 0, k2 = 0;
  long long N1 = 0, N2 = 0;
  int e1 = 1, e2 = 1;
};

// Solutions of a + q b = 0 mod p with |a| < k1, |b| < k2 (N1) and on the box boundary (N2).
std::pair<long long, long long> count_N1N2(long long k1, long long k2, long long p, long long q);

// q reduced into [1, p-1].
long long normalize_q(long long p, long long q);

std::optional<ModuliCertificate> solve_k1k2(long long p, long long q, int i, int j);

struct TwoBridgeReport {
  long long p = 0, q = 0, q_input = 0;
  SComplex complex;
  std::vector<ModuliCertificate> certificates;  // accepted ones, every ordered pair
  bool consistent = true;                       // delta2 delta1 = 0
  bool signs_solved = false;
  std::vector<std::string> notes;
};

// Supported targets: R_UNIVERSAL (any N; p is used), Z[T], F[T], F4 (T -> x), Z, Q, F2 (T -> 1).
TwoBridgeReport two_bridge(long long p, long long q, const Ring& ring);
SComplex two_bridge_complex(long long p, long long q, const Ring& ring);

// F2 ranks of Sasahira's complex for L(p,q), by Z/4 grading.
std::array<std::size_t, 4> lens_sasahira(long long p, long long q);

long long two_bridge_signature_oracle(long long p, long long q);

long long torus_B(long long p, long long q);
long long torus_signature(long long p, long long q);

struct AlexanderResult {
  Poly delta;  // symmetrized, over Z[T^±1] with T standing for t
  long long abs_sum = 0;
};
AlexanderResult torus_alexander(long long p, long long q);

bool vanishing_check(long long p, long long q);
// The two torus families on which h is known to vanish.
bool in_vanishing_family(long long p, long long q);

// trivial, trefoil, t34, t35
SComplex fixture(const std::string& name);

}  // namespace scx
