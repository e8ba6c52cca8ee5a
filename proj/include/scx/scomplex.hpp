#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "scx/linalg.hpp"

namespace scx {

struct Generator {
  std::string name;
  int gr = 0;                      // Z/4 grading, stored in 0..3
  std::optional<Rational> deg_I;   // instanton grading
  std::optional<Rational> hol;     // monopole grading
  bool operator==(const Generator&) const = default;
};

// C~ = C + C[1] + R with d~ = [[d,0,0],[v,-d,delta2],[delta1,0,0]].
// Matrices act on columns: d(i,j) is the coefficient of gens[i] in d(gens[j]).
struct SComplex {
  Ring ring;
  std::vector<Generator> gens;
  Matrix d, v, delta1, delta2;  // n x n, n x n, 1 x n, n x 1
  bool v_trusted = true;

  SComplex() = default;
  // All maps zero.
  SComplex(const Ring& r, std::vector<Generator> g);
  static SComplex trivial(const Ring& r) { return SComplex(r, {}); }

  std::size_t size() const { return gens.size(); }
  bool i_graded() const;
  std::vector<int> gradings() const;
  // The (2n+1)-square differential d~ and the gradings of its basis.
  Matrix tilde() const;
  std::vector<int> tilde_gradings() const;
  // chi: (a, b, r) -> (0, a, 0)
  Matrix chi() const;

  bool operator==(const SComplex& o) const;
};

inline int mod4(long long g) { return static_cast<int>(((g % 4) + 4) % 4); }

struct ValidationIssue {
  std::string relation;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  bool has(const std::string& relation) const;
  std::string str() const;
};

ValidationReport validate(const SComplex& C);

// Generators: (C x C') + (C x C')[1] + C + C'.
SComplex tensor(const SComplex& A, const SComplex& B);

// Dual: the dual of a grading-i generator sits in grading 3 - i (= -i-1);
// d^ f = (-1)^i f d, v^ = v^t, delta1^ = delta2^t, delta2^ = -delta1^t.
SComplex dual(const SComplex& C);

struct SMorphism {
  SComplex source, target;
  Matrix lambda, mu;    // n' x n
  Matrix Delta1;        // 1 x n
  Matrix Delta2;        // n' x 1
};
ValidationReport check_morphism(const SMorphism& m);
SMorphism identity_morphism(const SComplex& C);

long long euler_characteristic(const SComplex& C);

SComplex base_change_complex(const SComplex& C, const Ring& target, const VarMap& map);

// A Z/4-graded chain complex given by one square differential of degree -1.
struct ChainComplex {
  Ring ring;
  Matrix D;
  std::vector<int> gr;
};

ChainComplex tilde_complex(const SComplex& C);
// Untwisted: Cone(2 chi) on C~. Twisted: [[d~, (2T^2+2T^-2-4) chi], [2 chi, d~]].
// The first copy is shifted up by 2.
ChainComplex sharp_complex(const SComplex& C, bool twisted);

// Homology ranks over the fraction field, by grading and in total.
std::array<std::size_t, 4> graded_ranks(const ChainComplex& K);
std::size_t total_rank(const ChainComplex& K);
// Free rank and torsion of H(K) over a Euclidean ring.
HomologySummary total_homology(const ChainComplex& K);
// Homology of (C, d) alone, graded.
std::array<std::size_t, 4> irreducible_graded_ranks(const SComplex& C);

}  // namespace scx
