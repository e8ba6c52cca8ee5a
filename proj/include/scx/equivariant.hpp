#pragma once
#include <map>
#include <string>
#include <vector>

#include "scx/scomplex.hpp"

namespace scx {

// Truncation of C[1] + R[x] to x-degree <= N, coordinates (alpha, a_0..a_N).
// d acts on the truncation; x maps it into the truncation at N+1.
struct SmallHatComplex {
  SComplex base;
  int N = 0;
  Matrix d, x;
};

// C + x^floor R + ... + x^-1 R in the quotient R[[x^-1,x]]/R[x],
// coordinates (alpha, a_floor..a_-1). x drops the term that would fall below floor.
struct SmallCheckComplex {
  SComplex base;
  int floor = -1;
  Matrix d, x;
};

struct SmallModels {
  SmallHatComplex hat;
  SmallCheckComplex check;
};

SmallModels small_models(const SComplex& C, int N, int floor);
// d^2 = 0 and dx = xd on both models (check side away from the floor).
ValidationReport check_small_models(const SmallModels& m);

// Large hat model R[x] (x) C~ against the small one via Phi, Psi and the homotopies,
// all evaluated exactly on x-degrees <= N.
ValidationReport verify_model_equivalence(const SComplex& C, int N);

// ker i_* = im j_* on hat homology; needs nilpotent v.
ValidationReport verify_triangle_exactness(const SComplex& C, int N);

bool v_nilpotent(const SComplex& C);

// h from the cycle conditions (rank over the fraction field).
int h_invariant(const SComplex& C);
// h as minus the least x-degree over the image of i_*; needs nilpotent v.
int h_invariant_via_image(const SComplex& C);

struct Ideal {
  Ring ring;
  std::vector<Poly> gens;  // empty for the zero ideal
  bool is_zero() const { return gens.empty(); }
  bool is_whole() const;
  std::string str() const;
};
// Reduce to a single generator over Euclidean rings, drop zeros and duplicates elsewhere.
Ideal make_ideal(const Ring& r, std::vector<Poly> gens);
// Membership; Euclidean rings only.
bool ideal_contains(const Ideal& I, const Poly& p);
bool ideal_subset(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);

Ideal j_ideal(const SComplex& C, int i);
std::map<int, Ideal> j_ideals(const SComplex& C, int lo, int hi);

struct GammaValue {
  bool infinite = false;
  Rational value;
  bool operator==(const GammaValue&) const = default;
  std::string str() const { return infinite ? "inf" : value.str(); }
};
GammaValue gamma(const SComplex& C, int k);

// Cokernel of relations: columns are relations in the listed generators.
struct ModulePresentation {
  Ring ring;
  std::vector<std::string> gens;
  Matrix relations;
};

ModulePresentation hat_presentation(const SComplex& C);
ModulePresentation bn_presentation(const ModulePresentation& p);

}  // namespace scx
