#pragma once

#include <memory>

#include "algebra.hpp"
#include "band.hpp"
#include "coalgebra.hpp"

namespace comeasure {

// A coalgebra measuring one finite algebra into another: each coalgebra
// basis label carries a linear map A -> B. The defining identities are
//   phi_c(a a') = sum phi_left(a) phi_right(a')   over the terms of Delta c,
//   phi_c(1)    = counit(c) 1.
// The left tensor leg is always the factor applied to the first
// multiplicand; every example in this codebase is stated in that order.
struct MeasuringMap {
  std::shared_ptr<const Coalgebra> C;
  std::shared_ptr<const Algebra> A, B;
  std::vector<LinMap> phi;
};

// Variant whose source and target are the graded span of the monomials x^n,
// with band operators as images.
struct GradedMeasuringMap {
  std::shared_ptr<const Coalgebra> C;
  std::vector<BandOperator> phi;
};

// Bilinear module action, one endomorphism per algebra basis label.
struct ModuleAction {
  int mdim = 0;
  std::vector<LinMap> act;
  FreeVec apply(const FreeVec& a, const FreeVec& m) const;
};

// Measuring comodule over a finite measuring pair: D coacts into C (x) D,
// psi maps the A-module M into the B-module N, and
//   psi_d(a m) = sum phi_c(a) psi_d'(m)   over the terms (c, d') of Delta d.
struct ComoduleMeasuring {
  std::shared_ptr<const Coalgebra> C;
  std::shared_ptr<const Algebra> A, B;
  std::vector<LinMap> phi;
  std::shared_ptr<const Comodule> D;
  ModuleAction actM, actN;
  std::vector<LinMap> psi;
};

std::vector<Verdict> check_measuring(const MeasuringMap& mc, const std::vector<int>& generatorsA);
std::vector<Verdict> check_measuring_graded(const GradedMeasuringMap& mc, int deg_max = 12);
std::vector<Verdict> check_measuring_comodule(const ComoduleMeasuring& md,
                                              const std::vector<int>& generatorsA,
                                              const std::vector<FreeVec>& probesM);

// Equivalent formulation through the transpose M -> Hom(D, N): the map
// m -> (d -> psi_d(m)) must intertwine the action
// (a . beta)(d) = sum phi_c(a) beta(d') over Delta d. Used as a cross-check
// of check_measuring_comodule, never as a replacement.
std::vector<Verdict> check_transpose_intertwines(const ComoduleMeasuring& md,
                                                 const std::vector<int>& generatorsA,
                                                 const std::vector<FreeVec>& probesM);

// Composition of measured operators, the concrete product on image spaces.
BandOperator operator_product(const BandOperator& f, const BandOperator& g);
LinMap operator_product(const LinMap& f, const LinMap& g);

// Coalgebra scaffolds for the standard examples; the caller attaches phi.
// kinds: "C0", "C1", "difference", or primitive with the given labels.
Coalgebra build_standard_coalgebra(const std::string& kind);
Coalgebra primitive_coalgebra(const std::vector<std::string>& primitive_labels);

// Stock measuring structures.
MeasuringMap homomorphism_measuring(std::shared_ptr<const Algebra> A);
GradedMeasuringMap derivation_measuring();          // id and d/dx over the two-dimensional coalgebra
GradedMeasuringMap derivation_measuring_broken();   // d/dx replaced by multiplication by x
MeasuringMap difference_measuring(int n);           // cyclic shift on functions on Z/n
MeasuringMap permutation_difference_measuring(int n, const std::vector<int>& perm);

ComoduleMeasuring pullback_comodule(std::shared_ptr<const Algebra> A, const FreeVec& right_factor);
ComoduleMeasuring pullback_comodule_broken(std::shared_ptr<const Algebra> A, const FreeVec& left_factor);
ComoduleMeasuring inner_comodule(std::shared_ptr<const Algebra> A);
ComoduleMeasuring inner_comodule_broken(std::shared_ptr<const Algebra> A);

// The shift family: alpha^0 and the negative shifts alpha^{-1}..alpha^{-i_max}
// close into a coalgebra once the finite-rank coefficient functionals b_j are
// adjoined. phi sends alpha^{-i} to shift(-i) and b_j to the rank-one
// operator x^j -> 1.
GradedMeasuringMap shift_family_measuring(int i_max);
GradedMeasuringMap shift_family_measuring_broken(int i_max);
std::vector<Verdict> check_alpha_measuring(int i_max, int deg_max);

}  // namespace comeasure
