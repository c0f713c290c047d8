#pragma once

#include <functional>
#include <map>

#include "band.hpp"
#include "liealg.hpp"

namespace comeasure {

// Central-extension cocycle machinery. A scheme assigns to each integer
// label a section operator on span{x^n} and to each label pair a formal
// bracket combination. The curvature of the section,
//   Omega(v, w) = mu(v) mu(w) - mu(w) mu(v) - mu([v, w]),
// is finitely supported on the diagonal for the stock families, so the
// regularized trace tau(Omega) is defined and gives the 2-cocycle.
//
// Sections may carry finitely supported perturbations per label. The
// bracket image always uses the unperturbed base section, which is the
// setting in which the cocycle is provably perturbation-invariant.
struct ExtensionScheme {
  std::function<BandOperator(int)> base_section;
  std::function<std::vector<std::pair<int, Rat>>(int, int)> bracket;
  std::map<int, BandOperator> perturbation;

  BandOperator section(int v) const;
  BandOperator bracket_image(int v, int w) const;
};

BandOperator curvature_operator(const ExtensionScheme& scheme, int v, int w);
Rat cocycle_value(const ExtensionScheme& scheme, int v, int w);

// Labels k are the shift operators x^n -> x^{n+k}; the bracket is abelian.
ExtensionScheme heisenberg_scheme();
// Labels m are the operators x^n -> n x^{n+m}; bracket (b - a) at a + b.
ExtensionScheme virasoro_scheme();

// Loop cocycle over a finite-dimensional Lie algebra: the x-factor trace
// times the Killing form.
Rat loop_cocycle(const LieAlgebraFD& L, int m, int xi, int n, int psi);

}  // namespace comeasure
