#pragma once

#include <string>
#include <vector>

#include "freevec.hpp"
#include "verdict.hpp"

namespace comeasure {

// Finite-dimensional Lie algebra over the rationals, given by structure
// constants.
struct LieAlgebraFD {
  std::vector<std::string> labels;
  std::vector<std::vector<FreeVec>> bracket;  // bracket[i][j] = [e_i, e_j]

  int dim() const { return int(labels.size()); }
  int index_of(const std::string& label) const;
  FreeVec bracket_of(const FreeVec& a, const FreeVec& b) const;
};

// Antisymmetry and the Jacobi identity on all basis triples.
std::vector<Verdict> check_lie(const LieAlgebraFD& L);

// Matrix of ad(e_i) in the algebra basis.
RatMatrix ad_matrix(const LieAlgebraFD& L, int i);

// trace(ad(e_i) ad(e_j)).
Rat killing_form(const LieAlgebraFD& L, int i, int j);

// Basis e, h, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebraFD sl2();

}  // namespace comeasure
