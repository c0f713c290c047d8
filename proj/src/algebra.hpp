#pragma once

#include <string>
#include <vector>

#include "freevec.hpp"
#include "verdict.hpp"

namespace comeasure {

// Finite-dimensional unital associative algebra with structure constants.
struct Algebra {
  std::vector<std::string> labels;
  std::vector<std::vector<FreeVec>> mult;  // mult[i][j] = e_i e_j
  FreeVec unit;

  int dim() const { return int(labels.size()); }
  int index_of(const std::string& label) const;
  FreeVec multiply(const FreeVec& a, const FreeVec& b) const;
};

// Associativity on all basis triples plus both unit laws.
std::vector<Verdict> check_algebra(const Algebra& A);

std::vector<FreeVec> center_basis(const Algebra& A);

// Matrix of x -> a x - x a in the algebra basis.
RatMatrix inner_derivation(const Algebra& A, const FreeVec& a);

// Linear map between coordinate spaces, stored by columns.
struct LinMap {
  int dom = 0, cod = 0;
  std::vector<FreeVec> cols;

  static LinMap zero(int dom, int cod) { return {dom, cod, std::vector<FreeVec>(dom)}; }
  static LinMap identity(int n);
  FreeVec apply(const FreeVec& v) const;
  bool operator==(const LinMap& o) const { return dom == o.dom && cod == o.cod && cols == o.cols; }
};

// f after g; throws std::invalid_argument when the inner spaces disagree.
LinMap compose(const LinMap& f, const LinMap& g);
LinMap linmap_from_matrix(const RatMatrix& M);
LinMap left_mult_map(const Algebra& A, int i);

Algebra upper_triangular2();          // basis E11, E12, E22
Algebra diagonal2();                  // basis E11, E22
Algebra cyclic_function_algebra(int n);  // pointwise products of indicators on Z/n

}  // namespace comeasure
