#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "freevec.hpp"
#include "verdict.hpp"

namespace comeasure {

// Finite-dimensional coalgebra over the rationals. The comultiplication is
// stored as an explicit tensor: delta[i] lists terms (left, right, coeff)
// meaning the basis element i comultiplies to sum coeff * e_left (x) e_right.
// Tensor legs are plain ordered pairs; nothing here depends on a summation
// convention beyond that ordering.
struct Coalgebra {
  std::vector<std::string> labels;
  std::vector<std::vector<std::tuple<int, int, Rat>>> delta;
  std::vector<Rat> counit;

  int dim() const { return int(labels.size()); }
  int index_of(const std::string& label) const;
};

// Coassociativity and both counit laws, checked basis element by basis
// element. The witness names the first offending element.
std::vector<Verdict> check_coalgebra(const Coalgebra& C);

bool is_grouplike(const Coalgebra& C, int i);

// Right comodule data over a fixed coalgebra: delta[i] lists terms
// (coalgebra index, comodule index, coeff), coalgebra leg on the left.
struct Comodule {
  std::shared_ptr<const Coalgebra> coalg;
  std::vector<std::string> labels;
  std::vector<std::vector<std::tuple<int, int, Rat>>> delta;

  int dim() const { return int(labels.size()); }
  int index_of(const std::string& label) const;
};

// Counit law and coaction compatibility.
std::vector<Verdict> check_comodule(const Comodule& D);

// Action of a functional on the coalgebra (given by its values on the
// basis) against the left tensor leg of the coaction.
FreeVec dual_action(const Comodule& D, const std::vector<Rat>& f, const FreeVec& v);

// Smallest subcomodule containing v: the span of v closed under the dual
// basis functionals. Returns an echelonized basis.
std::vector<FreeVec> fd_closure(const Comodule& D, const FreeVec& v);

// Whether the span of the rows is carried into coalg (x) span by the
// coaction.
bool is_subcomodule(const Comodule& D, const std::vector<FreeVec>& rows);

// Whether the span of the rows is carried into span (x) span by the
// comultiplication.
bool is_subcoalgebra(const Coalgebra& C, const std::vector<FreeVec>& rows);

// Elements of D whose coaction lands in span(F) (x) D, computed by exact
// linear algebra. Throws std::invalid_argument when F is not a
// subcoalgebra.
std::vector<FreeVec> restrict_comodule(const Comodule& D, const std::vector<FreeVec>& F);

// Stock coalgebras.
Coalgebra trivial_coalgebra();                   // single grouplike g
Coalgebra primitive_pair_coalgebra();            // g grouplike, gamma primitive over it
Coalgebra taylor_coalgebra(int count);           // b_j with delta b_j = sum b_k (x) b_{j-k}
Coalgebra difference_coalgebra();                // K, Kinv grouplike, E a (K, Kinv)-skew primitive

// Chain comodule of the given length over taylor_coalgebra(count >= len):
// delta e_i = sum_{k <= i} b_k (x) e_{i-k}.
Comodule taylor_chain_comodule(std::shared_ptr<const Coalgebra> taylor, int len);

// Direct sum, labels suffixed to stay distinct.
Comodule comodule_direct_sum(const Comodule& a, const Comodule& b);

// Reexpress a comodule in the basis whose i-th vector has coordinates
// P(:,i); P must be invertible.
Comodule change_basis(const Comodule& D, const RatMatrix& P);

}  // namespace comeasure
