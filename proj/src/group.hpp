#pragma once

#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "coalgebra.hpp"
#include "verdict.hpp"

namespace comeasure {

// Finite group as a multiplication table. Identity index and inverse table
// are derived and re-verified on construction.
struct FiniteGroup {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;  // table[i][j] = i * j
  std::vector<int> inverse;
  int identity = -1;

  int order() const { return int(labels.size()); }
  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverse[a]; }
  int index_of(const std::string& label) const;
};

// Fills identity/inverse and checks the group axioms; throws
// std::invalid_argument on a broken table.
FiniteGroup make_group(std::vector<std::string> labels, std::vector<std::vector<int>> table);

FiniteGroup symmetric_group(int n);  // labels in cycle notation, "e" for the identity

std::vector<int> subgroup_closure(const FiniteGroup& G, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elems);

// Every subgroup generated by at most two elements. For the symmetric
// groups handled here this is every subgroup.
std::vector<std::vector<int>> two_generated_subgroups(const FiniteGroup& G);

std::set<int> double_coset(const FiniteGroup& G, const std::vector<int>& K, int g);

// Representatives g_i with KgK equal to the disjoint union of the g_i K
// and also of the K g_i. Found by matching left to right cosets through
// nonempty intersections; a failed matching is an internal error.
std::vector<int> double_coset_common_transversal(const FiniteGroup& G, const std::vector<int>& K,
                                                 int g);

// Transversal plus explicit certificates: disjoint exact tilings on both
// sides, and equality of the three spans (two-sided products, left
// translates, right translates) inside the group algebra, certified by
// rank computations.
struct TransversalWitness {
  std::vector<int> reps;
  bool tiles_left = false;
  bool tiles_right = false;
  bool spans_certified = false;
};
TransversalWitness quasi_normal_witness_group(const FiniteGroup& G, const std::vector<int>& K,
                                              int g);

// Representation of G on a finite coordinate space.
struct GModule {
  const FiniteGroup* G = nullptr;
  int mdim = 0;
  std::vector<LinMap> rho;
};

std::vector<Verdict> check_gmodule(const GModule& M);
GModule regular_representation(const FiniteGroup& G);

// Twisted dual action (g . mu)(m) = mu(g^{-1} m) on functional rows.
std::vector<Rat> dual_module_action(const GModule& M, int g, const std::vector<Rat>& mu);

// Contragredient matrix transpose(rho(g)^{-1}) acting on functional rows,
// computed independently of dual_module_action.
std::vector<Rat> contragredient_action(const GModule& M, int g, const std::vector<Rat>& mu);

// Coalgebra on the dual basis of the group algebra of the subgroup K:
// delta dual to multiplication, counit dual to the unit.
Coalgebra subgroup_dual_coalgebra(const FiniteGroup& G, const std::vector<int>& K);

// The dual space of M as a comodule over subgroup_dual_coalgebra(K):
// Delta mu = sum_k delta_k (x) (mu o rho(k)).
Comodule dual_rep_comodule(const GModule& M, const std::vector<int>& K,
                           std::shared_ptr<const Coalgebra> dual_coalg);

// The all-ones functional on the K-dual coalgebra, the trivial character.
FreeVec trivial_character_row(int k_order);

}  // namespace comeasure
