#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

#include "freevec.hpp"
#include "verdict.hpp"

namespace comeasure {

struct TruncationOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generators of the oscillator algebra with derivation: modes a_m for
// m != 0, the central element c, and the grading derivation d. Relations:
// [a_m, a_n] = m delta_{m,-n} c, [d, a_m] = m a_m, c central.
struct OscGen {
  enum Kind { Mode, Central, Derivation } kind = Mode;
  int m = 0;  // meaningful for Mode only

  static OscGen mode(int m) { return {Mode, m}; }
  static OscGen central() { return {Central, 0}; }
  static OscGen derivation() { return {Derivation, 0}; }
};

// Normal-ordered monomial: lowering modes a_{-i} with the i weakly
// increasing, then c and d powers, then raising modes a_j with j weakly
// increasing.
struct OscMonomial {
  std::vector<int> low;  // i values for a_{-i}, ascending
  int cpow = 0;
  int dpow = 0;
  std::vector<int> rai;  // j values for a_j, ascending

  auto operator<=>(const OscMonomial&) const = default;
  int lowering_degree() const;
  std::vector<OscGen> word() const;
};

using OscSum = std::map<OscMonomial, Rat>;

// PBW normal form of a generator word, exact. Throws on a_0.
OscSum straighten_word(const std::vector<OscGen>& word, const Rat& coeff = Rat(1));
OscSum osc_add(const OscSum& a, const OscSum& b);
OscSum osc_scale(const OscSum& a, const Rat& s);
OscSum osc_mul(const OscSum& a, const OscSum& b);

// Level-k Fock module truncated at total energy N. States are indexed by
// partitions; the energy-n slice has one basis vector per partition of n.
struct FockModule {
  Rat level;
  int trunc = 0;
  std::vector<std::vector<std::vector<int>>> parts;  // parts[n] = partitions of n, descending parts
  std::vector<long> offset;                          // flat index of the first state at energy n

  long dim() const { return offset.back() + long(parts.back().size()); }
  long flat(int energy, int idx) const { return offset[energy] + idx; }
  int energy_of(long label) const;
  int index_within(long label) const;
};

FockModule make_fock(const Rat& level, int trunc);
int partition_index(const FockModule& F, int energy, const std::vector<int>& partition);

// Action of one generator on a state vector (flat labels). a_{-n} appends
// a part, a_n removes one with multiplicity times n times the level, c
// scales by the level, d by minus the energy, a_0 by zero. Raising past
// the truncation throws.
FreeVec fock_apply_gen(const FockModule& F, OscGen g, const FreeVec& v);
// Word applied right to left.
FreeVec fock_apply_word(const FockModule& F, const std::vector<OscGen>& word, const FreeVec& v);
FreeVec fock_apply_sum(const FockModule& F, const OscSum& s, const FreeVec& v);

// Functional concentrated on one energy slice of the Fock module.
struct GradedDualElement {
  int energy = 0;
  FreeVec row;  // over partition indices within the slice
};

// Twisted dual action (g . mu)(v) = mu(s(g) v) with s(a_m) = -a_{-m},
// s(c) = c, s(d) = -d. The result is again concentrated on one slice.
GradedDualElement dual_fock_apply(const FockModule& F, OscGen g, const GradedDualElement& mu);

// [a_m ., a_n .] = m delta_{m,-n} level on every dual slice up to
// trunc - |m| - |n|.
Verdict check_level(const FockModule& F, int m, int n);

struct RestrictionReport {
  std::vector<Verdict> annihilation;      // raising words of degree > n kill energy-n duals
  std::vector<int> dual_d_spectrum;       // eigenvalue on each energy slice 0..n_max
  std::string boundedness;                // which side the dual spectrum is bounded on
  std::vector<long> graded_dims;          // partition counts 0..n_max
  bool passed() const;
};
RestrictionReport restriction_energy_check(const FockModule& F, int n_max);

// PBW basis of the span of lowering monomials of total degree <= the
// lowering degree of the word, with a straightening certificate that left
// multiplication by the nonnegative part keeps lowering degrees within
// that bound.
struct OscWitness {
  std::vector<OscMonomial> basis;
  bool certified = false;
};
OscWitness quasi_normal_witness_oscillator(const std::vector<OscGen>& word, int degree_cap = 8);

std::string osc_monomial_string(const OscMonomial& m);

}  // namespace comeasure
