#pragma once

#include <string>
#include <vector>

#include "freevec.hpp"
#include "verdict.hpp"

namespace comeasure {

// Functional on Q[x] vanishing on the ideal generated by a monic modulus
// polynomial p. Values on all monomials follow the linear recurrence with
// characteristic polynomial p from the stored initial segment.
struct FiniteDualElement {
  std::vector<Rat> modulus;  // coefficients p_0..p_d with p_d = 1
  std::vector<Rat> init;     // values on x^0..x^{d-1}

  int deg() const { return int(modulus.size()) - 1; }
};

// Throws std::invalid_argument unless p is monic and the initial segment
// has length deg p.
FiniteDualElement fd_from_recurrence(const std::vector<Rat>& monic_p, const std::vector<Rat>& initial);

Rat fd_evaluate(const FiniteDualElement& a, long n);

// Coefficients of x^n reduced modulo p, length deg p.
std::vector<Rat> fd_reduce_power(const FiniteDualElement& a, long n);

// The comultiplication of the functional as a matrix on A/(p) (x) A/(p):
// entry (i, j) is the value on x^i x^j.
RatMatrix fd_delta(const FiniteDualElement& a);

// Pairing of fd_delta against x^a (x) x^b for arbitrary exponents, going
// through reduction modulo p.
Rat fd_delta_pair(const FiniteDualElement& a, long i, long j);

// Multiplicativity on all exponent pairs up to the bound.
bool fd_is_grouplike(const FiniteDualElement& a, int bound = 10);

// Stock functionals.
FiniteDualElement fd_eval_at_one();   // p = x - 1
FiniteDualElement fd_geometric2();    // p = x - 2
FiniteDualElement fd_fibonacci();     // p = x^2 - x - 1
FiniteDualElement fd_ramp();          // p = (x - 1)^2, values n + 1

}  // namespace comeasure
