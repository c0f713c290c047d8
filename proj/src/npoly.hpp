#pragma once

#include <vector>

#include "freevec.hpp"

namespace comeasure {

// Polynomial in one integer variable n with w-by-w rational matrix
// coefficients. Scalars are the w = 1 case. Trailing zero coefficients are
// trimmed, so the zero polynomial has an empty coefficient list.
class NPoly {
 public:
  explicit NPoly(int w = 1) : w_(w) {}

  static NPoly constant(const RatMatrix& m);
  static NPoly scalar(const Rat& c) { return constant(scalar_mat(1, c)); }
  // The polynomial n (times the identity).
  static NPoly variable(int w = 1);
  static RatMatrix scalar_mat(int w, const Rat& c);

  int w() const { return w_; }
  int degree() const { return int(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }

  RatMatrix coeff(int k) const;  // zero matrix beyond degree
  void set_coeff(int k, const RatMatrix& m);

  RatMatrix eval(long n) const;
  RatMatrix eval(const Int& n) const;

  // p(n + k) as a polynomial in n.
  NPoly shift_arg(long k) const;

  // Entrywise matrix trace, a scalar polynomial.
  NPoly trace() const;

  NPoly operator+(const NPoly& o) const;
  NPoly operator-(const NPoly& o) const;
  NPoly operator*(const NPoly& o) const;  // matrix product on coefficients
  NPoly scale(const Rat& s) const;
  bool operator==(const NPoly& o) const;

 private:
  void trim();
  int w_;
  std::vector<RatMatrix> coeffs_;  // coeffs_[k] multiplies n^k
};

}  // namespace comeasure
