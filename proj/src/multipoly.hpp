#pragma once

#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace comeasure {

// Sparse multivariate polynomial over a fixed number of variables.
// Keys are exponent tuples; zero coefficients are never stored.
class MultiPoly {
 public:
  explicit MultiPoly(int nv = 0) : nv_(nv) {}

  static MultiPoly constant(int nv, const Rat& c);
  static MultiPoly variable(int nv, int index);
  static MultiPoly monomial(int nv, const std::vector<int>& exps, const Rat& c);

  int nv() const { return nv_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  void add_term(const std::vector<int>& exps, const Rat& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scale(const Rat& s) const;
  MultiPoly derivative(int var) const;
  bool operator==(const MultiPoly& o) const { return nv_ == o.nv_ && terms_ == o.terms_; }

  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  int nv_;
  std::map<std::vector<int>, Rat> terms_;
};

using PolyVec = std::vector<MultiPoly>;
using PolyMat = std::vector<std::vector<MultiPoly>>;

PolyVec pv_add(const PolyVec& a, const PolyVec& b);
PolyVec pv_sub(const PolyVec& a, const PolyVec& b);
PolyVec pv_scale_poly(const MultiPoly& a, const PolyVec& m);
bool pv_equal(const PolyVec& a, const PolyVec& b);
PolyMat pm_zero(int r, int nv);
PolyMat pm_add(const PolyMat& a, const PolyMat& b);
PolyMat pm_sub(const PolyMat& a, const PolyMat& b);
PolyMat pm_mul(const PolyMat& a, const PolyMat& b);
PolyMat pm_derivative(const PolyMat& a, int var);
PolyVec pm_apply(const PolyMat& a, const PolyVec& m);
bool pm_equal(const PolyMat& a, const PolyMat& b);

// All monomials of total degree <= deg, graded then lexicographic. The
// probe set used by the connection checks.
std::vector<MultiPoly> monomials_up_to(int nv, int deg);

}  // namespace comeasure
