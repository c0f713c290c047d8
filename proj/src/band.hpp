#pragma once

#include <map>
#include <stdexcept>
#include <utility>

#include "npoly.hpp"

namespace comeasure {

struct DivergentTraceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Linear operator on the graded space span{x^0, x^1, ...} tensored with a
// coefficient column of width w. The action on x^n is a finite sum of
// offsets: x^n maps to sum_k M(n,k) x^{n+k}.
//
// Rows at or above the generic threshold n_gen follow polynomial law:
// M(n,k) = p_k(n) for the stored offsets k. Rows below n_gen are listed
// explicitly in an exception table; absent entries are zero. Anything that
// would land below degree 0 is truncated away, which the invariants encode
// by requiring n_gen >= -k for every generic offset.
//
// Two operators are equal iff they act identically; equality is decided by
// shrinking both to a canonical minimal threshold and comparing tables.
class BandOperator {
 public:
  explicit BandOperator(int w = 1) : w_(w), ngen_(0) {}

  static BandOperator zero(int w = 1) { return BandOperator(w); }
  static BandOperator identity_op(int w = 1);
  // x^n -> x^{n+i}, truncating below degree 0.
  static BandOperator shift(int i);
  // x^n -> n x^{n+i}, truncating below degree 0.
  static BandOperator witt(int i);
  // Single generic band: x^n -> p(n) x^{n+offset} for n >= threshold forced
  // by truncation.
  static BandOperator from_generic(int offset, const NPoly& p);
  // Finitely supported operator: explicit entries (n, offset) -> matrix,
  // zero on all rows beyond the listed ones.
  static BandOperator finite(int w, const std::map<std::pair<int, int>, RatMatrix>& entries);

  int w() const { return w_; }
  int n_gen() const { return ngen_; }
  const std::map<int, NPoly>& generic() const { return generic_; }
  const std::map<std::pair<int, int>, RatMatrix>& exceptions() const { return exc_; }

  // Image of the degree-n column: target degree -> w-by-w block.
  std::map<long, RatMatrix> columns(long n) const;
  // Scalar convenience (w must be 1): image of x^n as a sparse vector
  // labelled by degree.
  FreeVec apply_scalar(long n) const;

  // Composition: this applied after g.
  BandOperator compose(const BandOperator& g) const;
  BandOperator operator+(const BandOperator& o) const;
  BandOperator operator-(const BandOperator& o) const;
  BandOperator scale(const Rat& s) const;

  bool operator==(const BandOperator& o) const;
  bool is_zero_op() const;

  // Regularized trace: the sum of diagonal entries. Defined only when the
  // generic diagonal band has identically vanishing matrix trace, so the
  // sum has finite support; otherwise DivergentTraceError.
  Rat tau() const;
  bool tau_defined() const;

  // Materialize generic rows below the given threshold into the exception
  // table. Raises n_gen, never changes the action.
  void raise_ngen(int target);

 private:
  void set_generic(int offset, const NPoly& p);
  void set_exception(int n, int offset, const RatMatrix& m);
  int truncation_floor() const;
  void normalize();

  int w_;
  int ngen_;
  std::map<int, NPoly> generic_;
  std::map<std::pair<int, int>, RatMatrix> exc_;
};

}  // namespace comeasure
