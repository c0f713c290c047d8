#include "npoly.hpp"

#include <cassert>
#include <stdexcept>

namespace comeasure {

RatMatrix NPoly::scalar_mat(int w, const Rat& c) {
  RatMatrix m(w, w);
  for (int i = 0; i < w; ++i) m.at(i, i) = c;
  return m;
}

NPoly NPoly::constant(const RatMatrix& m) {
  assert(m.rows() == m.cols());
  NPoly p(m.rows());
  p.coeffs_.push_back(m);
  p.trim();
  return p;
}

NPoly NPoly::variable(int w) {
  NPoly p(w);
  p.coeffs_.push_back(RatMatrix(w, w));
  p.coeffs_.push_back(scalar_mat(w, Rat(1)));
  return p;
}

RatMatrix NPoly::coeff(int k) const {
  if (k < 0 || k >= int(coeffs_.size())) return RatMatrix(w_, w_);
  return coeffs_[k];
}

void NPoly::set_coeff(int k, const RatMatrix& m) {
  assert(m.rows() == w_ && m.cols() == w_);
  if (k >= int(coeffs_.size())) coeffs_.resize(k + 1, RatMatrix(w_, w_));
  coeffs_[k] = m;
  trim();
}

void NPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero_matrix()) coeffs_.pop_back();
}

RatMatrix NPoly::eval(long n) const { return eval(Int(n)); }

RatMatrix NPoly::eval(const Int& n) const {
  RatMatrix acc(w_, w_);
  for (int k = int(coeffs_.size()) - 1; k >= 0; --k) {
    // Horner step: acc = acc * n + c_k
    RatMatrix next(w_, w_);
    for (int i = 0; i < w_; ++i)
      for (int j = 0; j < w_; ++j) next.at(i, j) = acc.at(i, j) * Rat(n) + coeffs_[k].at(i, j);
    acc = next;
  }
  return acc;
}

NPoly NPoly::shift_arg(long k) const {
  // Horner in (n + k): fold highest coefficient down, multiplying by n + k.
  NPoly acc(w_);
  NPoly lin = variable(w_);
  lin.coeffs_[0] = scalar_mat(w_, rat(k));
  for (int d = int(coeffs_.size()) - 1; d >= 0; --d) {
    acc = acc * lin + constant(coeffs_[d]);
  }
  return acc;
}

NPoly NPoly::trace() const {
  NPoly t(1);
  t.coeffs_.resize(coeffs_.size(), RatMatrix(1, 1));
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    Rat tr(0);
    for (int i = 0; i < w_; ++i) tr += coeffs_[d].at(i, i);
    t.coeffs_[d].at(0, 0) = tr;
  }
  t.trim();
  return t;
}

NPoly NPoly::operator+(const NPoly& o) const {
  assert(w_ == o.w_);
  NPoly r(w_);
  std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  r.coeffs_.resize(n, RatMatrix(w_, w_));
  for (std::size_t d = 0; d < n; ++d) {
    r.coeffs_[d] = (d < coeffs_.size() ? coeffs_[d] : RatMatrix(w_, w_));
    if (d < o.coeffs_.size()) r.coeffs_[d] = r.coeffs_[d] + o.coeffs_[d];
  }
  r.trim();
  return r;
}

NPoly NPoly::operator-(const NPoly& o) const { return *this + o.scale(Rat(-1)); }

NPoly NPoly::operator*(const NPoly& o) const {
  assert(w_ == o.w_);
  NPoly r(w_);
  if (is_zero() || o.is_zero()) return r;
  r.coeffs_.resize(coeffs_.size() + o.coeffs_.size() - 1, RatMatrix(w_, w_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
  r.trim();
  return r;
}

NPoly NPoly::scale(const Rat& s) const {
  NPoly r(w_);
  if (comeasure::is_zero(s)) return r;
  r.coeffs_ = coeffs_;
  for (auto& m : r.coeffs_)
    for (int i = 0; i < w_; ++i)
      for (int j = 0; j < w_; ++j) m.at(i, j) *= s;
  r.trim();
  return r;
}

bool NPoly::operator==(const NPoly& o) const { return w_ == o.w_ && coeffs_ == o.coeffs_; }

}  // namespace comeasure
