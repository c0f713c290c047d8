#include "band.hpp"

#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace comeasure {

BandOperator BandOperator::identity_op(int w) {
  BandOperator b(w);
  b.set_generic(0, NPoly::constant(NPoly::scalar_mat(w, Rat(1))));
  b.normalize();
  return b;
}

BandOperator BandOperator::shift(int i) {
  BandOperator b(1);
  b.set_generic(i, NPoly::scalar(Rat(1)));
  b.normalize();
  return b;
}

BandOperator BandOperator::witt(int i) {
  BandOperator b(1);
  b.set_generic(i, NPoly::variable());
  b.normalize();
  return b;
}

BandOperator BandOperator::from_generic(int offset, const NPoly& p) {
  BandOperator b(p.w());
  b.set_generic(offset, p);
  b.normalize();
  return b;
}

BandOperator BandOperator::finite(int w, const std::map<std::pair<int, int>, RatMatrix>& entries) {
  BandOperator b(w);
  for (const auto& [key, m] : entries) b.set_exception(key.first, key.second, m);
  b.normalize();
  return b;
}

void BandOperator::set_generic(int offset, const NPoly& p) {
  if (p.w() != w_) throw std::invalid_argument("band width mismatch");
  if (p.is_zero()) return;
  auto it = generic_.find(offset);
  if (it == generic_.end()) {
    generic_.emplace(offset, p);
  } else {
    it->second = it->second + p;
    if (it->second.is_zero()) generic_.erase(it);
  }
  if (ngen_ < -offset) ngen_ = -offset;
}

void BandOperator::set_exception(int n, int offset, const RatMatrix& m) {
  if (n < 0 || n + offset < 0)
    throw std::invalid_argument("band exception entry maps outside the truncated basis");
  if (m.rows() != w_ || m.cols() != w_)
    throw std::invalid_argument("band width mismatch");
  if (m.is_zero_matrix()) return;
  auto key = std::make_pair(n, offset);
  auto it = exc_.find(key);
  if (it == exc_.end()) {
    exc_.emplace(key, m);
  } else {
    it->second = it->second + m;
    if (it->second.is_zero_matrix()) exc_.erase(it);
  }
  if (ngen_ < n + 1) ngen_ = n + 1;
}

int BandOperator::truncation_floor() const {
  int floor = 0;
  for (const auto& [k, p] : generic_)
    if (-k > floor) floor = -k;
  return floor;
}

void BandOperator::normalize() {
  for (auto it = exc_.begin(); it != exc_.end();)
    it = it->second.is_zero_matrix() ? exc_.erase(it) : std::next(it);
  for (auto it = generic_.begin(); it != generic_.end();)
    it = it->second.is_zero() ? generic_.erase(it) : std::next(it);
  int floor = truncation_floor();
  while (ngen_ > floor) {
    int n = ngen_ - 1;
    // Shrink only when row n already agrees with the generic law.
    bool agrees = true;
    auto lo = exc_.lower_bound({n, INT32_MIN});
    auto hi = exc_.lower_bound({n + 1, INT32_MIN});
    for (auto it = lo; it != hi && agrees; ++it)
      if (!generic_.count(it->first.second)) agrees = false;
    for (const auto& [k, p] : generic_) {
      if (!agrees) break;
      RatMatrix want = p.eval(long(n));
      auto it = exc_.find({n, k});
      RatMatrix have = it == exc_.end() ? RatMatrix(w_, w_) : it->second;
      if (!(want == have)) agrees = false;
    }
    if (!agrees) break;
    exc_.erase(lo, hi);
    --ngen_;
  }
}

std::map<long, RatMatrix> BandOperator::columns(long n) const {
  assert(n >= 0);
  std::map<long, RatMatrix> out;
  if (n >= ngen_) {
    for (const auto& [k, p] : generic_) {
      RatMatrix m = p.eval(n);
      if (!m.is_zero_matrix()) out.emplace(n + k, m);
    }
  } else {
    auto lo = exc_.lower_bound({int(n), INT32_MIN});
    auto hi = exc_.lower_bound({int(n) + 1, INT32_MIN});
    for (auto it = lo; it != hi; ++it) out.emplace(n + it->first.second, it->second);
  }
  return out;
}

FreeVec BandOperator::apply_scalar(long n) const {
  if (w_ != 1) throw std::logic_error("apply_scalar needs a width-1 band operator");
  FreeVec v;
  for (const auto& [m, blk] : columns(n)) v.add(m, blk.at(0, 0));
  return v;
}

BandOperator BandOperator::compose(const BandOperator& g) const {
  assert(w_ == g.w_);
  BandOperator h(w_);
  // Generic region: offsets add, and the outer polynomial is evaluated at
  // the shifted degree. Valid once both factors are in their generic rows.
  int start = std::max(0, g.ngen_);
  for (const auto& [k, q] : g.generic_) start = std::max(start, ngen_ - k);
  for (const auto& [k, q] : g.generic_)
    for (const auto& [j, p] : generic_) h.set_generic(j + k, p.shift_arg(k) * q);
  if (h.ngen_ < start) h.ngen_ = start;
  // Boundary rows computed by direct application.
  for (int n = 0; n < h.ngen_; ++n) {
    for (const auto& [mid, mg] : g.columns(n))
      for (const auto& [tgt, mf] : columns(mid)) h.set_exception(n, int(tgt - n), mf * mg);
  }
  h.normalize();
  return h;
}

BandOperator BandOperator::operator+(const BandOperator& o) const {
  assert(w_ == o.w_);
  BandOperator a = *this, b = o;
  int top = std::max(a.ngen_, b.ngen_);
  a.raise_ngen(top);
  b.raise_ngen(top);
  BandOperator h(w_);
  h.ngen_ = top;
  for (const auto& [k, p] : a.generic_) h.set_generic(k, p);
  for (const auto& [k, p] : b.generic_) h.set_generic(k, p);
  if (h.ngen_ < top) h.ngen_ = top;
  for (const auto& [key, m] : a.exc_) h.set_exception(key.first, key.second, m);
  for (const auto& [key, m] : b.exc_) h.set_exception(key.first, key.second, m);
  h.normalize();
  return h;
}

BandOperator BandOperator::operator-(const BandOperator& o) const { return *this + o.scale(Rat(-1)); }

BandOperator BandOperator::scale(const Rat& s) const {
  BandOperator h(w_);
  if (comeasure::is_zero(s)) return h;
  h.ngen_ = ngen_;
  for (const auto& [k, p] : generic_) h.generic_.emplace(k, p.scale(s));
  for (const auto& [key, m] : exc_) {
    RatMatrix sm = m;
    for (int i = 0; i < w_; ++i)
      for (int j = 0; j < w_; ++j) sm.at(i, j) *= s;
    h.exc_.emplace(key, sm);
  }
  h.normalize();
  return h;
}

bool BandOperator::operator==(const BandOperator& o) const {
  if (w_ != o.w_) return false;
  BandOperator a = *this, b = o;
  a.normalize();
  b.normalize();
  return a.ngen_ == b.ngen_ && a.generic_ == b.generic_ && a.exc_ == b.exc_;
}

bool BandOperator::is_zero_op() const {
  BandOperator a = *this;
  a.normalize();
  return a.generic_.empty() && a.exc_.empty();
}

Rat BandOperator::tau() const {
  auto it = generic_.find(0);
  if (it != generic_.end() && !it->second.trace().is_zero())
    throw DivergentTraceError("regularized trace undefined: generic diagonal has nonzero trace");
  Rat sum(0);
  for (const auto& [key, m] : exc_) {
    if (key.second != 0) continue;
    for (int i = 0; i < w_; ++i) sum += m.at(i, i);
  }
  return sum;
}

bool BandOperator::tau_defined() const {
  auto it = generic_.find(0);
  return it == generic_.end() || it->second.trace().is_zero();
}

void BandOperator::raise_ngen(int target) {
  for (int n = ngen_; n < target; ++n)
    for (const auto& [k, p] : generic_) {
      RatMatrix m = p.eval(long(n));
      if (!m.is_zero_matrix()) exc_.emplace(std::make_pair(n, k), m);
    }
  if (target > ngen_) ngen_ = target;
}

}  // namespace comeasure
