#include "multipoly.hpp"

#include <cassert>
#include <functional>
#include <sstream>

namespace comeasure {

MultiPoly MultiPoly::constant(int nv, const Rat& c) {
  MultiPoly p(nv);
  p.add_term(std::vector<int>(nv, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nv, int index) {
  assert(index >= 0 && index < nv);
  MultiPoly p(nv);
  std::vector<int> e(nv, 0);
  e[index] = 1;
  p.add_term(e, Rat(1));
  return p;
}

MultiPoly MultiPoly::monomial(int nv, const std::vector<int>& exps, const Rat& c) {
  assert(int(exps.size()) == nv);
  MultiPoly p(nv);
  p.add_term(exps, c);
  return p;
}

void MultiPoly::add_term(const std::vector<int>& exps, const Rat& c) {
  if (comeasure::is_zero(c)) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (comeasure::is_zero(it->second)) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  assert(nv_ == o.nv_);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  assert(nv_ == o.nv_);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  assert(nv_ == o.nv_);
  MultiPoly r(nv_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(nv_);
      for (int i = 0; i < nv_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

MultiPoly MultiPoly::scale(const Rat& s) const {
  MultiPoly r(nv_);
  for (const auto& [e, c] : terms_) r.add_term(e, c * s);
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r(nv_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    std::vector<int> d = e;
    d[var] -= 1;
    r.add_term(d, c * Rat(e[var]));
  }
  return r;
}

std::string MultiPoly::to_string(const std::vector<std::string>& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (int i = 0; i < nv_; ++i) {
      if (e[i] == 0) continue;
      os << "*" << vars[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

PolyVec pv_add(const PolyVec& a, const PolyVec& b) {
  assert(a.size() == b.size());
  PolyVec r;
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

PolyVec pv_sub(const PolyVec& a, const PolyVec& b) {
  assert(a.size() == b.size());
  PolyVec r;
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

PolyVec pv_scale_poly(const MultiPoly& a, const PolyVec& m) {
  PolyVec r;
  for (const auto& comp : m) r.push_back(a * comp);
  return r;
}

bool pv_equal(const PolyVec& a, const PolyVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

PolyMat pm_zero(int r, int nv) {
  return PolyMat(r, std::vector<MultiPoly>(r, MultiPoly(nv)));
}

PolyMat pm_add(const PolyMat& a, const PolyMat& b) {
  PolyMat r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] = a[i][j] + b[i][j];
  return r;
}

PolyMat pm_sub(const PolyMat& a, const PolyMat& b) {
  PolyMat r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

PolyMat pm_mul(const PolyMat& a, const PolyMat& b) {
  std::size_t n = a.size();
  int nv = n && !a[0].empty() ? a[0][0].nv() : 0;
  PolyMat r = pm_zero(int(n), nv);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
  return r;
}

PolyMat pm_derivative(const PolyMat& a, int var) {
  PolyMat r = a;
  for (auto& row : r)
    for (auto& p : row) p = p.derivative(var);
  return r;
}

PolyVec pm_apply(const PolyMat& a, const PolyVec& m) {
  PolyVec r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    MultiPoly acc(m.empty() ? 0 : m[0].nv());
    for (std::size_t j = 0; j < m.size(); ++j) acc = acc + a[i][j] * m[j];
    r.push_back(acc);
  }
  return r;
}

bool pm_equal(const PolyMat& a, const PolyMat& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!pv_equal(a[i], b[i])) return false;
  return true;
}

std::vector<MultiPoly> monomials_up_to(int nv, int deg) {
  std::vector<MultiPoly> out;
  std::vector<int> e(nv, 0);
  // Enumerate by total degree, then lexicographically within a degree.
  for (int d = 0; d <= deg; ++d) {
    std::vector<std::vector<int>> level;
    std::vector<int> cur(nv, 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
      if (pos == nv - 1) {
        cur[pos] = rem;
        level.push_back(cur);
        return;
      }
      for (int k = rem; k >= 0; --k) {
        cur[pos] = k;
        rec(pos + 1, rem - k);
      }
    };
    if (nv == 0) {
      if (d == 0) level.push_back({});
    } else {
      rec(0, d);
    }
    for (const auto& exps : level) out.push_back(MultiPoly::monomial(nv, exps, Rat(1)));
  }
  return out;
}

}  // namespace comeasure
