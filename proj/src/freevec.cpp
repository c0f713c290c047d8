#include "freevec.hpp"

#include <cassert>

namespace comeasure {

void RatMatrix::append_row(const std::vector<Rat>& row) {
  assert(int(row.size()) == cols_ || rows_ == 0);
  if (rows_ == 0) cols_ = int(row.size());
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  assert(cols_ == o.rows_);
  RatMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (is_zero(aik)) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  RatMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

bool RatMatrix::is_zero_matrix() const {
  for (const auto& q : a_)
    if (!is_zero(q)) return false;
  return true;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& x) const {
  assert(int(x.size()) == cols_);
  std::vector<Rat> y(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!is_zero(at(i, j))) y[i] += at(i, j) * x[j];
  return y;
}

int RatMatrix::rref() {
  int lead = 0;
  for (int r = 0; r < rows_ && lead < cols_; ++r) {
    int i = r;
    while (i < rows_ && is_zero(at(i, lead))) ++i;
    if (i == rows_) {
      --r;
      ++lead;
      continue;
    }
    if (i != r)
      for (int j = 0; j < cols_; ++j) std::swap(at(i, j), at(r, j));
    Rat inv = at(r, lead);
    for (int j = 0; j < cols_; ++j) at(r, j) /= inv;
    for (int k = 0; k < rows_; ++k) {
      if (k == r || is_zero(at(k, lead))) continue;
      Rat f = at(k, lead);
      for (int j = 0; j < cols_; ++j) at(k, j) -= f * at(r, j);
    }
    ++lead;
  }
  int rank = 0;
  for (int r = 0; r < rows_; ++r)
    for (int j = 0; j < cols_; ++j)
      if (!is_zero(at(r, j))) {
        ++rank;
        break;
      }
  return rank;
}

int RatMatrix::rank() const {
  RatMatrix copy = *this;
  return copy.rref();
}

bool SpanBuilder::insert(FreeVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  long lead = v.terms().begin()->first;
  Rat inv = v.terms().begin()->second;
  v *= rat(1) / inv;
  // Clear the new pivot column out of existing rows.
  for (auto& [l, row] : pivots_) {
    Rat c = row.at(lead);
    if (!is_zero(c)) row -= c * v;
  }
  pivots_.emplace(lead, std::move(v));
  return true;
}

FreeVec SpanBuilder::reduce(FreeVec v) const {
  for (const auto& [lead, row] : pivots_) {
    Rat c = v.at(lead);
    if (!is_zero(c)) v -= c * row;
  }
  return v;
}

bool SpanBuilder::contains(FreeVec v) const { return reduce(std::move(v)).empty(); }

std::vector<FreeVec> SpanBuilder::basis() const {
  std::vector<FreeVec> out;
  out.reserve(pivots_.size());
  for (const auto& [l, row] : pivots_) out.push_back(row);
  return out;
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& A) {
  RatMatrix R = A;
  R.rref();
  int n = A.cols();
  std::vector<int> pivot_of_col(n, -1);
  for (int i = 0; i < R.rows(); ++i)
    for (int j = 0; j < n; ++j)
      if (!is_zero(R.at(i, j))) {
        pivot_of_col[j] = i;
        break;
      }
  std::vector<std::vector<Rat>> basis;
  for (int j = 0; j < n; ++j) {
    if (pivot_of_col[j] >= 0) continue;
    std::vector<Rat> v(n, Rat(0));
    v[j] = 1;
    for (int k = 0; k < n; ++k)
      if (pivot_of_col[k] >= 0) v[k] = -R.at(pivot_of_col[k], j);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool invert(const RatMatrix& A, RatMatrix& out) {
  assert(A.rows() == A.cols());
  int n = A.rows();
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = 1;
  }
  aug.rref();
  for (int i = 0; i < n; ++i)
    if (!(aug.at(i, i) == Rat(1))) return false;
  out = RatMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return true;
}

bool solve_linear(const RatMatrix& A, const std::vector<Rat>& b, std::vector<Rat>& x) {
  assert(int(b.size()) == A.rows());
  RatMatrix aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  aug.rref();
  x.assign(A.cols(), Rat(0));
  for (int i = 0; i < A.rows(); ++i) {
    int pivot = -1;
    for (int j = 0; j <= A.cols(); ++j)
      if (!is_zero(aug.at(i, j))) {
        pivot = j;
        break;
      }
    if (pivot == A.cols()) return false;  // row [0 ... 0 | c]
    if (pivot >= 0) x[pivot] = aug.at(i, A.cols());
  }
  return true;
}

}  // namespace comeasure
