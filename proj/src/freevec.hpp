#pragma once

#include <map>
#include <vector>

#include "rational.hpp"

namespace comeasure {

// Sparse vector in a free module with integer-indexed basis.
// Zero coefficients are never stored.
class FreeVec {
 public:
  FreeVec() = default;

  static FreeVec unit(long label, const Rat& coeff = Rat(1)) {
    FreeVec v;
    v.add(label, coeff);
    return v;
  }

  void add(long label, const Rat& coeff) {
    if (is_zero(coeff)) return;
    auto it = terms_.find(label);
    if (it == terms_.end()) {
      terms_.emplace(label, coeff);
    } else {
      it->second += coeff;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Rat at(long label) const {
    auto it = terms_.find(label);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<long, Rat>& terms() const { return terms_; }

  FreeVec& operator+=(const FreeVec& o) {
    for (const auto& [l, c] : o.terms_) add(l, c);
    return *this;
  }
  FreeVec& operator-=(const FreeVec& o) {
    for (const auto& [l, c] : o.terms_) add(l, -c);
    return *this;
  }
  FreeVec& operator*=(const Rat& s) {
    if (is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [l, c] : terms_) c *= s;
    return *this;
  }

  friend FreeVec operator+(FreeVec a, const FreeVec& b) { return a += b; }
  friend FreeVec operator-(FreeVec a, const FreeVec& b) { return a -= b; }
  friend FreeVec operator*(const Rat& s, FreeVec a) { return a *= s; }

  bool operator==(const FreeVec& o) const { return terms_ == o.terms_; }

 private:
  std::map<long, Rat> terms_;
};

// Dense matrix over the rationals. Sized for the structures handled here,
// which stay well under a few hundred rows.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols, Rat(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  void append_row(const std::vector<Rat>& row);

  static RatMatrix identity(int n);
  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero_matrix() const;

  std::vector<Rat> apply(const std::vector<Rat>& x) const;

  // In-place Gauss-Jordan, returns rank.
  int rref();
  int rank() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Row span with incremental membership tests, kept in echelon form keyed by
// pivot label. The workhorse behind closures and span-equality certificates.
class SpanBuilder {
 public:
  // Returns true if v enlarged the span.
  bool insert(FreeVec v);
  bool contains(FreeVec v) const;
  FreeVec reduce(FreeVec v) const;
  int dim() const { return int(pivots_.size()); }
  std::vector<FreeVec> basis() const;

 private:
  std::map<long, FreeVec> pivots_;  // pivot label -> row with leading coeff 1
};

// Solves A x = b exactly; returns false when inconsistent.
bool solve_linear(const RatMatrix& A, const std::vector<Rat>& b, std::vector<Rat>& x);

// Exact inverse; returns false for singular input.
bool invert(const RatMatrix& A, RatMatrix& out);

// Basis of the kernel of A.
std::vector<std::vector<Rat>> nullspace(const RatMatrix& A);

}  // namespace comeasure
