#include "algebra.hpp"

#include <stdexcept>

namespace comeasure {

int Algebra::index_of(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

FreeVec Algebra::multiply(const FreeVec& a, const FreeVec& b) const {
  FreeVec out;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) {
      Rat s = ci * cj;
      for (const auto& [k, ck] : mult[int(i)][int(j)].terms()) out.add(k, s * ck);
    }
  return out;
}

std::vector<Verdict> check_algebra(const Algebra& A) {
  std::vector<Verdict> out;
  int n = A.dim();
  bool assoc = true;
  std::string w_assoc;
  for (int i = 0; i < n && assoc; ++i)
    for (int j = 0; j < n && assoc; ++j)
      for (int k = 0; k < n && assoc; ++k) {
        FreeVec lhs = A.multiply(A.mult[i][j], FreeVec::unit(k));
        FreeVec rhs = A.multiply(FreeVec::unit(i), A.mult[j][k]);
        if (!(lhs == rhs)) {
          assoc = false;
          w_assoc = "(" + A.labels[i] + ", " + A.labels[j] + ", " + A.labels[k] + ")";
        }
      }
  out.push_back(assoc ? Verdict::ok("associativity") : Verdict::fail("associativity", w_assoc));
  bool unital = true;
  std::string w_unit;
  for (int i = 0; i < n && unital; ++i) {
    FreeVec e = FreeVec::unit(i);
    if (!(A.multiply(A.unit, e) == e) || !(A.multiply(e, A.unit) == e)) {
      unital = false;
      w_unit = A.labels[i];
    }
  }
  out.push_back(unital ? Verdict::ok("unit laws") : Verdict::fail("unit laws", w_unit));
  return out;
}

std::vector<FreeVec> center_basis(const Algebra& A) {
  int n = A.dim();
  // Rows: one constraint per (basis element, coordinate) pair of
  // a e_i - e_i a = 0; columns: coordinates of a.
  RatMatrix M(n * n, n);
  for (int j = 0; j < n; ++j) {
    FreeVec ej = FreeVec::unit(j);
    for (int i = 0; i < n; ++i) {
      FreeVec comm = A.multiply(ej, FreeVec::unit(i)) - A.multiply(FreeVec::unit(i), ej);
      for (const auto& [k, c] : comm.terms()) M.at(i * n + int(k), j) += c;
    }
  }
  std::vector<FreeVec> out;
  for (const auto& v : nullspace(M)) {
    FreeVec z;
    for (int j = 0; j < n; ++j) z.add(j, v[j]);
    out.push_back(std::move(z));
  }
  return out;
}

RatMatrix inner_derivation(const Algebra& A, const FreeVec& a) {
  int n = A.dim();
  RatMatrix M(n, n);
  for (int j = 0; j < n; ++j) {
    FreeVec img = A.multiply(a, FreeVec::unit(j)) - A.multiply(FreeVec::unit(j), a);
    for (const auto& [k, c] : img.terms()) M.at(int(k), j) = c;
  }
  return M;
}

LinMap LinMap::identity(int n) {
  LinMap m{n, n, {}};
  for (int i = 0; i < n; ++i) m.cols.push_back(FreeVec::unit(i));
  return m;
}

FreeVec LinMap::apply(const FreeVec& v) const {
  FreeVec out;
  for (const auto& [j, c] : v.terms()) {
    FreeVec scaled = cols[int(j)];
    scaled *= c;
    out += scaled;
  }
  return out;
}

LinMap compose(const LinMap& f, const LinMap& g) {
  if (f.dom != g.cod) throw std::invalid_argument("operator spaces do not compose");
  LinMap h{g.dom, f.cod, {}};
  for (int j = 0; j < g.dom; ++j) h.cols.push_back(f.apply(g.cols[j]));
  return h;
}

LinMap linmap_from_matrix(const RatMatrix& M) {
  LinMap m{M.cols(), M.rows(), {}};
  for (int j = 0; j < M.cols(); ++j) {
    FreeVec col;
    for (int i = 0; i < M.rows(); ++i) col.add(i, M.at(i, j));
    m.cols.push_back(std::move(col));
  }
  return m;
}

LinMap left_mult_map(const Algebra& A, int i) {
  LinMap m{A.dim(), A.dim(), {}};
  for (int j = 0; j < A.dim(); ++j) m.cols.push_back(A.mult[i][j]);
  return m;
}

Algebra upper_triangular2() {
  Algebra A;
  A.labels = {"E11", "E12", "E22"};
  auto unitvec = [](int i) { return FreeVec::unit(i); };
  FreeVec zero;
  A.mult = {
      {unitvec(0), unitvec(1), zero},
      {zero, zero, unitvec(1)},
      {zero, zero, unitvec(2)},
  };
  A.unit = unitvec(0) + unitvec(2);
  return A;
}

Algebra diagonal2() {
  Algebra A;
  A.labels = {"E11", "E22"};
  FreeVec zero;
  A.mult = {{FreeVec::unit(0), zero}, {zero, FreeVec::unit(1)}};
  A.unit = FreeVec::unit(0) + FreeVec::unit(1);
  return A;
}

Algebra cyclic_function_algebra(int n) {
  Algebra A;
  for (int i = 0; i < n; ++i) A.labels.push_back("chi" + std::to_string(i));
  A.mult.assign(n, std::vector<FreeVec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j) A.mult[i][j] = FreeVec::unit(i);
  for (int i = 0; i < n; ++i) A.unit.add(i, Rat(1));
  return A;
}

}  // namespace comeasure
