#include "liealg.hpp"

namespace comeasure {

int LieAlgebraFD::index_of(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

FreeVec LieAlgebraFD::bracket_of(const FreeVec& a, const FreeVec& b) const {
  FreeVec out;
  for (const auto& [i, ci] : a.terms())
    for (const auto& [j, cj] : b.terms()) {
      Rat s = ci * cj;
      for (const auto& [k, ck] : bracket[int(i)][int(j)].terms()) out.add(k, s * ck);
    }
  return out;
}

std::vector<Verdict> check_lie(const LieAlgebraFD& L) {
  std::vector<Verdict> out;
  int n = L.dim();
  bool anti = true;
  std::string w_anti;
  for (int i = 0; i < n && anti; ++i)
    for (int j = 0; j < n; ++j) {
      FreeVec s = L.bracket[i][j] + L.bracket[j][i];
      if (!s.empty()) {
        anti = false;
        w_anti = "(" + L.labels[i] + ", " + L.labels[j] + ")";
        break;
      }
    }
  out.push_back(anti ? Verdict::ok("antisymmetry") : Verdict::fail("antisymmetry", w_anti));
  bool jacobi = true;
  std::string w_jac;
  for (int i = 0; i < n && jacobi; ++i)
    for (int j = 0; j < n && jacobi; ++j)
      for (int k = 0; k < n; ++k) {
        FreeVec s = L.bracket_of(FreeVec::unit(i), L.bracket[j][k]) +
                    L.bracket_of(FreeVec::unit(j), L.bracket[k][i]) +
                    L.bracket_of(FreeVec::unit(k), L.bracket[i][j]);
        if (!s.empty()) {
          jacobi = false;
          w_jac = "(" + L.labels[i] + ", " + L.labels[j] + ", " + L.labels[k] + ")";
          break;
        }
      }
  out.push_back(jacobi ? Verdict::ok("jacobi") : Verdict::fail("jacobi", w_jac));
  return out;
}

RatMatrix ad_matrix(const LieAlgebraFD& L, int i) {
  int n = L.dim();
  RatMatrix M(n, n);
  for (int j = 0; j < n; ++j)
    for (const auto& [k, c] : L.bracket[i][j].terms()) M.at(int(k), j) = c;
  return M;
}

Rat killing_form(const LieAlgebraFD& L, int i, int j) {
  RatMatrix prod = ad_matrix(L, i) * ad_matrix(L, j);
  Rat tr(0);
  for (int k = 0; k < L.dim(); ++k) tr += prod.at(k, k);
  return tr;
}

LieAlgebraFD sl2() {
  LieAlgebraFD L;
  L.labels = {"e", "h", "f"};
  int e = 0, h = 1, f = 2;
  L.bracket.assign(3, std::vector<FreeVec>(3));
  auto set = [&](int i, int j, const FreeVec& v) {
    L.bracket[i][j] = v;
    FreeVec neg = v;
    neg *= Rat(-1);
    L.bracket[j][i] = neg;
  };
  set(h, e, Rat(2) * FreeVec::unit(e));
  set(h, f, Rat(-2) * FreeVec::unit(f));
  set(e, f, FreeVec::unit(h));
  return L;
}

}  // namespace comeasure
