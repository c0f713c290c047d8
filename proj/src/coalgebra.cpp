#include "coalgebra.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace comeasure {

int Coalgebra::index_of(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

int Comodule::index_of(const std::string& label) const {
  for (int i = 0; i < dim(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

namespace {

using Tensor3 = std::map<std::tuple<int, int, int>, Rat>;

void tensor3_add(Tensor3& t, int a, int b, int c, const Rat& q) {
  auto key = std::make_tuple(a, b, c);
  auto it = t.find(key);
  if (it == t.end()) {
    if (!is_zero(q)) t.emplace(key, q);
  } else {
    it->second += q;
    if (is_zero(it->second)) t.erase(it);
  }
}

std::string first_diff(const Tensor3& lhs, const Tensor3& rhs, const std::vector<std::string>& l1,
                       const std::vector<std::string>& l2, const std::vector<std::string>& l3) {
  for (const auto& [key, q] : lhs) {
    auto it = rhs.find(key);
    if (it == rhs.end() || !(it->second == q)) {
      auto [a, b, c] = key;
      std::ostringstream os;
      os << "term " << l1[a] << " (x) " << l2[b] << " (x) " << l3[c] << ": " << rat_str(q) << " vs "
         << rat_str(it == rhs.end() ? Rat(0) : it->second);
      return os.str();
    }
  }
  for (const auto& [key, q] : rhs) {
    if (!lhs.count(key)) {
      auto [a, b, c] = key;
      std::ostringstream os;
      os << "term " << l1[a] << " (x) " << l2[b] << " (x) " << l3[c] << ": 0 vs " << rat_str(q);
      return os.str();
    }
  }
  return "";
}

}  // namespace

std::vector<Verdict> check_coalgebra(const Coalgebra& C) {
  std::vector<Verdict> out;
  bool coassoc = true, counit = true;
  std::string w_coassoc, w_counit;
  for (int i = 0; i < C.dim() && (coassoc || counit); ++i) {
    if (coassoc) {
      Tensor3 lhs, rhs;
      for (const auto& [a, b, q] : C.delta[i])
        for (const auto& [a1, a2, q2] : C.delta[a]) tensor3_add(lhs, a1, a2, b, q * q2);
      for (const auto& [a, b, q] : C.delta[i])
        for (const auto& [b1, b2, q2] : C.delta[b]) tensor3_add(rhs, a, b1, b2, q * q2);
      std::string diff = first_diff(lhs, rhs, C.labels, C.labels, C.labels);
      if (!diff.empty()) {
        coassoc = false;
        w_coassoc = "basis element " + C.labels[i] + ", " + diff;
      }
    }
    if (counit) {
      FreeVec left, right;
      for (const auto& [a, b, q] : C.delta[i]) {
        left.add(b, q * C.counit[a]);
        right.add(a, q * C.counit[b]);
      }
      FreeVec self = FreeVec::unit(i);
      if (!(left == self) || !(right == self)) {
        counit = false;
        w_counit = "basis element " + C.labels[i];
      }
    }
  }
  out.push_back(coassoc ? Verdict::ok("coassociativity") : Verdict::fail("coassociativity", w_coassoc));
  out.push_back(counit ? Verdict::ok("counit") : Verdict::fail("counit", w_counit));
  return out;
}

bool is_grouplike(const Coalgebra& C, int i) {
  if (!(C.counit[i] == Rat(1))) return false;
  const auto& d = C.delta[i];
  return d.size() == 1 && std::get<0>(d[0]) == i && std::get<1>(d[0]) == i &&
         std::get<2>(d[0]) == Rat(1);
}

std::vector<Verdict> check_comodule(const Comodule& D) {
  const Coalgebra& C = *D.coalg;
  std::vector<Verdict> out;
  bool counit = true, compat = true;
  std::string w_counit, w_compat;
  for (int i = 0; i < D.dim() && (counit || compat); ++i) {
    if (counit) {
      FreeVec img;
      for (const auto& [c, d, q] : D.delta[i]) img.add(d, q * C.counit[c]);
      if (!(img == FreeVec::unit(i))) {
        counit = false;
        w_counit = "basis element " + D.labels[i];
      }
    }
    if (compat) {
      Tensor3 lhs, rhs;  // legs: coalg, coalg, comodule
      for (const auto& [c, d, q] : D.delta[i])
        for (const auto& [c1, c2, q2] : C.delta[c]) tensor3_add(lhs, c1, c2, d, q * q2);
      for (const auto& [c, d, q] : D.delta[i])
        for (const auto& [c2, d2, q2] : D.delta[d]) tensor3_add(rhs, c, c2, d2, q * q2);
      std::string diff = first_diff(lhs, rhs, C.labels, C.labels, D.labels);
      if (!diff.empty()) {
        compat = false;
        w_compat = "basis element " + D.labels[i] + ", " + diff;
      }
    }
  }
  out.push_back(counit ? Verdict::ok("comodule counit") : Verdict::fail("comodule counit", w_counit));
  out.push_back(compat ? Verdict::ok("coaction compatibility")
                       : Verdict::fail("coaction compatibility", w_compat));
  return out;
}

FreeVec dual_action(const Comodule& D, const std::vector<Rat>& f, const FreeVec& v) {
  FreeVec out;
  for (const auto& [label, coeff] : v.terms())
    for (const auto& [c, d, q] : D.delta[int(label)]) out.add(d, coeff * q * f[c]);
  return out;
}

std::vector<FreeVec> fd_closure(const Comodule& D, const FreeVec& v) {
  SpanBuilder span;
  std::vector<FreeVec> work;
  if (span.insert(v)) work.push_back(v);
  int cdim = D.coalg->dim();
  while (!work.empty()) {
    FreeVec cur = std::move(work.back());
    work.pop_back();
    for (int c = 0; c < cdim; ++c) {
      std::vector<Rat> f(cdim, Rat(0));
      f[c] = 1;
      FreeVec img = dual_action(D, f, cur);
      if (span.insert(img)) work.push_back(std::move(img));
    }
  }
  return span.basis();
}

bool is_subcomodule(const Comodule& D, const std::vector<FreeVec>& rows) {
  SpanBuilder span;
  for (const auto& r : rows) span.insert(r);
  int cdim = D.coalg->dim();
  for (const auto& r : rows) {
    // Group the coaction of r by coalgebra leg and test each component.
    std::vector<FreeVec> comp(cdim);
    for (const auto& [label, coeff] : r.terms())
      for (const auto& [c, d, q] : D.delta[int(label)]) comp[c].add(d, coeff * q);
    for (int c = 0; c < cdim; ++c)
      if (!span.contains(comp[c])) return false;
  }
  return true;
}

bool is_subcoalgebra(const Coalgebra& C, const std::vector<FreeVec>& rows) {
  SpanBuilder span;
  for (const auto& r : rows) span.insert(r);
  for (const auto& r : rows) {
    // Components of Delta r grouped by either leg must stay inside the span.
    std::vector<FreeVec> by_left(C.dim()), by_right(C.dim());
    for (const auto& [label, coeff] : r.terms())
      for (const auto& [a, b, q] : C.delta[int(label)]) {
        by_left[a].add(b, coeff * q);
        by_right[b].add(a, coeff * q);
      }
    for (int i = 0; i < C.dim(); ++i)
      if (!span.contains(by_left[i]) || !span.contains(by_right[i])) return false;
  }
  return true;
}

std::vector<FreeVec> restrict_comodule(const Comodule& D, const std::vector<FreeVec>& F) {
  const Coalgebra& C = *D.coalg;
  if (!is_subcoalgebra(C, F)) throw std::invalid_argument("restriction target is not a subcoalgebra");
  SpanBuilder fspan;
  for (const auto& r : F) fspan.insert(r);
  // Residual after projecting each coalgebra basis vector to span(F).
  std::vector<FreeVec> resid;
  for (int c = 0; c < C.dim(); ++c) resid.push_back(fspan.reduce(FreeVec::unit(c)));
  // Unknown d = sum x_i e_i; the condition is that for every comodule leg
  // d', the coalgebra component of Delta d reduces to zero mod F.
  // Constraint rows are indexed by (coalgebra label, comodule label).
  std::map<std::pair<long, long>, std::map<int, Rat>> rows;
  for (int i = 0; i < D.dim(); ++i)
    for (const auto& [c, d2, q] : D.delta[i])
      for (const auto& [rc, rq] : resid[c].terms()) {
        auto& row = rows[{rc, d2}];
        auto it = row.find(i);
        if (it == row.end())
          row.emplace(i, q * rq);
        else {
          it->second += q * rq;
          if (is_zero(it->second)) row.erase(it);
        }
      }
  RatMatrix M(0, D.dim());
  for (const auto& [key, row] : rows) {
    std::vector<Rat> r(D.dim(), Rat(0));
    for (const auto& [i, q] : row) r[i] = q;
    M.append_row(r);
  }
  std::vector<FreeVec> out;
  if (M.rows() == 0) {
    for (int i = 0; i < D.dim(); ++i) out.push_back(FreeVec::unit(i));
    return out;
  }
  for (const auto& v : nullspace(M)) {
    FreeVec d;
    for (int i = 0; i < D.dim(); ++i) d.add(i, v[i]);
    out.push_back(std::move(d));
  }
  return out;
}

Coalgebra trivial_coalgebra() {
  Coalgebra C;
  C.labels = {"g"};
  C.delta = {{{0, 0, Rat(1)}}};
  C.counit = {Rat(1)};
  return C;
}

Coalgebra primitive_pair_coalgebra() {
  Coalgebra C;
  C.labels = {"g", "gamma"};
  C.delta = {{{0, 0, Rat(1)}}, {{0, 1, Rat(1)}, {1, 0, Rat(1)}}};
  C.counit = {Rat(1), Rat(0)};
  return C;
}

Coalgebra taylor_coalgebra(int count) {
  Coalgebra C;
  for (int j = 0; j < count; ++j) {
    C.labels.push_back("b" + std::to_string(j));
    std::vector<std::tuple<int, int, Rat>> row;
    for (int k = 0; k <= j; ++k) row.emplace_back(k, j - k, Rat(1));
    C.delta.push_back(std::move(row));
    C.counit.push_back(j == 0 ? Rat(1) : Rat(0));
  }
  return C;
}

Coalgebra difference_coalgebra() {
  Coalgebra C;
  C.labels = {"K", "Kinv", "E"};
  C.delta = {{{0, 0, Rat(1)}},
             {{1, 1, Rat(1)}},
             {{2, 0, Rat(1)}, {1, 2, Rat(1)}}};
  C.counit = {Rat(1), Rat(1), Rat(0)};
  return C;
}

Comodule taylor_chain_comodule(std::shared_ptr<const Coalgebra> taylor, int len) {
  if (taylor->dim() < len) throw std::invalid_argument("chain longer than coalgebra support");
  Comodule D;
  D.coalg = std::move(taylor);
  for (int i = 0; i < len; ++i) {
    D.labels.push_back("e" + std::to_string(i));
    std::vector<std::tuple<int, int, Rat>> row;
    for (int k = 0; k <= i; ++k) row.emplace_back(k, i - k, Rat(1));
    D.delta.push_back(std::move(row));
  }
  return D;
}

Comodule comodule_direct_sum(const Comodule& a, const Comodule& b) {
  if (a.coalg != b.coalg) throw std::invalid_argument("direct sum over different coalgebras");
  Comodule D;
  D.coalg = a.coalg;
  int off = a.dim();
  for (int i = 0; i < a.dim(); ++i) {
    D.labels.push_back(a.labels[i] + ".l");
    D.delta.push_back(a.delta[i]);
  }
  for (int i = 0; i < b.dim(); ++i) {
    D.labels.push_back(b.labels[i] + ".r");
    std::vector<std::tuple<int, int, Rat>> row;
    for (const auto& [c, d, q] : b.delta[i]) row.emplace_back(c, d + off, q);
    D.delta.push_back(std::move(row));
  }
  return D;
}

Comodule change_basis(const Comodule& D, const RatMatrix& P) {
  int n = D.dim();
  if (P.rows() != n || P.cols() != n) throw std::invalid_argument("basis matrix has wrong shape");
  RatMatrix Pinv;
  if (!invert(P, Pinv)) throw std::invalid_argument("basis matrix is singular");
  Comodule out;
  out.coalg = D.coalg;
  int cdim = D.coalg->dim();
  for (int i = 0; i < n; ++i) {
    out.labels.push_back("f" + std::to_string(i));
    // Coaction of the new basis vector P(:,i), re-expressed through Pinv.
    std::map<std::pair<int, int>, Rat> acc;
    for (int j = 0; j < n; ++j) {
      if (is_zero(P.at(j, i))) continue;
      for (const auto& [c, d, q] : D.delta[j]) {
        Rat scaled = P.at(j, i) * q;
        for (int l = 0; l < n; ++l) {
          Rat coeff = scaled * Pinv.at(l, d);
          if (!is_zero(coeff)) {
            auto key = std::make_pair(c, l);
            auto it = acc.find(key);
            if (it == acc.end())
              acc.emplace(key, coeff);
            else {
              it->second += coeff;
              if (is_zero(it->second)) acc.erase(it);
            }
          }
        }
      }
    }
    std::vector<std::tuple<int, int, Rat>> row;
    for (const auto& [key, q] : acc) row.emplace_back(key.first, key.second, q);
    out.delta.push_back(std::move(row));
    (void)cdim;
  }
  return out;
}

}  // namespace comeasure
