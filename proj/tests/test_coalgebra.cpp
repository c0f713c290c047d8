#include <memory>
#include <random>
#include <vector>

#include "builtins.hpp"
#include "coalgebra.hpp"
#include "doctest.h"

using namespace comeasure;

namespace {

// Reference closure dimension computed with dense matrices only: saturate
// the span of v under all dual basis functionals, re-echelonizing after
// every pass, until the rank stops growing.
int closure_dim_oracle(const Comodule& D, const FreeVec& v) {
  int n = D.dim();
  int cdim = D.coalg->dim();
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> first(n, Rat(0));
  for (const auto& [l, c] : v.terms()) first[l] = c;
  rows.push_back(first);
  auto rank_of = [&](const std::vector<std::vector<Rat>>& rs) {
    RatMatrix m(int(rs.size()), n);
    for (int i = 0; i < int(rs.size()); ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = rs[i][j];
    return m.rank();
  };
  for (;;) {
    int before = rank_of(rows);
    std::vector<std::vector<Rat>> next = rows;
    for (const auto& row : rows)
      for (int c = 0; c < cdim; ++c) {
        std::vector<Rat> img(n, Rat(0));
        for (int i = 0; i < n; ++i) {
          if (is_zero(row[i])) continue;
          for (const auto& [cl, d, q] : D.delta[i])
            if (cl == c) img[d] += row[i] * q;
        }
        next.push_back(std::move(img));
      }
    // Compact to echelon rows so the row count stays bounded.
    RatMatrix m(int(next.size()), n);
    for (int i = 0; i < int(next.size()); ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = next[i][j];
    int r = m.rref();
    if (r == before) return r;
    rows.clear();
    for (int i = 0; i < r; ++i) {
      std::vector<Rat> rw(n);
      for (int j = 0; j < n; ++j) rw[j] = m.at(i, j);
      rows.push_back(std::move(rw));
    }
  }
}

RatMatrix random_gl(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-3, 3);
  for (;;) {
    RatMatrix p(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p.at(i, j) = Rat(num(rng));
    RatMatrix inv;
    if (invert(p, inv)) return p;
  }
}

FreeVec mat_col_combo(const RatMatrix& m, const FreeVec& x) {
  // Coordinates of m * x as a FreeVec.
  FreeVec out;
  for (int i = 0; i < m.rows(); ++i) {
    Rat acc(0);
    for (const auto& [j, c] : x.terms()) acc += m.at(i, int(j)) * c;
    out.add(i, acc);
  }
  return out;
}

}  // namespace

TEST_CASE("stock coalgebras satisfy both axioms") {
  for (const auto* name : {"c0", "c1", "taylor", "difference", "alpha"}) {
    auto s = builtin_structure(name);
    REQUIRE(s.kind == "coalgebra");
    auto vs = check_coalgebra(*s.coalgebra);
    CHECK(vs.size() == 2);
    for (const auto& v : vs) {
      INFO(name, " / ", v.law, " @ ", v.witness);
      CHECK(v.pass);
    }
  }
}

TEST_CASE("grouplike recognition on the stock coalgebras") {
  Coalgebra triv = trivial_coalgebra();
  CHECK(is_grouplike(triv, 0));
  Coalgebra pair = primitive_pair_coalgebra();
  CHECK(is_grouplike(pair, 0));
  CHECK_FALSE(is_grouplike(pair, 1));
  Coalgebra diff = difference_coalgebra();
  CHECK(is_grouplike(diff, 0));
  CHECK(is_grouplike(diff, 1));
  CHECK_FALSE(is_grouplike(diff, 2));
  Coalgebra tay = taylor_coalgebra(5);
  CHECK(is_grouplike(tay, 0));
  CHECK_FALSE(is_grouplike(tay, 1));
}

TEST_CASE("deleting one comultiplication term is detected with a witness") {
  auto s = builtin_structure("taylor-broken");
  auto vs = check_coalgebra(*s.coalgebra);
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].law == "coassociativity");
  CHECK_FALSE(vs[0].pass);
  CHECK(vs[0].witness == "basis element b2, term b0 (x) b1 (x) b1: 1 vs 0");
  CHECK(vs[1].law == "counit");
  CHECK_FALSE(vs[1].pass);
  CHECK(vs[1].witness == "basis element b2");
}

TEST_CASE("chain comodule passes and the broken variant fails at e1") {
  auto good = builtin_structure("taylor-chain");
  REQUIRE(good.kind == "comodule");
  auto vs = check_comodule(*good.comodule);
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].pass);
  CHECK(vs[1].pass);

  auto bad = builtin_structure("chain-broken");
  auto bs = check_comodule(*bad.comodule);
  REQUIRE(bs.size() == 2);
  CHECK(bs[0].law == "comodule counit");
  CHECK_FALSE(bs[0].pass);
  CHECK(bs[0].witness == "basis element e1");
  CHECK(bs[1].law == "coaction compatibility");
  CHECK_FALSE(bs[1].pass);
  CHECK(bs[1].witness == "basis element e1, term b0 (x) b1 (x) e0: 1 vs 0");
}

TEST_CASE("dual action picks out one tensor leg") {
  auto C = std::make_shared<const Coalgebra>(taylor_coalgebra(9));
  Comodule D = taylor_chain_comodule(C, 4);
  std::vector<Rat> f(C->dim(), Rat(0));
  f[1] = 1;  // dual of b1
  CHECK(dual_action(D, f, FreeVec::unit(2)) == FreeVec::unit(1));
  f[1] = 0;
  f[0] = 1;  // dual of b0 acts as identity on the chain
  CHECK(dual_action(D, f, FreeVec::unit(3)) == FreeVec::unit(3));
}

TEST_CASE("closure of chain generators") {
  auto C = std::make_shared<const Coalgebra>(taylor_coalgebra(9));
  Comodule D = taylor_chain_comodule(C, 4);
  CHECK(fd_closure(D, FreeVec::unit(0)).size() == 1);
  CHECK(fd_closure(D, FreeVec::unit(1)).size() == 2);
  CHECK(fd_closure(D, FreeVec::unit(3)).size() == 4);
  // The top closure is the whole space.
  SpanBuilder sp;
  for (const auto& r : fd_closure(D, FreeVec::unit(3))) sp.insert(r);
  for (int i = 0; i < 4; ++i) CHECK(sp.contains(FreeVec::unit(i)));
  // Every closure is a subcomodule.
  CHECK(is_subcomodule(D, fd_closure(D, FreeVec::unit(2))));
}

TEST_CASE("subcoalgebra recognition in the divided power chain") {
  Coalgebra C = taylor_coalgebra(9);
  CHECK(is_subcoalgebra(C, {FreeVec::unit(0)}));
  CHECK(is_subcoalgebra(C, {FreeVec::unit(0), FreeVec::unit(1)}));
  CHECK_FALSE(is_subcoalgebra(C, {FreeVec::unit(1)}));
}

TEST_CASE("restriction to a subcoalgebra filters the chain by depth") {
  auto C = std::make_shared<const Coalgebra>(taylor_coalgebra(9));
  Comodule D = taylor_chain_comodule(C, 4);
  auto r0 = restrict_comodule(D, {FreeVec::unit(0)});
  REQUIRE(r0.size() == 1);
  // The fixed part is spanned by e0 alone.
  SpanBuilder sp;
  sp.insert(FreeVec::unit(0));
  CHECK(sp.contains(r0[0]));
  auto r1 = restrict_comodule(D, {FreeVec::unit(0), FreeVec::unit(1)});
  CHECK(r1.size() == 2);
  // Restricting along the full coalgebra basis keeps everything.
  std::vector<FreeVec> all;
  for (int i = 0; i < C->dim(); ++i) all.push_back(FreeVec::unit(i));
  CHECK(restrict_comodule(D, all).size() == 4);
  CHECK_THROWS_AS(restrict_comodule(D, {FreeVec::unit(1)}), std::invalid_argument);
}

TEST_CASE("construction guards") {
  auto C = std::make_shared<const Coalgebra>(taylor_coalgebra(3));
  CHECK_THROWS_AS(taylor_chain_comodule(C, 5), std::invalid_argument);
  Comodule D = taylor_chain_comodule(C, 2);
  auto C2 = std::make_shared<const Coalgebra>(taylor_coalgebra(3));
  Comodule D2 = taylor_chain_comodule(C2, 2);
  CHECK_THROWS_AS(comodule_direct_sum(D, D2), std::invalid_argument);
  RatMatrix sing(2, 2);
  CHECK_THROWS_AS(change_basis(D, sing), std::invalid_argument);
  RatMatrix wrong(3, 3);
  CHECK_THROWS_AS(change_basis(D, wrong), std::invalid_argument);
}

TEST_CASE("closure dimension is a basis invariant") {
  std::mt19937 rng(11);
  auto C = std::make_shared<const Coalgebra>(taylor_coalgebra(9));
  Comodule D = comodule_direct_sum(taylor_chain_comodule(C, 3), taylor_chain_comodule(C, 3));
  for (int t = 0; t < 5; ++t) {
    RatMatrix P = random_gl(rng, 6);
    RatMatrix Pinv;
    REQUIRE(invert(P, Pinv));
    Comodule E = change_basis(D, P);
    CHECK(all_pass(check_comodule(E)));
    std::uniform_int_distribution<int> num(-2, 2);
    FreeVec v;
    while (v.empty())
      for (int i = 0; i < 6; ++i) v.add(i, Rat(num(rng)));
    // The same vector expressed in the new basis has coordinates Pinv v.
    FreeVec w = mat_col_combo(Pinv, v);
    CHECK(fd_closure(D, v).size() == fd_closure(E, w).size());
  }
}

TEST_CASE("closure agrees with the dense saturation oracle") {
  std::mt19937 rng(23);
  auto C = std::make_shared<const Coalgebra>(taylor_coalgebra(9));
  for (int t = 0; t < 8; ++t) {
    Comodule base =
        comodule_direct_sum(taylor_chain_comodule(C, 2 + t % 3), taylor_chain_comodule(C, 4 - t % 3));
    Comodule D = change_basis(base, random_gl(rng, 6));
    std::uniform_int_distribution<int> num(-2, 2);
    FreeVec v;
    while (v.empty())
      for (int i = 0; i < 6; ++i) v.add(i, Rat(num(rng)));
    auto basis = fd_closure(D, v);
    CHECK(int(basis.size()) == closure_dim_oracle(D, v));
    CHECK(is_subcomodule(D, basis));
    // The seed vector itself lies in its closure.
    SpanBuilder sp;
    for (const auto& r : basis) sp.insert(r);
    CHECK(sp.contains(v));
  }
}
