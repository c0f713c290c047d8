#include <random>
#include <vector>

#include "doctest.h"
#include "freevec.hpp"

using namespace comeasure;

namespace {

RatMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RatMatrix m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Rat(rows[i][j]);
  return m;
}

RatMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> num(-5, 5);
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(num(rng));
  return m;
}

}  // namespace

TEST_CASE("freevec drops zeros and merges terms") {
  FreeVec v;
  v.add(3, Rat(2));
  v.add(3, Rat(-2));
  CHECK(v.empty());
  v.add(1, rat(1, 2));
  v.add(1, rat(1, 3));
  CHECK(v.at(1) == rat(5, 6));
  CHECK(v.size() == 1);
  FreeVec w = FreeVec::unit(1, rat(5, 6));
  CHECK(v == w);
  v -= w;
  CHECK(v.empty());
}

TEST_CASE("rref computes rank") {
  RatMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  CHECK(m.rank() == 2);
  RatMatrix id = RatMatrix::identity(4);
  CHECK(id.rank() == 4);
  RatMatrix z(3, 5);
  CHECK(z.rank() == 0);
  CHECK(z.is_zero_matrix());
}

TEST_CASE("solve_linear exact solutions and inconsistency") {
  RatMatrix a = from_rows({{2, 1}, {1, 3}});
  std::vector<Rat> x;
  CHECK(solve_linear(a, {Rat(5), Rat(10)}, x));
  CHECK(x[0] == Rat(1));
  CHECK(x[1] == Rat(3));

  RatMatrix sing = from_rows({{1, 1}, {2, 2}});
  CHECK_FALSE(solve_linear(sing, {Rat(1), Rat(3)}, x));
  // Consistent underdetermined system still returns some solution.
  std::vector<Rat> y;
  CHECK(solve_linear(sing, {Rat(1), Rat(2)}, y));
  CHECK(y[0] + y[1] == Rat(1));
}

TEST_CASE("invert round-trips against multiplication") {
  RatMatrix a = from_rows({{1, 2, 0}, {0, 1, 4}, {1, 0, 1}});
  RatMatrix inv;
  REQUIRE(invert(a, inv));
  CHECK(a * inv == RatMatrix::identity(3));
  CHECK(inv * a == RatMatrix::identity(3));

  RatMatrix sing = from_rows({{1, 2}, {2, 4}});
  RatMatrix dummy;
  CHECK_FALSE(invert(sing, dummy));
}

TEST_CASE("invert random nonsingular matrices") {
  std::mt19937 rng(77);
  int done = 0;
  while (done < 10) {
    RatMatrix a = random_matrix(rng, 4, 4);
    RatMatrix inv;
    if (!invert(a, inv)) continue;
    CHECK(a * inv == RatMatrix::identity(4));
    ++done;
  }
}

TEST_CASE("nullspace vectors annihilate and span the kernel") {
  RatMatrix a = from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 0, 1, 1}});
  auto ker = nullspace(a);
  CHECK(int(ker.size()) == 4 - a.rank());
  for (const auto& v : ker) {
    auto img = a.apply(v);
    for (const auto& c : img) CHECK(c == Rat(0));
  }
  // Kernel basis is linearly independent.
  RatMatrix k(int(ker.size()), 4);
  for (int i = 0; i < int(ker.size()); ++i)
    for (int j = 0; j < 4; ++j) k.at(i, j) = ker[i][j];
  CHECK(k.rank() == int(ker.size()));
}

TEST_CASE("nullspace of injective map is empty") {
  RatMatrix a = from_rows({{1, 0}, {0, 1}, {1, 1}});
  CHECK(nullspace(a).empty());
}

TEST_CASE("span builder tracks dimension and membership") {
  SpanBuilder sp;
  CHECK(sp.insert(FreeVec::unit(0) + FreeVec::unit(1)));
  CHECK(sp.insert(FreeVec::unit(1) + FreeVec::unit(2)));
  CHECK_FALSE(sp.insert(FreeVec::unit(0) + Rat(2) * FreeVec::unit(1) + FreeVec::unit(2)));
  CHECK(sp.dim() == 2);
  CHECK(sp.contains(FreeVec::unit(0) - FreeVec::unit(2)));
  CHECK_FALSE(sp.contains(FreeVec::unit(0)));
  CHECK(sp.reduce(FreeVec::unit(0) - FreeVec::unit(2)).empty());
  CHECK_FALSE(sp.insert(FreeVec()));

  // Basis rows reduce to nothing and reproduce the span.
  SpanBuilder again;
  for (const auto& row : sp.basis()) {
    CHECK(sp.reduce(row).empty());
    again.insert(row);
  }
  CHECK(again.dim() == sp.dim());
}

TEST_CASE("span builder agrees with rref rank on random rows") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 6, cols = 5;
    RatMatrix m(rows, cols);
    SpanBuilder sp;
    for (int i = 0; i < rows; ++i) {
      FreeVec v;
      for (int j = 0; j < cols; ++j) {
        Rat c(num(rng));
        m.at(i, j) = c;
        v.add(j, c);
      }
      sp.insert(v);
    }
    CHECK(sp.dim() == m.rank());
  }
}

TEST_CASE("matrix transpose and apply") {
  RatMatrix a = from_rows({{1, 2}, {3, 4}, {5, 6}});
  RatMatrix t = a.transpose();
  CHECK(t.rows() == 2);
  CHECK(t.cols() == 3);
  CHECK(t.at(0, 2) == Rat(5));
  auto img = a.apply({Rat(1), Rat(-1)});
  CHECK(img[0] == Rat(-1));
  CHECK(img[1] == Rat(-1));
  CHECK(img[2] == Rat(-1));
}
