#include "doctest.h"
#include "findual.hpp"

using namespace comeasure;

TEST_CASE("fibonacci functional reproduces the sequence") {
  FiniteDualElement fib = fd_fibonacci();
  CHECK(fib.deg() == 2);
  long a = 0, b = 1;
  for (long n = 0; n <= 30; ++n) {
    CHECK(fd_evaluate(fib, n) == Rat(a));
    long next = a + b;
    a = b;
    b = next;
  }
  CHECK(fd_evaluate(fib, 10) == Rat(55));
  CHECK(fd_evaluate(fib, 20) == Rat(6765));
  CHECK(fd_evaluate(fib, 30) == Rat(832040));
}

TEST_CASE("reduction modulo the modulus reproduces evaluation") {
  for (const auto& a : {fd_fibonacci(), fd_ramp(), fd_geometric2(), fd_eval_at_one()}) {
    for (long n = 0; n <= 12; ++n) {
      auto coords = fd_reduce_power(a, n);
      REQUIRE(int(coords.size()) == a.deg());
      Rat acc(0);
      for (int i = 0; i < a.deg(); ++i) acc += coords[i] * a.init[i];
      CHECK(acc == fd_evaluate(a, n));
    }
  }
}

TEST_CASE("comultiplication pairing computes values on products") {
  // The pairing on x^i (x) x^j is just the value on x^{i+j}.
  for (const auto& a : {fd_fibonacci(), fd_ramp(), fd_geometric2()})
    for (long i = 0; i <= 10; ++i)
      for (long j = 0; j <= 10; ++j) CHECK(fd_delta_pair(a, i, j) == fd_evaluate(a, i + j));
}

TEST_CASE("delta matrix agrees with the pairing on the reduced square") {
  FiniteDualElement fib = fd_fibonacci();
  RatMatrix d = fd_delta(fib);
  REQUIRE(d.rows() == 2);
  REQUIRE(d.cols() == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(d.at(i, j) == fd_delta_pair(fib, i, j));
  // Values on 1, x, x, x^2 for the fibonacci start 0, 1.
  CHECK(d.at(0, 0) == Rat(0));
  CHECK(d.at(0, 1) == Rat(1));
  CHECK(d.at(1, 0) == Rat(1));
  CHECK(d.at(1, 1) == Rat(1));
}

TEST_CASE("multiplicative functionals are exactly the degree one ones") {
  CHECK(fd_is_grouplike(fd_eval_at_one()));
  CHECK(fd_is_grouplike(fd_geometric2()));
  CHECK_FALSE(fd_is_grouplike(fd_fibonacci()));
  CHECK_FALSE(fd_is_grouplike(fd_ramp()));
}

TEST_CASE("stock functional values") {
  FiniteDualElement ramp = fd_ramp();
  for (long n = 0; n <= 15; ++n) CHECK(fd_evaluate(ramp, n) == Rat(n + 1));
  FiniteDualElement geo = fd_geometric2();
  Rat p(1);
  for (long n = 0; n <= 15; ++n) {
    CHECK(fd_evaluate(geo, n) == p);
    p *= 2;
  }
  FiniteDualElement one = fd_eval_at_one();
  for (long n = 0; n <= 15; ++n) CHECK(fd_evaluate(one, n) == Rat(1));
}

TEST_CASE("recurrence constructor validates its input") {
  CHECK_THROWS_AS(fd_from_recurrence({Rat(-1), Rat(2)}, {Rat(1)}), std::invalid_argument);
  CHECK_THROWS_AS(fd_from_recurrence({Rat(-1), Rat(-1), Rat(1)}, {Rat(0)}), std::invalid_argument);
  CHECK_THROWS_AS(fd_from_recurrence({Rat(1)}, {}), std::invalid_argument);
  // A custom two-term recurrence: u_{n+2} = 3 u_{n+1} - 2 u_n gives 2^n + 1.
  FiniteDualElement u = fd_from_recurrence({Rat(2), Rat(-3), Rat(1)}, {Rat(2), Rat(3)});
  CHECK(fd_evaluate(u, 5) == Rat(33));
  CHECK(fd_evaluate(u, 10) == Rat(1025));
  CHECK_FALSE(fd_is_grouplike(u));
}
