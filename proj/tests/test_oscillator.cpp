#include <random>
#include <vector>

#include "doctest.h"
#include "oscillator.hpp"

using namespace comeasure;

namespace {

OscMonomial mono(std::vector<int> low, int cpow, int dpow, std::vector<int> rai) {
  OscMonomial m;
  m.low = std::move(low);
  m.cpow = cpow;
  m.dpow = dpow;
  m.rai = std::move(rai);
  return m;
}

std::vector<OscGen> random_word(std::mt19937& rng, int len) {
  const OscGen pool[] = {OscGen::mode(-2), OscGen::mode(-1), OscGen::mode(1),
                         OscGen::mode(2),  OscGen::central(), OscGen::derivation()};
  for (;;) {
    std::vector<OscGen> w;
    int lowering = 0;
    for (int i = 0; i < len; ++i) {
      OscGen g = pool[rng() % 6];
      if (g.kind == OscGen::Mode && g.m < 0) lowering += -g.m;
      w.push_back(g);
    }
    if (lowering <= 4) return w;
  }
}

}  // namespace

TEST_CASE("normal ordering produces the central correction") {
  auto s = straighten_word({OscGen::mode(1), OscGen::mode(-1)});
  REQUIRE(s.size() == 2);
  CHECK(s.at(mono({1}, 0, 0, {1})) == Rat(1));
  CHECK(s.at(mono({}, 1, 0, {})) == Rat(1));

  // Modes with unequal absolute values commute without correction.
  auto t = straighten_word({OscGen::mode(2), OscGen::mode(-1)});
  REQUIRE(t.size() == 1);
  CHECK(t.at(mono({1}, 0, 0, {2})) == Rat(1));

  auto u = straighten_word({OscGen::derivation(), OscGen::mode(-2)});
  REQUIRE(u.size() == 2);
  CHECK(u.at(mono({2}, 0, 1, {})) == Rat(1));
  CHECK(u.at(mono({2}, 0, 0, {})) == Rat(-2));

  auto v = straighten_word({OscGen::derivation(), OscGen::central()});
  REQUIRE(v.size() == 1);
  CHECK(v.at(mono({}, 1, 1, {})) == Rat(1));

  CHECK(straighten_word({OscGen::mode(1), OscGen::mode(-1)}, Rat(3)).at(mono({}, 1, 0, {})) == Rat(3));
  CHECK_THROWS_AS(straighten_word({OscGen::mode(0)}), std::invalid_argument);
}

TEST_CASE("already ordered words are fixed points") {
  OscMonomial m = mono({1, 2}, 1, 1, {1, 3});
  auto s = straighten_word(m.word());
  REQUIRE(s.size() == 1);
  CHECK(s.at(m) == Rat(1));
}

TEST_CASE("straightening is multiplicative and associative") {
  std::mt19937 rng(19);
  for (int t = 0; t < 20; ++t) {
    auto u = random_word(rng, 2 + int(rng() % 2));
    auto v = random_word(rng, 2 + int(rng() % 2));
    std::vector<OscGen> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(straighten_word(uv) == osc_mul(straighten_word(u), straighten_word(v)));
  }
  for (int t = 0; t < 10; ++t) {
    auto a = straighten_word(random_word(rng, 2));
    auto b = straighten_word(random_word(rng, 2));
    auto c = straighten_word(random_word(rng, 2));
    CHECK(osc_mul(osc_mul(a, b), c) == osc_mul(a, osc_mul(b, c)));
  }
}

TEST_CASE("sum arithmetic") {
  OscSum a = straighten_word({OscGen::mode(-1)});
  OscSum b = straighten_word({OscGen::central()});
  OscSum s = osc_add(a, b);
  CHECK(s.size() == 2);
  CHECK(osc_add(s, osc_scale(s, Rat(-1))).empty());
  CHECK(osc_scale(a, Rat(0)).empty());
}

TEST_CASE("level two module action values") {
  FockModule F = make_fock(Rat(2), 6);
  CHECK(F.dim() == 1 + 1 + 2 + 3 + 5 + 7 + 11);
  FreeVec vac = FreeVec::unit(F.flat(0, 0));

  // Lowering appends a part.
  long st1 = F.flat(1, partition_index(F, 1, {1}));
  CHECK(fock_apply_gen(F, OscGen::mode(-1), vac) == FreeVec::unit(st1));

  // The commutator picks up the level.
  CHECK(fock_apply_word(F, {OscGen::mode(1), OscGen::mode(-1)}, vac) ==
        FreeVec::unit(F.flat(0, 0), Rat(2)));

  // Removing one of two equal parts carries the multiplicity.
  long st11 = F.flat(2, partition_index(F, 2, {1, 1}));
  CHECK(fock_apply_gen(F, OscGen::mode(1), FreeVec::unit(st11)) == FreeVec::unit(st1, Rat(4)));

  // c scales by the level, d by minus the energy, a_0 kills.
  CHECK(fock_apply_gen(F, OscGen::central(), FreeVec::unit(st11)) == FreeVec::unit(st11, Rat(2)));
  CHECK(fock_apply_gen(F, OscGen::derivation(), FreeVec::unit(st11)) == FreeVec::unit(st11, Rat(-2)));
  CHECK(fock_apply_gen(F, OscGen::mode(0), FreeVec::unit(st11)).empty());

  // Raising a top-energy state overflows the truncation.
  long top = F.flat(6, 0);
  CHECK_THROWS_AS(fock_apply_gen(F, OscGen::mode(-1), FreeVec::unit(top)), TruncationOverflow);
  CHECK_THROWS_AS(make_fock(Rat(1), -1), std::invalid_argument);
}

TEST_CASE("word action equals the action of its normal form") {
  std::mt19937 rng(29);
  FockModule F = make_fock(rat(3, 2), 8);
  for (int t = 0; t < 20; ++t) {
    auto w = random_word(rng, 3);
    FreeVec v;
    for (int e = 0; e <= 2; ++e)
      for (size_t i = 0; i < F.parts[e].size(); ++i)
        v.add(F.flat(e, int(i)), Rat(int(rng() % 5) - 2));
    CHECK(fock_apply_word(F, w, v) == fock_apply_sum(F, straighten_word(w), v));
  }
}

TEST_CASE("flat labels invert cleanly") {
  FockModule F = make_fock(Rat(1), 5);
  for (int e = 0; e <= 5; ++e)
    for (size_t i = 0; i < F.parts[e].size(); ++i) {
      long label = F.flat(e, int(i));
      CHECK(F.energy_of(label) == e);
      CHECK(F.index_within(label) == int(i));
    }
  CHECK_THROWS_AS(F.energy_of(F.dim()), std::out_of_range);
  CHECK_THROWS_AS(partition_index(F, 2, {3}), std::out_of_range);
}

TEST_CASE("dual commutator reproduces the level") {
  for (long k = 1; k <= 3; ++k) {
    FockModule F = make_fock(Rat(k), 8);
    for (int m = 1; m <= 3; ++m) {
      Verdict v = check_level(F, m, -m);
      INFO("k=", k, " m=", m, " @ ", v.witness);
      CHECK(v.pass);
      CHECK(check_level(F, -m, m).pass);
    }
    CHECK(check_level(F, 1, -2).pass);
    CHECK(check_level(F, 2, 1).pass);
  }
}

TEST_CASE("dual action values at level three") {
  FockModule F = make_fock(Rat(3), 6);
  GradedDualElement mu{0, FreeVec::unit(0)};
  auto nu = dual_fock_apply(F, OscGen::mode(-1), mu);
  CHECK(nu.energy == 1);
  CHECK(nu.row == FreeVec::unit(0, Rat(-3)));
  auto back = dual_fock_apply(F, OscGen::mode(1), nu);
  CHECK(back.energy == 0);
  CHECK(back.row == FreeVec::unit(0, Rat(3)));
  // Lowering the vacuum functional gives zero.
  CHECK(dual_fock_apply(F, OscGen::mode(1), mu).row.empty());
  // d acts on the dual with the positive energy.
  GradedDualElement mu2{2, FreeVec::unit(1)};
  CHECK(dual_fock_apply(F, OscGen::derivation(), mu2).row == FreeVec::unit(1, Rat(2)));
  CHECK(dual_fock_apply(F, OscGen::central(), mu2).row == FreeVec::unit(1, Rat(3)));
}

TEST_CASE("restriction report certifies the nonnegative side") {
  FockModule F = make_fock(Rat(2), 8);
  RestrictionReport rep = restriction_energy_check(F, 6);
  CHECK(rep.passed());
  REQUIRE(rep.dual_d_spectrum.size() == 7);
  for (int n = 0; n <= 6; ++n) CHECK(rep.dual_d_spectrum[n] == n);
  CHECK(rep.boundedness == "bounded below");
  const long dims[] = {1, 1, 2, 3, 5, 7, 11};
  REQUIRE(rep.graded_dims.size() == 7);
  for (int n = 0; n <= 6; ++n) CHECK(rep.graded_dims[n] == dims[n]);
  CHECK_THROWS_AS(restriction_energy_check(F, 9), std::invalid_argument);
}

TEST_CASE("lowering monomials below a degree form a certified basis") {
  OscWitness w = quasi_normal_witness_oscillator({OscGen::mode(-2)}, 8);
  REQUIRE(w.basis.size() == 4);
  CHECK(osc_monomial_string(w.basis[0]) == "1");
  CHECK(osc_monomial_string(w.basis[1]) == "a[-1]");
  CHECK(osc_monomial_string(w.basis[2]) == "a[-2]");
  CHECK(osc_monomial_string(w.basis[3]) == "a[-1]a[-1]");
  CHECK(w.certified);

  OscWitness w3 = quasi_normal_witness_oscillator({OscGen::mode(-1), OscGen::mode(-2)}, 8);
  CHECK(w3.basis.size() == 7);  // partitions of 0..3
  CHECK(w3.certified);

  CHECK_THROWS_AS(quasi_normal_witness_oscillator({OscGen::mode(-5), OscGen::mode(-5)}, 8),
                  std::invalid_argument);
}
