#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "comeasure.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  cm_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and null handling") {
  CHECK(std::string(cm_version()) == "0.1.0");
  CHECK(cm_band_identity(nullptr) == CM_EINVAL);
  CHECK(std::string(cm_last_error()).find("null") != std::string::npos);
  CHECK(cm_band_tau(nullptr, nullptr, nullptr) == CM_EINVAL);
  CHECK(cm_structure_builtin(nullptr, nullptr) == CM_EINVAL);
  CHECK(cm_report_passed(nullptr, nullptr) == CM_EINVAL);
  // Free functions take NULL quietly.
  cm_band_free(nullptr);
  cm_structure_free(nullptr);
  cm_report_free(nullptr);
  cm_string_free(nullptr);
}

TEST_CASE("band operators through the C surface") {
  cm_band *up = nullptr, *down = nullptr, *id = nullptr;
  REQUIRE(cm_band_shift(1, &up) == CM_OK);
  REQUIRE(cm_band_shift(-1, &down) == CM_OK);
  REQUIRE(cm_band_identity(&id) == CM_OK);

  // Composing away from the floor is the identity; the other order is not.
  cm_band *du = nullptr, *ud = nullptr;
  REQUIRE(cm_band_compose(down, up, &du) == CM_OK);
  REQUIRE(cm_band_compose(up, down, &ud) == CM_OK);
  int eq = -1;
  REQUIRE(cm_band_equal(du, id, &eq) == CM_OK);
  CHECK(eq == 1);
  REQUIRE(cm_band_equal(ud, id, &eq) == CM_OK);
  CHECK(eq == 0);

  // The commutator is the rank-one boundary defect with trace -1.
  cm_band* comm = nullptr;
  REQUIRE(cm_band_sub(ud, du, &comm) == CM_OK);
  int64_t num = 0, den = 0;
  REQUIRE(cm_band_tau(comm, &num, &den) == CM_OK);
  CHECK(num == -1);
  CHECK(den == 1);

  // Scaling and adding act on the trace linearly.
  cm_band *scaled = nullptr, *doubled = nullptr;
  REQUIRE(cm_band_scale(comm, 3, 2, &scaled) == CM_OK);
  REQUIRE(cm_band_tau(scaled, &num, &den) == CM_OK);
  CHECK(num == -3);
  CHECK(den == 2);
  REQUIRE(cm_band_add(comm, comm, &doubled) == CM_OK);
  REQUIRE(cm_band_tau(doubled, &num, &den) == CM_OK);
  CHECK(num == -2);
  CHECK(den == 1);

  // Zero denominators are rejected before they reach gmp.
  cm_band* bad = nullptr;
  CHECK(cm_band_scale(comm, 1, 0, &bad) == CM_EINVAL);

  // Identity and the weighted shift at offset zero have divergent traces.
  CHECK(cm_band_tau(id, &num, &den) == CM_EDIVERGENT);
  CHECK(std::string(cm_last_error()).size() > 0);
  cm_band* witt0 = nullptr;
  REQUIRE(cm_band_weighted_shift(0, &witt0) == CM_OK);
  CHECK(cm_band_tau(witt0, &num, &den) == CM_EDIVERGENT);

  cm_band_free(up);
  cm_band_free(down);
  cm_band_free(id);
  cm_band_free(du);
  cm_band_free(ud);
  cm_band_free(comm);
  cm_band_free(scaled);
  cm_band_free(doubled);
  cm_band_free(witt0);
}

TEST_CASE("structure round trip") {
  cm_structure* s = nullptr;
  REQUIRE(cm_structure_builtin("taylor", &s) == CM_OK);
  char* kind = nullptr;
  REQUIRE(cm_structure_kind(s, &kind) == CM_OK);
  CHECK(take(kind) == "coalgebra");

  char* j1 = nullptr;
  REQUIRE(cm_structure_to_json(s, &j1) == CM_OK);
  std::string text1 = j1 ? j1 : "";
  cm_structure* s2 = nullptr;
  REQUIRE(cm_structure_load(j1, &s2) == CM_OK);
  cm_string_free(j1);
  char* j2 = nullptr;
  REQUIRE(cm_structure_to_json(s2, &j2) == CM_OK);
  CHECK(take(j2) == text1);
  cm_structure_free(s);
  cm_structure_free(s2);

  cm_structure* g = nullptr;
  REQUIRE(cm_structure_builtin("s3", &g) == CM_OK);
  char* gkind = nullptr;
  REQUIRE(cm_structure_kind(g, &gkind) == CM_OK);
  CHECK(take(gkind) == "group");
  cm_structure_free(g);

  cm_structure* nope = nullptr;
  CHECK(cm_structure_builtin("no-such-thing", &nope) == CM_EINVAL);
  CHECK(cm_structure_load("{ not json", &nope) == CM_EINVAL);
  CHECK(std::string(cm_last_error()).size() > 0);
  CHECK(cm_structure_load("{\"kind\": \"coalgebra\"}", &nope) == CM_EINVAL);
}

TEST_CASE("verification suites over the C surface") {
  cm_structure* s = nullptr;
  REQUIRE(cm_structure_builtin("taylor", &s) == CM_OK);
  cm_report* rep = nullptr;
  REQUIRE(cm_verify(s, "coalgebra", &rep) == CM_OK);
  int ok = 0;
  REQUIRE(cm_report_passed(rep, &ok) == CM_OK);
  CHECK(ok == 1);
  cm_report_free(rep);
  CHECK(cm_verify(s, "measuring", &rep) == CM_EINVAL);
  CHECK(cm_verify(s, "comodule", &rep) == CM_EINVAL);
  cm_structure_free(s);

  cm_structure* broken = nullptr;
  REQUIRE(cm_structure_builtin("taylor-broken", &broken) == CM_OK);
  cm_report* bad = nullptr;
  REQUIRE(cm_verify(broken, "coalgebra", &bad) == CM_CHECK_FAILED);
  REQUIRE(cm_report_passed(bad, &ok) == CM_OK);
  CHECK(ok == 0);
  char* text = nullptr;
  REQUIRE(cm_report_render(bad, "text", &text) == CM_OK);
  CHECK(take(text).find("FAIL") != std::string::npos);
  char* json = nullptr;
  REQUIRE(cm_report_render(bad, "json", &json) == CM_OK);
  CHECK(take(json).find("witness") != std::string::npos);
  CHECK(cm_report_render(bad, "xml", &json) == CM_EINVAL);
  cm_report_free(bad);
  cm_structure_free(broken);

  cm_structure* chain = nullptr;
  REQUIRE(cm_structure_builtin("taylor-chain", &chain) == CM_OK);
  cm_report* crep = nullptr;
  REQUIRE(cm_verify(chain, "comodule", &crep) == CM_OK);
  cm_report_free(crep);
  cm_structure_free(chain);
}

TEST_CASE("cocycle values") {
  int64_t num = 0, den = 0;
  REQUIRE(cm_cocycle("virasoro", 4, -4, &num, &den) == CM_OK);
  CHECK(num == 10);
  CHECK(den == 1);
  REQUIRE(cm_cocycle("virasoro", 3, -3, &num, &den) == CM_OK);
  CHECK(num == 4);
  REQUIRE(cm_cocycle("heisenberg", 2, -2, &num, &den) == CM_OK);
  CHECK(num == -2);
  CHECK(den == 1);
  CHECK(cm_cocycle("witt", 1, -1, &num, &den) == CM_EINVAL);

  REQUIRE(cm_loop_cocycle(3, "e", -3, "f", &num, &den) == CM_OK);
  CHECK(num == -12);
  REQUIRE(cm_loop_cocycle(3, "h", -3, "h", &num, &den) == CM_OK);
  CHECK(num == -24);
  REQUIRE(cm_loop_cocycle(2, "e", -1, "f", &num, &den) == CM_OK);
  CHECK(num == 0);
  CHECK(cm_loop_cocycle(1, "q", -1, "f", &num, &den) == CM_EINVAL);

  int64_t k = -1;
  REQUIRE(cm_killing_sl2("h", "h", &k) == CM_OK);
  CHECK(k == 8);
  REQUIRE(cm_killing_sl2("e", "f", &k) == CM_OK);
  CHECK(k == 4);
  REQUIRE(cm_killing_sl2("e", "h", &k) == CM_OK);
  CHECK(k == 0);
}

TEST_CASE("finite dual values") {
  int64_t v = 0;
  REQUIRE(cm_dual_fibonacci(10, &v) == CM_OK);
  CHECK(v == 55);
  REQUIRE(cm_dual_fibonacci(30, &v) == CM_OK);
  CHECK(v == 832040);
  CHECK(cm_dual_fibonacci(-1, &v) == CM_EINVAL);
  // The 92nd value is the last one an int64 holds.
  REQUIRE(cm_dual_fibonacci(92, &v) == CM_OK);
  CHECK(v == 7540113804746346429LL);
  CHECK(cm_dual_fibonacci(93, &v) == CM_ERANGE);

  int64_t num = 0, den = 0;
  REQUIRE(cm_dual_delta_pair("fibonacci", 3, 4, &num, &den) == CM_OK);
  CHECK(num == 13);
  CHECK(den == 1);
  REQUIRE(cm_dual_delta_pair("ramp", 2, 3, &num, &den) == CM_OK);
  CHECK(num == 6);
  REQUIRE(cm_dual_delta_pair("geometric2", 2, 2, &num, &den) == CM_OK);
  CHECK(num == 16);
  CHECK(cm_dual_delta_pair("nope", 0, 0, &num, &den) == CM_EINVAL);
  CHECK(cm_dual_delta_pair("ramp", -1, 0, &num, &den) == CM_EINVAL);
}

TEST_CASE("oscillator checks") {
  cm_report* rep = nullptr;
  REQUIRE(cm_fock_check(1, 8, "restriction", &rep) == CM_OK);
  int ok = 0;
  REQUIRE(cm_report_passed(rep, &ok) == CM_OK);
  CHECK(ok == 1);
  char* json = nullptr;
  REQUIRE(cm_report_render(rep, "json", &json) == CM_OK);
  CHECK(take(json).find("d-spectrum") != std::string::npos);
  cm_report_free(rep);

  REQUIRE(cm_fock_check(2, 6, "level", &rep) == CM_OK);
  cm_report_free(rep);
  CHECK(cm_fock_check(1, 8, "nonsense", &rep) == CM_EINVAL);
  CHECK(cm_fock_check(1, -2, "level", &rep) == CM_EINVAL);
}

TEST_CASE("command driver") {
  const char* argv[] = {"cocycle", "--family", "virasoro", "--table", "--range", "3"};
  cm_report* rep = nullptr;
  int code = -1;
  REQUIRE(cm_run(6, argv, &rep, &code) == CM_OK);
  CHECK(code == 0);
  char* out = nullptr;
  REQUIRE(cm_report_render(rep, nullptr, &out) == CM_OK);
  std::string text = take(out);
  CHECK(text.find("\"version\": \"0.1.0\"") != std::string::npos);
  CHECK(text.find("virasoro") != std::string::npos);
  cm_report_free(rep);

  const char* bad[] = {"verify", "--builtin", "taylor-broken", "--suite", "coalgebra"};
  REQUIRE(cm_run(5, bad, &rep, &code) == CM_OK);
  CHECK(code == 1);
  cm_report_free(rep);

  REQUIRE(cm_run(0, nullptr, &rep, &code) == CM_OK);
  CHECK(code == 2);
  cm_report_free(rep);
  CHECK(cm_run(3, nullptr, &rep, &code) == CM_EINVAL);
}
