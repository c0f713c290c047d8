#include <cstdio>
#include <fstream>

#include "builtins.hpp"
#include "doctest.h"
#include "jsonio.hpp"

using namespace comeasure;
using nlohmann::json;

TEST_CASE("every builtin structure survives a save and load round trip") {
  for (const auto& name : builtin_structure_names()) {
    INFO("builtin ", name);
    Structure s = builtin_structure(name);
    json j1 = save_structure(s);
    Structure s2 = load_structure(j1);
    CHECK(s2.kind == s.kind);
    json j2 = save_structure(s2);
    CHECK(j1 == j2);
  }
}

TEST_CASE("reloaded structures keep their behavior") {
  Structure chain = load_structure(save_structure(builtin_structure("taylor-chain")));
  REQUIRE(chain.comodule);
  CHECK(all_pass(check_comodule(*chain.comodule)));

  Structure grp = load_structure(save_structure(builtin_structure("s3")));
  REQUIRE(grp.group);
  CHECK(grp.group->order() == 6);
  CHECK(grp.group->labels[grp.group->identity] == "e");

  Structure lie = load_structure(save_structure(builtin_structure("sl2")));
  REQUIRE(lie.lie);
  int e = lie.lie->index_of("e"), f = lie.lie->index_of("f"), h = lie.lie->index_of("h");
  CHECK(lie.lie->bracket[e][f] == FreeVec::unit(h));

  Structure mod = load_structure(save_structure(builtin_structure("s3-regular")));
  REQUIRE(mod.gmodule);
  CHECK(all_pass(check_gmodule(*mod.gmodule)));
}

TEST_CASE("rational serialization") {
  CHECK(rat_from_json(json::array({2, 4})) == rat(1, 2));
  CHECK(rat_to_json(rat(-3, 7)) == json::array({-3, 7}));
  CHECK_THROWS_AS(rat_from_json(json::array({1, 0})), JsonFormatError);
  CHECK_THROWS_AS(rat_from_json(json::array({1, -2})), JsonFormatError);
  CHECK_THROWS_AS(rat_from_json(json::array({1})), JsonFormatError);
  CHECK_THROWS_AS(rat_from_json(json::array({1.5, 2})), JsonFormatError);
  CHECK_THROWS_AS(rat_from_json(json("1/2")), JsonFormatError);

  // Values outside 64 bits travel as decimal strings.
  Rat big = rat(Int("340282366920938463463374607431768211457"), Int(3));
  json jb = rat_to_json(big);
  CHECK(jb[0].is_string());
  CHECK(rat_from_json(jb) == big);
  CHECK(rat_from_json(json::array({"12", "30"})) == rat(2, 5));
}

TEST_CASE("oversized coefficients survive a structure round trip") {
  Structure s;
  s.kind = "coalgebra";
  s.coalgebra = std::make_shared<Coalgebra>();
  s.coalgebra->labels = {"t"};
  Rat huge = rat(Int("170141183460469231731687303715884105727"), Int(2));
  s.coalgebra->delta = {{{0, 0, huge}}};
  s.coalgebra->counit = {Rat(1)};
  json j1 = save_structure(s);
  Structure s2 = load_structure(j1);
  CHECK(std::get<2>(s2.coalgebra->delta[0][0]) == huge);
  CHECK(save_structure(s2) == j1);
}

TEST_CASE("malformed documents are rejected with format errors") {
  CHECK_THROWS_AS(load_structure_text("{nope"), JsonFormatError);
  CHECK_THROWS_AS(load_structure_text("[]"), JsonFormatError);
  CHECK_THROWS_AS(load_structure_text("{}"), JsonFormatError);
  CHECK_THROWS_AS(load_structure_text(R"({"kind": 7})"), JsonFormatError);
  CHECK_THROWS_AS(load_structure_text(R"({"kind": "frobenius"})"), JsonFormatError);
  CHECK_THROWS_AS(
      load_structure_text(R"({"kind": "coalgebra", "labels": ["a", "a"], "delta": [], "counit": [[1,1],[1,1]]})"),
      JsonFormatError);
  CHECK_THROWS_AS(
      load_structure_text(R"({"kind": "coalgebra", "labels": ["a"], "delta": [[5,0,0,1,1]], "counit": [[1,1]]})"),
      JsonFormatError);
  CHECK_THROWS_AS(
      load_structure_text(R"({"kind": "coalgebra", "labels": ["a"], "delta": [[0,0,0,1,0]], "counit": [[1,1]]})"),
      JsonFormatError);
  CHECK_THROWS_AS(
      load_structure_text(R"({"kind": "coalgebra", "labels": ["a"], "delta": [[0,0,1,1]], "counit": [[1,1]]})"),
      JsonFormatError);
  CHECK_THROWS_AS(load_structure_text(R"({"kind": "coalgebra", "labels": ["a"], "delta": []})"),
                  JsonFormatError);
  // A comodule whose nested structure is not a coalgebra.
  CHECK_THROWS_AS(load_structure_text(R"({
    "kind": "comodule",
    "coalgebra": {"kind": "lie", "labels": ["x"], "bracket": []},
    "labels": ["m"], "delta": []
  })"),
                  JsonFormatError);
  // A group table that fails the axioms parses but is still rejected.
  CHECK_THROWS_AS(load_structure_text(R"({
    "kind": "group", "labels": ["e", "a"], "table": [[0, 1], [1, 1]]
  })"),
                  JsonFormatError);
}

TEST_CASE("path loading") {
  CHECK_THROWS_AS(load_structure_path("/nonexistent/structure.json"), JsonFormatError);
  std::string path = "roundtrip_structure_test.json";
  {
    std::ofstream out(path);
    out << save_structure(builtin_structure("difference")).dump(2) << "\n";
  }
  Structure s = load_structure_path(path);
  CHECK(s.kind == "coalgebra");
  CHECK(s.coalgebra->dim() == 3);
  CHECK(all_pass(check_coalgebra(*s.coalgebra)));
  std::remove(path.c_str());
}
