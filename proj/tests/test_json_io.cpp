#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "qra/fixtures.hpp"
#include "qra/json_io.hpp"
#include "qra/sugihara.hpp"
#include "qra/dot_export.hpp"

using namespace qra;

TEST_CASE("algebra round trip") {
  for (const FiniteAlgebra& a :
       {fixtures::l1(), fixtures::k2(), fixtures::fig1_third(),
        sugihara_chain(6).algebra}) {
    FiniteAlgebra b = algebra_from_json(algebra_to_json(a));
    CHECK(b.leq == a.leq);
    CHECK(b.mult == a.mult);
    CHECK(b.tilde == a.tilde);
    CHECK(b.one == a.one);
    CHECK(b.zero == a.zero);
    CHECK(b.names == a.names);
  }
}

TEST_CASE("algebra schema rejects supplied lattice tables") {
  nlohmann::json j = algebra_to_json(fixtures::l1());
  j["meet"] = j["mult"];
  CHECK_THROWS_WITH_AS(algebra_from_json(j), doctest::Contains("SchemaError"),
                       Error);
}

TEST_CASE("context and relation round trips") {
  for (const RepContext& ctx :
       {fixtures::ctx_s2(), fixtures::ctx_s3(), fixtures::ctx_l1()}) {
    RepContext back = context_from_json(context_to_json(ctx));
    CHECK(back.points.leq == ctx.points.leq);
    CHECK(back.e == ctx.e);
    CHECK(back.alpha == ctx.alpha);
    CHECK(back.beta == ctx.beta);
  }
  BinRel r(3);
  r.set(0, 2);
  r.set(1, 1);
  CHECK(relation_from_json(relation_to_json(r)) == r);
}

TEST_CASE("seeded fixture files all re-load") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "qra-fixture-roundtrip";
  fs::remove_all(dir);
  std::vector<std::string> files = fixtures::seed(dir.string());
  CHECK(files.size() >= 20);
  for (const std::string& name : files) {
    nlohmann::json j = load_json((dir / name).string());
    if (j.contains("size")) {
      algebra_from_json(j);  // validates on load
    } else if (j.contains("points") && j.contains("leq")) {
      context_from_json(j);
    } else if (j.contains("points") && j.contains("images")) {
      embedding_from_json(j);
    } else {
      FAIL("unrecognized fixture file ", name);
    }
  }
  fs::remove_all(dir);
}

TEST_CASE("dot export shape") {
  std::string dot = algebra_hasse_dot(fixtures::k2());
  CHECK(dot.find("digraph") != std::string::npos);
  // a is not idempotent in K2, everything else is
  CHECK(dot.find("n1 [label=\"a\"];") != std::string::npos);
  CHECK(dot.find("style=filled") != std::string::npos);

  std::string cdot = context_dot(fixtures::ctx_s3());
  CHECK(cdot.find("style=dashed") != std::string::npos);
  CHECK(cdot.find("style=dotted") != std::string::npos);
  CHECK(cdot.find("cluster_0") != std::string::npos);
}

TEST_CASE("malformed algebra JSON is rejected with schema errors") {
  nlohmann::json good = algebra_to_json(fixtures::l1());

  nlohmann::json j = good;
  j["leq"][0] = nlohmann::json::array({1, 1, 1});  // short row
  CHECK_THROWS_WITH_AS(algebra_from_json(j), doctest::Contains("SchemaError"),
                       Error);

  j = good;
  j["mult"][1][1] = 9;  // out of range
  CHECK_THROWS_WITH_AS(algebra_from_json(j), doctest::Contains("BadTable"),
                       Error);

  j = good;
  j["leq"][0][1] = 2;  // not 0/1
  CHECK_THROWS_WITH_AS(algebra_from_json(j), doctest::Contains("SchemaError"),
                       Error);

  j = good;
  j["tilde"] = nlohmann::json::array({0, 1});  // wrong length
  CHECK_THROWS_WITH_AS(algebra_from_json(j), doctest::Contains("SchemaError"),
                       Error);

  // a valid schema whose order is not a poset still fails validation
  j = good;
  j["leq"][3][0] = 1;  // breaks antisymmetry with 0 <= 1(top)
  CHECK_THROWS_WITH_AS(algebra_from_json(j), doctest::Contains("NotAPoset"),
                       Error);
}
