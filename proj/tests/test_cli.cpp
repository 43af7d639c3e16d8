#include "doctest.h"
#include "trioperad/errors.hpp"
#include "trioperad/cli.hpp"
#include "trioperad/combinatorics.hpp"

using namespace trioperad;

TEST_SUITE("cli") {

TEST_CASE("dendriform middle product") {
  const Report r = run({"dend", "mul", "--op", "mid", "(|,|)", "(|,|)"});
  CHECK(r.exit_code() == 0);
  CHECK(r.render() == "(|,|,|)\n");
  CHECK(r.payload["result"] == "(|,|,|)");
}

TEST_CASE("cube series at t = 1") {
  const Report r = run({"series", "--family", "cube", "--order", "3", "--t-eval", "1"});
  CHECK(r.exit_code() == 0);
  const auto& c = r.payload["coefficients"];
  REQUIRE(c.size() == 3);
  CHECK(c[0] == "-1");
  CHECK(c[1] == "3");
  CHECK(c[2] == "-9");
}

TEST_CASE("certify-all quick passes and is deterministic") {
  const Report a = run({"certify-all", "--level", "quick"});
  CHECK(a.exit_code() == 0);
  CHECK(a.witnesses.empty());
  const Report b = run({"certify-all", "--level", "quick"});
  CHECK(a.to_json() == b.to_json());
  CHECK(a.payload.contains("sections"));
}

TEST_CASE("usage errors name the offending token") {
  const Report r = run({"frobnicate"});
  CHECK(r.exit_code() == 2);
  REQUIRE(r.usage_error);
  CHECK(r.usage_error->find("frobnicate") != std::string::npos);

  const Report bad = run({"dend", "mul", "--op", "mid", "(|,|", "(|,|)"});
  CHECK(bad.exit_code() == 2);
  REQUIRE(bad.usage_error);
  CHECK(bad.usage_error->find("(|,|") != std::string::npos);
  CHECK(bad.usage_error->find("tree :=") != std::string::npos);

  CHECK(run({"tri", "mul", "--op", "left", "{1}@0", "{1}@1"}).exit_code() == 2);
  CHECK(run({"complex", "build", "--family", "simplex", "--weight", "0"}).exit_code() == 2);
}

TEST_CASE("printed cells re-parse") {
  const Report r = run({"cells", "--family", "tree", "--n", "4"});
  CHECK(r.exit_code() == 0);
  CHECK(r.payload["count"] == 45);
  for (const auto& s : r.payload["cells"]) {
    const std::string text = s.get<std::string>();
    CHECK(to_string(parse_tree(text)) == text);
  }
  const Report c = run({"cells", "--family", "simplex", "--n", "4"});
  CHECK(c.payload["count"] == 15);
  for (const auto& s : c.payload["cells"]) {
    const std::string text = s.get<std::string>();
    CHECK(to_string(parse_subset(text)) == text);
  }
}

TEST_CASE("complex build payload") {
  const Report r = run({"complex", "build", "--family", "tree", "--weight", "3", "--report", "dims,d2,betti"});
  CHECK(r.exit_code() == 0);
  const auto& per_n = r.payload["per_n"];
  REQUIRE(per_n.size() == 3);
  CHECK(per_n[0]["dim"] == 7);
  CHECK(per_n[1]["dim"] == 18);
  CHECK(per_n[2]["dim"] == 11);
  CHECK(r.payload["d_squared_zero"] == true);
  CHECK(r.payload["betti"] == nlohmann::json::array({0, 0, 0}));

  const Report printed =
      run({"complex", "build", "--family", "simplex", "--weight", "3", "--simplex-table", "printed"});
  CHECK(printed.exit_code() == 1);
  CHECK_FALSE(printed.witnesses.empty());
}

TEST_CASE("boundary text") {
  const Report r = run({"tri", "boundary", "{1,2}@2"});
  CHECK(r.exit_code() == 0);
  REQUIRE(r.text);
  CHECK(r.payload["terms"].size() == 2);
}

TEST_CASE("koszul certify") {
  const Report r = run({"koszul", "certify"});
  CHECK(r.exit_code() == 0);
  CHECK(run({"koszul", "certify", "--format", "text"}).text);
}

}  // TEST_SUITE
