#include <catch2/catch_amalgamated.hpp>

#include "cpnq/checks.hpp"

using namespace cpnq;

TEST_CASE("scalar literal parser") {
  CHECK(parse_scalar_literal("1") == Scalar(1));
  CHECK(parse_scalar_literal("v^2") == Scalar::v_pow(2));
  CHECK(parse_scalar_literal("q") == Scalar::q_pow(1));
  CHECK(parse_scalar_literal("q^-1") == Scalar::q_pow(-1));
  CHECK(parse_scalar_literal("(v^4 - 1)/(v^2)") ==
        (Scalar::v_pow(4) - Scalar(1)) / Scalar::v_pow(2));
  CHECK(parse_scalar_literal("-3/4") == Scalar(mpq_class(-3, 4)));
  CHECK(parse_scalar_literal("2*q + 1") ==
        Scalar(2) * Scalar::q_pow(1) + Scalar(1));
  CHECK(parse_scalar_literal(" ( q - q^-1 ) ^ 2 ") ==
        (Scalar::q_pow(1) - Scalar::q_pow(-1)) *
            (Scalar::q_pow(1) - Scalar::q_pow(-1)));
  CHECK_THROWS_AS(parse_scalar_literal("v +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar_literal("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar_literal("(v"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar_literal("1 extra"), std::invalid_argument);
}

TEST_CASE("configuration validation") {
  CheckConfig bad;
  bad.N = 5;
  CHECK_THROWS_AS(run_checks(bad), std::invalid_argument);
  CheckConfig mixed;
  mixed.c0 = "symbolic";
  mixed.c1 = "q";
  CHECK_THROWS_AS(run_checks(mixed), std::invalid_argument);
  CheckConfig zero;
  zero.c0 = "0";
  CHECK_THROWS_AS(run_checks(zero), std::invalid_argument);
}

TEST_CASE("full registry passes at N = 2 with a symbolic ratio") {
  CheckConfig cfg;
  cfg.N = 2;
  cfg.c1 = "symbolic";
  Report r = run_checks(cfg);
  CHECK(r.records.size() == detail::check_registry().size());
  for (const auto& rec : r.records) {
    INFO(rec.id << ": " << rec.witness);
    CHECK(rec.status == "pass");
  }
  CHECK(r.all_passed());
  // Canonical order matches the registry.
  for (size_t i = 0; i < r.records.size(); ++i)
    CHECK(r.records[i].id == detail::check_registry()[i].id);
}

TEST_CASE("filter selects checks by id") {
  CheckConfig cfg;
  cfg.filter = {"braid-equation", "raw-pairing"};
  Report r = run_checks(cfg);
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].id == "braid-equation");
  CHECK(r.records[1].id == "raw-pairing");
  CHECK(r.all_passed());
}

TEST_CASE("structured reports are byte-identical across runs") {
  CheckConfig cfg;
  cfg.N = 2;
  cfg.filter = {"wedge-relations", "clifford-offdiagonal", "t-display",
                "negative-control"};
  Report r1 = run_checks(cfg);
  Report r2 = run_checks(cfg);
  CHECK(emit_structured(r1) == emit_structured(r2));
  CHECK(emit_text(r1) == emit_text(r2));
  // Timings are excluded from the default schema.
  CHECK(emit_structured(r1).find("millis") == std::string::npos);
  cfg.include_timings = true;
  Report rt = run_checks(cfg);
  CHECK(emit_structured(rt).find("millis") != std::string::npos);
}

TEST_CASE("structured schema carries ids, anchors and statuses") {
  CheckConfig cfg;
  cfg.filter = {"negative-control"};
  Report r = run_checks(cfg);
  std::string json = emit_structured(r);
  CHECK(json.find("\"check_id\": \"negative-control\"") != std::string::npos);
  CHECK(json.find("\"paper_anchor\": \"thm:dsquare\"") != std::string::npos);
  CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
  // The negative control records its witness entry.
  CHECK(json.find("\"witness\"") != std::string::npos);
  CHECK(json.find("\"rank\": 2") != std::string::npos);
}

TEST_CASE("failing records are rendered with their witness") {
  Report r;
  r.config = CheckConfig{};
  r.records.push_back(
      {"demo", "thm:dsquare", "fail", "entry (0,0): (1)*E2", 0});
  CHECK_FALSE(r.all_passed());
  std::string json = emit_structured(r);
  CHECK(json.find("\"status\": \"fail\"") != std::string::npos);
  CHECK(json.find("\"witness\": \"entry (0,0): (1)*E2\"") !=
        std::string::npos);
  std::string text = emit_text(r);
  CHECK(text.find("fail") == 0);
  CHECK(text.find("-- entry (0,0): (1)*E2") != std::string::npos);
}
