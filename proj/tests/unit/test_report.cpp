#include "doctest.h"
#include "normone/report.hpp"

using namespace normone;

TEST_CASE("count report") {
  auto F = load_descriptor("Qi");
  CountReport r = run_count(*F, {ArcProduct::full(1)}, parse_height("5"), true, true, 2);
  CHECK_FALSE(r.failed);
  CHECK(r.sieve == 36);
  REQUIRE(r.oracle);
  CHECK(*r.oracle == 36);
  REQUIRE(r.discrepancy);
  CHECK(r.discrepancy->exact);
  Json j = r.json();
  CHECK(j["status"] == "ok");
  CHECK(j["sieve"] == 36);
  CHECK(j["residual"].get<double>() == doctest::Approx(36 - 2 / (M_PI * M_PI) * 2 * M_PI * 25));
  CHECK(j["ledger"]["cells"].size() == 2);
  CHECK(j.dump() == run_count(*F, {ArcProduct::full(1)}, parse_height("5"), true, true, 1).json().dump());
}

TEST_CASE("field and constants json") {
  auto F = load_descriptor("Qi");
  Json f = field_json(*F);
  CHECK(f["ramified"] == Json::array({2}));
  Json c = constants_json(*F);
  CHECK(c["A_K"].get<double>() == doctest::Approx(0.20264).epsilon(1e-4));
}

TEST_CASE("bounded residual fit") {
  CHECK(fit_bounded({1.0, 0.5, 0.7, 0.4}).bounded);
  CHECK_FALSE(fit_bounded({0.1, 0.1, 1.0, 3.0}).bounded);
  CHECK(log_factor(2, 10.0) == 1.0);
}
