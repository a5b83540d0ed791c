#include <cmath>
#include <numeric>

#include "doctest.h"
#include "normone/oracle.hpp"
#include "normone/s2.hpp"

using namespace normone;

namespace {

Arc arc(const char* spec) { return parse_arc_spec(spec, 1)[0].arcs[0]; }

i64 s2(const char* spec, const char* H) { return count_S2(arc(spec), parse_height(H), 2).count; }

}  // namespace

TEST_CASE("height one") {
  // 1, e^{i pi/3}, i, e^{2 i pi/3}; -1 sits at pi
  CHECK(s2("0:pi", "1") == 4);
  CHECK(s2("pi/3:pi/2", "1") == 1);
  CHECK(s2("pi/3:2pi/3", "1") == 2);
}

TEST_CASE("monotone in H and additive over I") {
  i64 prev = 0;
  for (int h = 1; h <= 12; ++h) {
    i64 c = s2("0:pi", std::to_string(h).c_str());
    CHECK(c >= prev);
    prev = c;
  }
  CHECK(s2("0:pi", "9") == s2("0:1", "9") + s2("1:pi/2", "9") + s2("pi/2:pi", "9"));
}

TEST_CASE("reflection through alpha -> -alpha") {
  CHECK(reflect_to_upper(arc("pi:3pi/2")).hi == Angle::pi_times(Rational(1, 2)));
  CHECK(s2("pi:3pi/2", "8") == s2("0:pi/2", "8"));
  CHECK(s2("4:5", "8") == s2("0.8584073464102069:1.8584073464102069", "8"));
  CHECK_THROWS_AS(count_S2(arc("3:4"), parse_height("5")), ConfigError);
}

TEST_CASE("aggregate points are primitive palindromic quadratics") {
  auto pts = aggregate_points(arc("0:pi"), parse_height("6"));
  CHECK(static_cast<i64>(pts.size()) + 1 == s2("0:pi", "6"));
  for (const auto& p : pts) {
    CHECK(std::gcd(p.a, p.b) == 1);
    CHECK(std::labs(p.b) < 2 * p.a);
    CHECK(p.b * p.b - 4 * p.a * p.a < 0);
    CHECK(std::cos(p.theta) == doctest::Approx(-static_cast<double>(p.b) / (2.0 * p.a)));
    CHECK(p.a <= 36);
  }
}

TEST_CASE("regrouping by field reproduces the per-field counts") {
  S2Result r = count_S2(arc("0:pi"), parse_height("8"), 2, true);
  for (long d : {1, 2, 3, 5, 7, 11}) {
    auto F = imag_quadratic(d);
    OracleResult o = enumerate_SK(*F, parse_arc_spec("0:pi", 1), parse_height("8"), 2);
    CHECK(r.by_field[d] + r.boundary == static_cast<i64>(o.points.size()));
  }
}

TEST_CASE("quartic growth against quadratic growth per field") {
  S2Result a = count_S2(arc("0:pi"), parse_height("20"), 2);
  S2Result b = count_S2(arc("0:pi"), parse_height("10"), 2);
  double exponent = std::log(static_cast<double>(a.count) / b.count) / std::log(2.0);
  CHECK(exponent == doctest::Approx(4).epsilon(0.05));
  CHECK(a.count / a.main_term == doctest::Approx(1).epsilon(0.05));
}
