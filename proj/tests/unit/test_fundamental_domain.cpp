#include <cmath>
#include <random>

#include "doctest.h"
#include "normone/domain.hpp"

using namespace normone;

TEST_CASE("halved arcs") {
  auto I = parse_arc_spec("0:pi,pi/2:3pi/2", 2)[0];
  auto s = build_istar(I);
  REQUIRE(s.size() == 2);
  REQUIRE(s[0].size() == 1);
  CHECK(s[0][0].hi == Angle::pi_times(Rational(1, 2)));
  REQUIRE(s[1].size() == 2);
  CHECK(s[1][0].lo == Angle::pi_times(Rational(1, 4)));
  CHECK(s[1][1].lo == Angle::pi_times(Rational(5, 4)));
  CHECK(s[1][1].hi == Angle::pi_times(Rational(7, 4)));
}

TEST_CASE("region membership in Q(i)") {
  auto F = load_descriptor("Qi");
  Region R(*F, ArcProduct::full(1), Rational(25));
  CHECK(R.contains(IVec{3, 4, 0, 0}));
  CHECK(R.contains(IVec{5, 0, 0, 0}));       // closed radial cap, arg 0 included
  CHECK_FALSE(R.contains(IVec{-5, 0, 0, 0}));  // arg pi excluded
  CHECK_FALSE(R.contains(IVec{4, 4, 0, 0}));
  CHECK(R.contains(IVec{0, 1, 0, 0}));
  CHECK(R.radius_sq() == doctest::Approx(25));
}

TEST_CASE("unit reduction lands in the domain") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> c(-9, 9);
  for (const char* name : {"Qi", "Qzeta5"}) {
    auto F = load_descriptor(name);
    Region dom = Region::domain(*F);
    int deg = F->K->degree();
    for (int s = 0; s < 40; ++s) {
      IVec b{};
      for (int j = 0; j < deg; ++j) b[j] = c(rng);
      if (F->K->is_zero(b)) continue;
      UnitReduction r = reduce_to_domain(*F, b);
      CHECK(dom.contains(r.beta));
      IVec back = mul_eps_pow(*F, b, r.m);
      if (r.sign < 0) back = F->K->neg(back);
      CHECK(back == r.beta);
      // the orbit representative is unique
      IVec other = mul_eps_pow(*F, F->K->neg(b), 3);
      CHECK(reduce_to_domain(*F, other).beta == r.beta);
    }
  }
}

TEST_CASE("volume formula and Monte-Carlo estimate for Q(i)") {
  auto F = load_descriptor("Qi");
  ArcProduct full = ArcProduct::full(1);
  // half disc of radius 1
  CHECK(region_volume(*F, full, 1.0) == doctest::Approx(M_PI / 2));
  MonteCarloVolume mc = monte_carlo_volume(*F, full, 200000, 5);
  CHECK(std::fabs(mc.volume - M_PI / 2) <= 4 * mc.std_error);
  auto q = parse_arc_spec("0:pi/2", 1)[0];
  CHECK(region_volume(*F, q, 1.0) == doctest::Approx(M_PI / 8));
}

TEST_CASE("Lipschitz parameters") {
  auto F = load_descriptor("Qi");
  LipschitzParams p = lipschitz_params(*F, ArcProduct::full(1));
  CHECK(p.derived);
  CHECK(p.M == 3 + static_cast<int>(std::ceil(M_PI / 2)));
  CHECK(p.L == 2);
  auto Z = load_descriptor("Qzeta5");
  CHECK_FALSE(lipschitz_params(*Z, ArcProduct::full(2)).derived);
}

TEST_CASE("enclosing ball for the quartic region") {
  auto Z = load_descriptor("Qzeta5");
  double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(L0_sq(*Z) == doctest::Approx(phi * phi + 1));
  Region R(*Z, ArcProduct::full(2), Rational(16));
  CHECK(static_cast<double>(R.radius_sq()) == doctest::Approx((phi * phi + 1) * 4));
}
