#include <climits>
#include <cmath>
#include <random>

#include "doctest.h"
#include "normone/field.hpp"

using namespace normone;

TEST_CASE("checked integer arithmetic") {
  CHECK(checked_mul(1L << 31, 1L << 31) == (1L << 62));
  CHECK_THROWS_AS(checked_mul(LONG_MAX, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_add(LONG_MAX, 1), std::overflow_error);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(mod_floor(-7, 5) == 3);
  XGcd g = xgcd(240, 46);
  CHECK(g.g == 2);
  CHECK(g.s * 240 + g.t * 46 == 2);
}

TEST_CASE("factorisation and squarefree kernels") {
  auto f = factor_u64(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<u64, int>{2, 3});
  CHECK(squarefree_kernel(4 * 9 * 7) == 7);
  CHECK(squarefree_kernel(12) == 3);
  CHECK(is_squarefree(30));
  CHECK_FALSE(is_squarefree(18));
  CHECK(primes_up_to(30).size() == 10);
  CHECK(kronecker(5, 11) == 1);
  CHECK(kronecker(5, 7) == -1);
  CHECK(kronecker(-4, 3) == -1);
}

TEST_CASE("exact parsing of angles, decimals and heights") {
  CHECK(parse_decimal("6.2832") == Rational(3927, 625));
  CHECK(parse_angle("pi/3") == Angle::pi_times(Rational(1, 3)));
  CHECK(parse_angle("2*pi/3") == Angle::pi_times(Rational(2, 3)));
  CHECK(parse_angle("0.5") == Angle{Rational(1, 2), 0});
  CHECK(compare_angles(Angle::pi_times(1), parse_angle("3.14159")) > 0);
  CHECK(compare_angles(Angle::pi_times(1), parse_angle("3.1416")) < 0);
  HeightBound h = parse_height("sqrt(5)");
  CHECK(h.h2 == 5);
  CHECK(h.pow2N(2) == 25);
  CHECK(parse_height("7/2").h2 == Rational(49, 4));
  CHECK(parse_height_list("1,2,sqrt(5)").size() == 3);
  CHECK_THROWS_AS(parse_angle("pie"), ConfigError);
}

TEST_CASE("arc specifications") {
  auto full = parse_arc_spec("0:6.2832", 1);
  REQUIRE(full.size() == 1);
  CHECK(full[0].arcs[0].hi.is_two_pi());
  auto wrap = parse_arc_spec("5:1", 1);
  CHECK(wrap.size() == 2);
  auto prod = parse_arc_spec("0:pi,pi/2:3pi/2", 2);
  REQUIRE(prod.size() == 1);
  CHECK(prod[0].N() == 2);
  CHECK(prod[0].measure() == doctest::Approx(M_PI * M_PI));
  CHECK_THROWS_AS(parse_arc_spec("1:1", 1), ConfigError);
  CHECK_THROWS_AS(parse_arc_spec("0:1", 2), ConfigError);
}

TEST_CASE("builtin imaginary quadratic fields") {
  auto Qi = load_descriptor("Qi");
  CHECK(Qi->N == 1);
  CHECK(Qi->torsion.size() == 4);
  REQUIRE(Qi->ramified.size() == 1);
  CHECK(Qi->ramified[0].rational_prime == 2);
  CHECK(Qi->rel_disc_norm == 4);
  CHECK(load_descriptor("Qsqrt-3")->torsion.size() == 6);
  auto Q5 = load_descriptor("Qsqrt-5");
  CHECK(Q5->torsion.size() == 2);
  CHECK(Q5->ramified.size() == 2);
  CHECK(Q5->rel_disc_norm == 20);
  CHECK(load_descriptor("Qsqrt-7")->ramified.size() == 1);
  CHECK_THROWS_AS(load_descriptor("Qsqrt-4"), ConfigError);
  CHECK_THROWS_AS(load_descriptor("Qnope"), ConfigError);
}

TEST_CASE("cyclotomic quartic field") {
  auto Z = load_descriptor("Qzeta5");
  CHECK(Z->N == 2);
  CHECK(Z->disc_K == 125);
  CHECK(Z->disc_k == 5);
  CHECK(Z->rel_disc_norm == 5);
  CHECK(Z->torsion.size() == 10);
  CHECK(Z->regulator == doctest::Approx(std::log((1 + std::sqrt(5.0)) / 2)).epsilon(1e-12));
  REQUIRE(Z->ramified.size() == 1);
  CHECK(Z->ramified[0].norm == 5);
  // zeta^(k) has exact argument 2 pi k / 5 under the first embedding
  std::vector<Rational> args;
  for (const auto& t : Z->torsion) args.push_back(t.arg_over_pi[0]);
  int fifths = 0;
  for (const auto& a : args)
    if (Rational(a * 10).get_den() == 1) ++fifths;
  CHECK(fifths == 10);
}

TEST_CASE("descriptor file equals the builtin") {
  auto a = load_descriptor("Qzeta5");
  auto b = load_descriptor(std::string(NORMONE_DATA_DIR) + "/qzeta5.json");
  CHECK(b->name == a->name);
  CHECK(a->tau == b->tau);
  CHECK(a->K->poly() == b->K->poly());
  CHECK(a->units == b->units);
  CHECK(a->regulator == b->regulator);
  CHECK(a->disc_K == b->disc_K);
  REQUIRE(a->ramified.size() == b->ramified.size());
  CHECK(a->ramified[0].p == b->ramified[0].p);
  CHECK(a->torsion.size() == b->torsion.size());
}

TEST_CASE("invalid descriptors are rejected") {
  CHECK_THROWS_AS(load_descriptor_json("{", "bad"), ConfigError);
  CHECK_THROWS_AS(load_descriptor_json(R"({"schema": "normone-field/1", "mode": "imag_quadratic", "d": 4})", "bad"),
                  ConfigError);
  // tau that is not an automorphism
  CHECK_THROWS_AS(load_descriptor_json(R"({
    "schema": "normone-field/1", "name": "x", "mode": "quartic_cm",
    "basis": {"min_poly": [1, 1, 1, 1, 1],
              "roots": [[0.30901699437494745, 0.9510565162951535], [-0.8090169943749475, 0.5877852522924731]],
              "k": [[1, 0, 0, 0], [-1, 0, -1, -1]]},
    "tau": [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    "class_reps": [{"hnf": [[1, 0], [0, 1]]}], "units": [[1, 1]],
    "ramified": [{"P": {"generators": [[1, 2]]}, "p": {"generators": [[1, -1, 0, 0]]}}],
    "discs": {"k": 5, "K": 125}})",
                                       "x"),
                  ConfigError);
}

TEST_CASE("fundamental unit agrees with brute force") {
  // (t, n): w^2 = t w + n
  for (auto [t, n] : std::vector<std::pair<i64, i64>>{{0, 2}, {0, 3}, {1, 1}, {1, 3}, {0, 7}, {1, 7}}) {
    double w = (t + std::sqrt(static_cast<double>(t * t + 4 * n))) / 2;
    double best = 1e300;
    for (i64 x = -200; x <= 200; ++x)
      for (i64 y = -200; y <= 200; ++y) {
        i64 nrm = x * x + t * x * y - n * y * y;
        if (std::labs(nrm) != 1) continue;
        double v = std::fabs(std::log(std::fabs(x + y * w)));
        if (v > 1e-9) best = std::min(best, v);
      }
    KVec e = fundamental_unit(t, n);
    CHECK(std::labs(e[0] * e[0] + t * e[0] * e[1] - n * e[1] * e[1]) == 1);
    double got = std::fabs(std::log(std::fabs(e[0] + e[1] * w)));
    CHECK(got == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("psi and heights on Q(i)") {
  auto F = load_descriptor("Qi");
  ReducedFraction r = F->psi_int(IVec{2, 1, 0, 0});
  CHECK(r.m == 5);
  CHECK(r.gamma == IVec{3, 4, 0, 0});
  CHECK(F->denominator_norm(r) == 5);
  HeightValue h = F->weil_height(F->fraction_to_q(r));
  CHECK(h.value == doctest::Approx(std::sqrt(5.0)));
  CHECK(F->in_SK(F->fraction_to_q(r)));
  CHECK_FALSE(F->is_torsion(F->fraction_to_q(r)));
  CHECK(F->is_torsion(F->fraction_to_q(F->psi_int(IVec{1, 1, 0, 0}))));
}

TEST_CASE("psi lands in S_K and heights are conjugation invariant") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-9, 9);
  for (const char* name : {"Qi", "Qsqrt-3", "Qsqrt-5", "Qzeta5"}) {
    auto F = load_descriptor(name);
    int deg = F->K->degree();
    for (int s = 0; s < 30; ++s) {
      IVec b{};
      for (int j = 0; j < deg; ++j) b[j] = c(rng);
      if (F->K->is_zero(b)) continue;
      QVec a = F->fraction_to_q(F->psi_int(b));
      CHECK(F->in_SK(a));
      QVec ai = F->K->qinv(a);
      CHECK(F->weil_height(a).pow2N == F->weil_height(ai).pow2N);
      CHECK(F->weil_height(a).pow2N == F->weil_height(F->tau_q(a)).pow2N);
      // psi(beta) = psi(c beta) for c in k
      IVec b2 = F->K->mul(b, F->k_to_K(KVec{3, F->N == 2 ? 1 : 0, 0, 0}));
      CHECK(F->psi_int(b2) == F->psi_int(b));
    }
  }
}

TEST_CASE("certified argument comparisons are exact at ties") {
  auto F = load_descriptor("Qi");
  ArgProbe pi_half(*F, IVec{0, 1, 0, 0}, 0);
  CHECK(pi_half.compare(Endpoint::make(Angle::pi_times(Rational(1, 2)))) == 0);
  CHECK(pi_half.compare(Endpoint::make(Angle::pi_times(Rational(1, 3)))) > 0);
  ArgProbe one(*F, IVec{1, 0, 0, 0}, 0);
  CHECK(one.compare(Endpoint::make(Angle::zero())) == 0);
  CHECK(one.in_arc(Endpoint::make(Angle::zero()), Endpoint::make(Angle::pi_times(1))));
  ArgProbe near(*F, IVec{1000000, 1, 0, 0}, 0);
  CHECK(near.compare(Endpoint::make(Angle{Rational(1, 1000000), 0})) < 0);
  CHECK(near.approx() == doctest::Approx(std::atan(1e-6)));
  auto Z = load_descriptor("Qzeta5");
  ArgProbe z(*Z, IVec{0, 1, 0, 0}, 0);
  CHECK(z.compare(Endpoint::make(Angle::pi_times(Rational(2, 5)))) == 0);
}
