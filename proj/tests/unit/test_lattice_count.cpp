#include <cmath>
#include <random>

#include "doctest.h"
#include "normone/domain.hpp"
#include "normone/lattice.hpp"

using namespace normone;

TEST_CASE("Minkowski determinants match the closed form") {
  auto F = load_descriptor("Qi");
  const NumberField& K = *F->K;
  LatticeBasis L = minkowski_lattice(*F, unit_ideal(K, Ring::K));
  CHECK(L.det == doctest::Approx(1.0));
  CHECK(L.det_closed_form == doctest::Approx(1.0));
  LatticeBasis L2 = minkowski_lattice(*F, ideal_from_element(K, Ring::K, IVec{1, 1, 0, 0}));
  CHECK(L2.det == doctest::Approx(2.0));
  auto Z = load_descriptor("Qzeta5");
  LatticeBasis LZ = minkowski_lattice(*Z, unit_ideal(*Z->K, Ring::K));
  CHECK(LZ.det == doctest::Approx(std::sqrt(125.0) / 4));
  CHECK(LZ.det == doctest::Approx(LZ.det_closed_form).epsilon(1e-12));
}

TEST_CASE("shortest vectors") {
  auto F = load_descriptor("Qi");
  const NumberField& K = *F->K;
  ShortestVector s = shortest_vector(*F, minkowski_lattice(*F, unit_ideal(K, Ring::K)));
  CHECK(s.length_sq == 1);
  CHECK(s.lambda1 == doctest::Approx(1.0));
  ShortestVector s5 = shortest_vector(*F, minkowski_lattice(*F, ideal_from_element(K, Ring::K, IVec{2, 1, 0, 0})));
  CHECK(s5.length_sq == 5);
  CHECK(s5.lambda1 == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("lambda_1 is at least N(I)^(1/2N) and det matches on random ideals") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> c(-7, 7);
  for (const char* name : {"Qi", "Qsqrt-5", "Qzeta5"}) {
    auto F = load_descriptor(name);
    const NumberField& K = *F->K;
    for (int s = 0; s < 12; ++s) {
      IVec a{}, b{};
      for (int j = 0; j < K.degree(); ++j) {
        a[j] = c(rng);
        b[j] = c(rng);
      }
      if (K.is_zero(a) || K.is_zero(b)) continue;
      IdealHNF I = ideal_add(K, ideal_from_element(K, Ring::K, a), ideal_from_element(K, Ring::K, b));
      LatticeBasis L = minkowski_lattice(*F, I);
      CHECK(L.det == doctest::Approx(L.det_closed_form).epsilon(1e-9));
      ShortestVector sv = shortest_vector(*F, L);
      CHECK(sv.lambda1 >= std::pow(static_cast<double>(I.norm()), 1.0 / (2 * F->N)) * (1 - 1e-12));
    }
  }
}

TEST_CASE("exact lattice point counts") {
  auto F = load_descriptor("Qi");
  LatticeBasis Z2 = minkowski_lattice(*F, unit_ideal(*F->K, Ring::K));
  auto all = [](const IVec&) { return true; };
  // integer points with x^2 + y^2 <= 6.25, origin excluded
  CHECK(count_points(*F, Z2, 6.25L, all) == 20);
  CHECK(count_points(*F, Z2, 6.25L, [](const IVec&) { return false; }) == 0);
  // a half-open unit cell holds exactly one lattice point, wherever it sits
  for (double t : {0.25, 0.5, 0.75}) {
    auto cell = [t](const IVec& v) {
      double x = v[0] - 3 - t, y = v[1] - 1 - t;
      return x >= 0 && x < 1 && y >= 0 && y < 1;
    };
    CHECK(count_points(*F, Z2, 100.0L, cell) == 1);
  }
  std::vector<IVec> pts;
  count_points(*F, Z2, 1.0L, all, &pts);
  CHECK(pts.size() == 4);
}

TEST_CASE("error certificate") {
  CHECK(error_certificate(2, 4, 1.0, 1.0) == doctest::Approx(512));
  CHECK(error_certificate(2, 4, 2.0, 1.0) > error_certificate(2, 4, 1.0, 1.0));
}

TEST_CASE("certificate bounds sector counts in Q(i)") {
  auto F = load_descriptor("Qi");
  const NumberField& K = *F->K;
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<long> c(-6, 6), t(1, 400), arc(0, 11);
  for (int s = 0; s < 20; ++s) {
    IVec a{c(rng), c(rng), 0, 0};
    if (K.is_zero(a)) continue;
    IdealHNF I = ideal_from_element(K, Ring::K, a);
    long lo = arc(rng), hi = arc(rng);
    if (lo == hi) continue;
    if (lo > hi) std::swap(lo, hi);
    ArcProduct P{{make_arc(Angle::pi_times(Rational(lo, 6)), Angle::pi_times(Rational(hi + 1, 6)))}};
    Rational T2N = t(rng) * I.norm();
    Region R(*F, P, T2N);
    LatticeBasis L = minkowski_lattice(*F, I);
    i64 n = count_points(*F, L, R.radius_sq(), [&](const IVec& b) { return R.contains(b); });
    double vol = region_volume(*F, P, T2N.get_d());
    LipschitzParams lp = lipschitz_params(*F, P);
    double T = std::sqrt(T2N.get_d());
    double cert = error_certificate(2, lp.M, lp.L * T, shortest_vector(*F, L).lambda1);
    CHECK(std::fabs(n - vol / L.det) <= cert);
  }
}
