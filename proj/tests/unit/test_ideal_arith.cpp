#include <random>

#include "doctest.h"
#include "normone/field.hpp"
#include "normone/ideal.hpp"

using namespace normone;

namespace {

IVec random_element(std::mt19937_64& rng, int deg, long range) {
  std::uniform_int_distribution<long> c(-range, range);
  IVec b{};
  do {
    for (int j = 0; j < deg; ++j) b[j] = c(rng);
  } while (b == IVec{});
  return b;
}

}  // namespace

TEST_CASE("prime decomposition in Q(i)") {
  auto F = load_descriptor("Qi");
  const NumberField& K = *F->K;
  auto p5 = primes_above(K, Ring::K, 5);
  REQUIRE(p5.size() == 2);
  CHECK(p5[0].norm() == 5);
  CHECK(p5[1].norm() == 5);
  CHECK(conj_ideal(*F, p5[0].ideal) == p5[1].ideal);
  auto p2 = primes_above(K, Ring::K, 2);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].e == 2);
  auto p3 = primes_above(K, Ring::K, 3);
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].norm() == 9);
}

TEST_CASE("prime decomposition in Q(zeta5)") {
  auto F = load_descriptor("Qzeta5");
  const NumberField& K = *F->K;
  CHECK(primes_above(K, Ring::K, 11).size() == 4);
  CHECK(primes_above(K, Ring::K, 19).size() == 2);
  CHECK(primes_above(K, Ring::K, 2).size() == 1);
  CHECK(primes_above(K, Ring::K, 2)[0].norm() == 16);
  auto p5 = primes_above(K, Ring::K, 5);
  REQUIRE(p5.size() == 1);
  CHECK(p5[0].e == 4);
  CHECK(primes_above(*F->k, Ring::k, 11).size() == 2);
  CHECK(primes_above(*F->k, Ring::k, 7).size() == 1);
}

TEST_CASE("ideal norms are multiplicative and sums are gcds") {
  std::mt19937_64 rng(11);
  for (const char* name : {"Qi", "Qsqrt-5", "Qzeta5"}) {
    auto F = load_descriptor(name);
    const NumberField& K = *F->K;
    for (int s = 0; s < 20; ++s) {
      IVec a = random_element(rng, K.degree(), 6), b = random_element(rng, K.degree(), 6);
      IdealHNF A = ideal_from_element(K, Ring::K, a), B = ideal_from_element(K, Ring::K, b);
      CHECK(A.norm() == std::labs(F->norm_abs_int(a)));
      IdealHNF AB = ideal_mul(K, A, B);
      CHECK(AB.norm() == A.norm() * B.norm());
      CHECK(AB == ideal_from_element(K, Ring::K, K.mul(a, b)));
      IdealHNF S = ideal_add(K, A, B);
      CHECK(ideal_divides(S, A));
      CHECK(ideal_divides(S, B));
      CHECK(ideal_contains(A, K.mul(a, b)));
    }
  }
}

TEST_CASE("factorisation reproduces the ideal") {
  std::mt19937_64 rng(12);
  auto F = load_descriptor("Qzeta5");
  const NumberField& K = *F->K;
  for (int s = 0; s < 15; ++s) {
    IdealHNF I = ideal_from_element(K, Ring::K, random_element(rng, 4, 5));
    IdealHNF P = unit_ideal(K, Ring::K);
    for (const auto& [pr, e] : factor_ideal(K, Ring::K, I)) P = ideal_mul(K, P, ideal_pow(K, pr.ideal, e));
    CHECK(P == I);
  }
}

TEST_CASE("decompose splits beta O_K into A O_K, D and a primitive part") {
  std::mt19937_64 rng(13);
  for (const char* name : {"Qi", "Qsqrt-3", "Qsqrt-5", "Qzeta5"}) {
    auto F = load_descriptor(name);
    const NumberField& K = *F->K;
    for (int s = 0; s < 25; ++s) {
      IVec b = random_element(rng, K.degree(), 8);
      Decomposition d = decompose(*F, b);
      IdealHNF prod = ideal_mul(K, ideal_mul(K, extend_to_K(*F, d.A), d.D), d.B);
      CHECK(prod == ideal_from_element(K, Ring::K, b));
      CHECK(in_IP(*F, d.B));
      CHECK(ideal_divides(d.D, squarefree_part(*F)));
    }
  }
}

TEST_CASE("extension of rational ideals and the ramified part") {
  auto F = load_descriptor("Qi");
  IdealHNF two = ideal_from_element(*F->k, Ring::k, IVec{2, 0, 0, 0});
  IdealHNF P = F->ramified[0].p;
  CHECK(extend_to_K(*F, two) == ideal_mul(*F->K, P, P));
  CHECK(squarefree_part(*F) == P);
  CHECK_FALSE(in_IP(*F, P));
  CHECK_FALSE(in_IP(*F, ideal_from_element(*F->K, Ring::K, IVec{3, 0, 0, 0})));
  CHECK(in_IP(*F, ideal_from_element(*F->K, Ring::K, IVec{2, 1, 0, 0})));
}

TEST_CASE("Moebius enumeration over O_k") {
  auto F = load_descriptor("Qi");
  auto terms = mobius_enumerate(*F, 30);
  std::vector<std::pair<i64, int>> got;
  for (const auto& t : terms) got.push_back({t.norm, t.mu});
  // squarefree odd n <= 30
  std::vector<std::pair<i64, int>> want{{1, 1},   {3, -1},  {5, -1},  {7, -1},  {11, -1}, {13, -1},
                                        {15, 1},  {17, -1}, {19, -1}, {21, 1},  {23, -1}, {29, -1}};
  CHECK(got == want);
  auto Z = load_descriptor("Qzeta5");
  auto zt = mobius_enumerate(*Z, 20);
  // O_k ideals of Q(sqrt5) coprime to sqrt5, squarefree, norm <= 20:
  // 1; norm 4 (2 inert); 9 (3 inert); norm 11 (x2); norm 19 (x2)
  std::vector<i64> norms;
  for (const auto& t : zt) norms.push_back(t.norm);
  CHECK(norms == std::vector<i64>{1, 4, 9, 11, 11, 19, 19});
}
