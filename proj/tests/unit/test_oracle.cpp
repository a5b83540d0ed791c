#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "normone/oracle.hpp"
#include "normone/sieve.hpp"

using namespace normone;

namespace {

OracleResult run(const FieldDescriptor& F, const char* H, const char* arc = nullptr) {
  auto I = arc ? parse_arc_spec(arc, F.N) : std::vector<ArcProduct>{ArcProduct::full(F.N)};
  return enumerate_SK(F, I, parse_height(H), 2);
}

std::set<std::pair<IVec, i64>> as_set(const OracleResult& r) {
  std::set<std::pair<IVec, i64>> s;
  for (const auto& p : r.points) s.insert({p.alpha.gamma, p.alpha.m});
  return s;
}

}  // namespace

TEST_CASE("height one gives the roots of unity") {
  auto F = load_descriptor("Qi");
  OracleResult r = run(*F, "1");
  CHECK(r.anomalies == 0);
  std::set<std::pair<IVec, i64>> want{
      {IVec{1, 0, 0, 0}, 1}, {IVec{0, 1, 0, 0}, 1}, {IVec{-1, 0, 0, 0}, 1}, {IVec{0, -1, 0, 0}, 1}};
  CHECK(as_set(r) == want);
  for (const auto& p : r.points) CHECK(p.torsion);
}

TEST_CASE("first quadrant at height sqrt(5)") {
  auto F = load_descriptor("Qi");
  OracleResult r = run(*F, "sqrt(5)", "0:pi/2");
  // i has argument pi/2 and falls outside the half-open arc
  std::set<std::pair<IVec, i64>> want{{IVec{1, 0, 0, 0}, 1}, {IVec{3, 4, 0, 0}, 5}, {IVec{4, 3, 0, 0}, 5}};
  CHECK(as_set(r) == want);
}

TEST_CASE("oracle points satisfy their invariants") {
  for (const char* name : {"Qi", "Qsqrt-5", "Qzeta5"}) {
    auto F = load_descriptor(name);
    OracleResult r = run(*F, F->N == 1 ? "10" : "3");
    CHECK(r.anomalies == 0);
    std::set<IVec> betas;
    long cell_total = 0;
    for (const auto& c : r.cells) cell_total += c.count;
    CHECK(cell_total == static_cast<long>(r.points.size()));
    for (const auto& p : r.points) {
      CHECK(betas.insert(p.beta).second);
      CHECK(F->psi_int(p.beta) == p.alpha);
      // args(alpha) = 2 args(beta) mod 2pi
      auto ab = F->arg_vector(F->K->to_q(p.beta));
      for (int n = 0; n < F->N; ++n) {
        double d = std::remainder(p.args[n] - 2 * ab[n], 2 * M_PI);
        CHECK(std::fabs(d) < 1e-9);
      }
      CHECK(p.height <= (F->N == 1 ? 10.0 : 3.0) + 1e-12);
    }
  }
}

TEST_CASE("closure under inversion") {
  auto F = load_descriptor("Qsqrt-3");
  OracleResult r = run(*F, "12");
  auto s = as_set(r);
  for (const auto& p : r.points) {
    IVec c = F->tau_int(p.alpha.gamma);  // alpha^-1 = tau(alpha)
    CHECK(s.count({c, p.alpha.m}) == 1);
  }
}

TEST_CASE("oracle agrees with the sieve per cell") {
  for (const char* name : {"Qi", "Qsqrt-5", "Qsqrt-7"}) {
    auto F = load_descriptor(name);
    for (const char* arc : {"0:2pi", "pi/3:pi/2"}) {
      OracleResult o = run(*F, "12", arc);
      SieveResult s = count_SK(*F, parse_arc_spec(arc, 1), parse_height("12"), 2);
      CHECK(static_cast<i64>(o.points.size()) == s.count);
      for (const auto& c : s.ledger.cells) {
        long oc = 0;
        for (const auto& x : o.cells)
          if (x.D_mask == c.D_mask) oc = x.count;
        CHECK(oc == c.count);
      }
    }
  }
}

TEST_CASE("discrepancy") {
  auto F = load_descriptor("Qi");
  Discrepancy d1 = discrepancy(*F, run(*F, "1").points);
  CHECK(d1.exact);
  CHECK(d1.value == doctest::Approx(0.25));
  for (const char* H : {"5", "20"}) {
    Discrepancy d = discrepancy(*F, run(*F, H).points);
    CHECK(d.value >= 0);
    CHECK(d.value <= 1);
  }
  auto Z = load_descriptor("Qzeta5");
  Discrepancy dz = discrepancy(*Z, run(*Z, "2").points, 16);
  CHECK_FALSE(dz.exact);
  CHECK(dz.value > 0);
  CHECK(dz.value <= 1);
}

TEST_CASE("histogram") {
  auto F = load_descriptor("Qi");
  OracleResult r = run(*F, "10");
  auto bins = histogram(r.points, 7);
  long total = 0;
  for (const auto& b : bins) total += b.count;
  CHECK(total == static_cast<long>(r.points.size()));
  std::string csv = histogram_csv(bins);
  CHECK(csv.rfind("bin_lo,bin_hi,count\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 8);
  CHECK_THROWS_AS(histogram(r.points, 0), ConfigError);
}

TEST_CASE("coset and height properties") {
  for (const char* name : {"Qi", "Qsqrt-3", "Qzeta5"}) {
    auto F = load_descriptor(name);
    OracleResult r = run(*F, F->N == 1 ? "10" : "2");
    CosetReport c = coset_checks(*F, r.points, 300, 20, 99);
    CHECK(c.psi_checked == static_cast<long>(r.points.size()));
    CHECK(c.psi_violations == 0);
    CHECK(c.height_pairs == 300);
    CHECK(c.height_violations == 0);
    CHECK(c.coset_checked == 20);
    CHECK(c.coset_violations == 0);
  }
}

TEST_CASE("principal generators") {
  auto Z = load_descriptor("Qzeta5");
  IdealHNF A = ideal_from_element(*Z->k, Ring::k, KVec{3, 5, 0, 0});
  KVec g = principal_generator(*Z, A);
  CHECK(ideal_from_element(*Z->k, Ring::k, g) == A);
  CHECK(Z->k_real(g, 0).sign() > 0);
}
