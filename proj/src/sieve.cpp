#include "normone/sieve.hpp"

#include <boost/math/special_functions/trigamma.hpp>
#include <cmath>
#include <cstdint>
#include <map>

#include "normone/lattice.hpp"
#include "normone/parallel.hpp"

namespace normone {

namespace {

IdealHNF ramified_product(const FieldDescriptor& F, unsigned mask) {
  IdealHNF I = unit_ideal(*F.K, Ring::K);
  for (size_t i = 0; i < F.ramified.size(); ++i)
    if (mask & (1u << i)) I = ideal_mul(*F.K, I, F.ramified[i].p);
  return I;
}

i64 ramified_norm(const FieldDescriptor& F, unsigned mask) {
  i64 n = 1;
  for (size_t i = 0; i < F.ramified.size(); ++i)
    if (mask & (1u << i)) n = checked_mul(n, F.ramified[i].norm);
  return n;
}

// Number of lattice points of L in the union of the regions; all regions
// share the same T and differ only in their arcs.
i64 count_in_regions(const FieldDescriptor& F, const IdealHNF& L, const std::vector<Region>& regions) {
  i64 count = 0;
  const Region& r0 = regions.front();
  for_each_in_ball(F, L, r0.radius_sq(), [&](const IVec& beta) {
    if (!r0.radial_ok(beta) || !r0.in_F(beta)) return;
    for (const auto& R : regions)
      if (R.args_ok(beta)) {
        ++count;
        break;
      }
  });
  return count;
}

struct Term {
  int class_index;
  unsigned D_mask, E_mask;
  const MobiusTerm* A;
};

std::vector<Term> build_terms(const FieldDescriptor& F, const std::vector<std::pair<int, unsigned>>& cells,
                              const Rational& H2N, const std::vector<MobiusTerm>& mob) {
  std::vector<Term> terms;
  unsigned full = F.full_ramified_mask();
  for (const auto& [ci, D] : cells)
    for (unsigned E = 0; E <= full; ++E) {
      Rational nE = big(ramified_norm(F, E));
      for (const auto& m : mob) {
        // N(E) N(A)^2 > H^(2N) forces N(beta) > T^(2N).
        if (nE * big(m.norm) * big(m.norm) > H2N) break;
        terms.push_back({ci, D, E, &m});
      }
    }
  return terms;
}

i64 mobius_bound(const Rational& H2N) {
  // Largest X with X^2 <= H2N.
  Integer fl = H2N.get_num() / H2N.get_den();
  Integer r = sqrt(fl);
  return narrow(r);
}

SieveResult run_cells(const FieldDescriptor& F, const std::vector<std::pair<int, unsigned>>& cells,
                      const std::vector<ArcProduct>& I, const HeightBound& H, int threads, bool keep_rows) {
  if (I.empty()) throw ConfigError("empty arc set");
  Rational H2N = H.pow2N(F.N);
  if (H2N < 1) throw ConfigError("height bound must be at least 1");
  auto mob = mobius_enumerate(F, mobius_bound(H2N));
  auto terms = build_terms(F, cells, H2N, mob);
  std::vector<i64> counts(terms.size(), 0);
  parallel_for(static_cast<long>(terms.size()), threads, [&](long i) {
    const Term& t = terms[i];
    IdealHNF L = ideal_mul(*F.K, ideal_mul(*F.K, cell_ideal(F, t.class_index, t.D_mask), ramified_product(F, t.E_mask)),
                           extend_to_K(F, t.A->ideal));
    Rational T2N = cell_T2N(F, t.class_index, t.D_mask, H);
    std::vector<Region> regions;
    for (const auto& arc : I) regions.emplace_back(F, arc, T2N);
    counts[i] = count_in_regions(F, L, regions);
  });
  SieveResult res;
  res.ledger.truncation = H2N;
  res.ledger.terms = static_cast<long>(terms.size());
  std::map<std::pair<int, unsigned>, i64> cell_totals;
  for (const auto& c : cells) cell_totals[c] = 0;
  for (size_t i = 0; i < terms.size(); ++i) {
    const Term& t = terms[i];
    int mu_K = (__builtin_popcount(t.E_mask) % 2) ? -1 : 1;
    i64 signed_count = mu_K * t.A->mu * counts[i];
    res.count += signed_count;
    cell_totals[{t.class_index, t.D_mask}] += signed_count;
    if (counts[i] != 0) ++res.ledger.nonzero_terms;
    if (keep_rows) res.ledger.rows.push_back({t.class_index, t.D_mask, t.E_mask, t.A->ideal, mu_K, t.A->mu, counts[i]});
  }
  for (const auto& [c, v] : cell_totals) res.ledger.cells.push_back({c.first, c.second, v});
  return res;
}

}  // namespace

IdealHNF cell_ideal(const FieldDescriptor& F, int class_index, unsigned D_mask) {
  return ideal_mul(*F.K, extend_to_K(F, F.class_reps.at(class_index)), ramified_product(F, D_mask));
}

Rational cell_T2N(const FieldDescriptor& F, int class_index, unsigned D_mask, const HeightBound& H) {
  i64 nc = F.class_reps.at(class_index).norm();
  return H.pow2N(F.N) * big(checked_mul(nc, nc)) * big(ramified_norm(F, D_mask));
}

i64 count_term(const FieldDescriptor& F, int class_index, unsigned D_mask, unsigned E_mask, const IdealHNF& A,
               const ArcProduct& I, const HeightBound& H) {
  Rational H2N = H.pow2N(F.N);
  if (big(ramified_norm(F, E_mask)) * big(A.norm()) * big(A.norm()) > H2N) return 0;
  IdealHNF L = ideal_mul(*F.K, ideal_mul(*F.K, cell_ideal(F, class_index, D_mask), ramified_product(F, E_mask)),
                         extend_to_K(F, A));
  std::vector<Region> regions{Region(F, I, cell_T2N(F, class_index, D_mask, H))};
  return count_in_regions(F, L, regions);
}

i64 count_Zstar(const FieldDescriptor& F, int class_index, unsigned D_mask, const std::vector<ArcProduct>& I,
                const HeightBound& H, int threads, SieveLedger* ledger) {
  SieveResult r = run_cells(F, {{class_index, D_mask}}, I, H, threads, ledger != nullptr);
  if (ledger) *ledger = std::move(r.ledger);
  return r.count;
}

SieveResult count_SK(const FieldDescriptor& F, const std::vector<ArcProduct>& I, const HeightBound& H, int threads,
                     bool keep_rows) {
  std::vector<std::pair<int, unsigned>> cells;
  for (int c = 0; c < F.h_k; ++c)
    for (unsigned D = 0; D <= F.full_ramified_mask(); ++D) cells.emplace_back(c, D);
  return run_cells(F, cells, I, H, threads, keep_rows);
}

// ---------------------------------------------------------------------------
// Constants.

double zeta_k2(const FieldDescriptor& F) {
  double z2 = M_PI * M_PI / 6;
  if (F.N == 1) return z2;
  long disc = F.disc_k.get_si();
  // L(2, chi) = disc^-2 sum_{a=1}^{disc} chi(a) psi_1(a / disc)
  double L = 0;
  for (long a = 1; a <= disc; ++a) {
    int chi = kronecker(disc, a);
    if (chi != 0) L += chi * boost::math::trigamma(static_cast<double>(a) / disc);
  }
  L /= static_cast<double>(disc) * disc;
  return z2 * L;
}

EulerProduct zeta_k2_euler(const FieldDescriptor& F, u64 cutoff) {
  long double logv = 0;
  long disc = F.N == 1 ? 1 : F.disc_k.get_si();
  for (u64 p : primes_up_to(cutoff)) {
    long double x = 1.0L / (static_cast<long double>(p) * p);
    if (F.N == 1) {
      logv -= std::log1p(-x);
      continue;
    }
    int chi = kronecker(disc, static_cast<i64>(p));
    if (chi == 1)
      logv -= 2 * std::log1p(-x);
    else if (chi == 0)
      logv -= std::log1p(-x);
    else
      logv -= std::log1p(-x * x);
  }
  EulerProduct e;
  e.cutoff = cutoff;
  e.value = static_cast<double>(std::exp(logv));
  // Omitted factors: log prod_{p > X} <= sum_{n > X} 2 / (n^2 - 1) <= 2 / (X - 1).
  double tail_log = 2.0 / (static_cast<double>(cutoff) - 1);
  e.tail_bound = e.value * std::expm1(tail_log);
  return e;
}

ConstantAK constant_AK(const FieldDescriptor& F) {
  ConstantAK c;
  c.ramified_factor = 1;
  for (const auto& r : F.ramified) c.ramified_factor *= 2.0 * r.norm / (r.norm + 1.0);
  c.rel_disc_factor = 1.0 / std::sqrt(F.rel_disc_norm.get_d());
  c.zeta_k2 = zeta_k2(F);
  EulerProduct e = zeta_k2_euler(F, 1000000);
  c.zeta_k2_euler = e.value;
  c.zeta_k2_euler_tail = e.tail_bound;
  c.value = c.ramified_factor * c.rel_disc_factor * F.h_k * F.regulator /
            (F.omega_k * c.zeta_k2 * std::fabs(F.disc_k.get_d()));
  return c;
}

double main_term(const FieldDescriptor& F, const std::vector<ArcProduct>& I, const HeightBound& H) {
  double meas = 0;
  for (const auto& a : I) meas += a.measure();
  return constant_AK(F).value * meas * H.pow2N(F.N).get_d();
}

MobiusIdentities mobius_identities(const FieldDescriptor& F, u64 cutoff) {
  MobiusIdentities m;
  m.cutoff = cutoff;
  int s = static_cast<int>(F.ramified.size());
  m.sum_E = 0;
  m.prod_E = 1;
  for (unsigned E = 0; E <= F.full_ramified_mask(); ++E) {
    Rational t(1, static_cast<unsigned long>(ramified_norm(F, E)));
    m.sum_E += (__builtin_popcount(E) % 2) ? Rational(-t) : t;
  }
  for (const auto& r : F.ramified) m.prod_E *= Rational(r.norm - 1, r.norm);

  // Coefficients of prod_{P not ramified in K} (1 - N(P)^-s) = sum_n c(n) n^-s.
  std::vector<std::int16_t> c(cutoff + 1, 0);
  c[1] = 1;
  long disc = F.N == 1 ? 1 : F.disc_k.get_si();
  for (u64 p : primes_up_to(cutoff)) {
    int excluded = 0;
    for (const auto& r : F.ramified)
      if (r.rational_prime == p && static_cast<u64>(r.norm) == p) ++excluded;
    int c1 = 0, c2 = 0;
    if (F.N == 1) {
      if (!excluded) c1 = -1;
    } else {
      int chi = kronecker(disc, static_cast<i64>(p));
      if (chi == 1) {
        int live = 2 - excluded;
        c1 = -live;
        c2 = live == 2 ? 1 : 0;
      } else if (chi == 0) {
        if (!excluded) c1 = -1;
      } else {
        bool inert_excluded = false;
        for (const auto& r : F.ramified)
          if (r.rational_prime == p) inert_excluded = true;
        if (!inert_excluded) c2 = -1;
      }
    }
    if (c1 == 0 && c2 == 0) continue;
    u64 p2 = p * p;
    for (u64 n = (cutoff / p) * p; n >= p; n -= p) {
      int v = c1 * c[n / p];
      if (c2 != 0 && n % p2 == 0) v += c2 * c[n / p2];
      c[n] = static_cast<std::int16_t>(c[n] + v);
    }
  }
  long double sum = 0, comp = 0;
  for (u64 n = 1; n <= cutoff; ++n) {
    if (c[n] == 0) continue;
    long double term = static_cast<long double>(c[n]) / (static_cast<long double>(n) * n);
    long double y = term - comp;
    long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  m.sum_A = static_cast<double>(sum);
  double z = zeta_k2(F);
  double corr = 1;
  for (const auto& r : F.ramified) corr /= 1 - 1.0 / (static_cast<double>(r.norm) * r.norm);
  m.closed_A = corr / z;
  m.lhs_combined = std::ldexp(1.0, s) * m.sum_E.get_d() * m.sum_A;
  double rf = 1;
  for (const auto& r : F.ramified) rf *= 2.0 * r.norm / (r.norm + 1.0);
  m.rhs_combined = rf / z;
  return m;
}

}  // namespace normone
