#include "normone/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "normone/domain.hpp"
#include "normone/lattice.hpp"
#include "normone/parallel.hpp"
#include "normone/sieve.hpp"

namespace normone {

namespace {

constexpr double kTwoPi = 2 * M_PI;

struct ArcEndpoints {
  std::vector<std::pair<Endpoint, Endpoint>> coords;  // per coordinate
  std::vector<bool> full;
};

std::vector<ArcEndpoints> endpoints_of(const std::vector<ArcProduct>& I) {
  std::vector<ArcEndpoints> out;
  for (const auto& prod : I) {
    ArcEndpoints e;
    for (const auto& a : prod.arcs) {
      e.coords.push_back({Endpoint::make(a.lo), Endpoint::make(a.hi)});
      e.full.push_back(a.lo.is_zero() && a.hi.is_two_pi());
    }
    out.push_back(std::move(e));
  }
  return out;
}

// arg sigma_n(alpha) = arg sigma_n(gamma) since m > 0.
bool args_in(const FieldDescriptor& F, const IVec& gamma, const std::vector<ArcEndpoints>& I) {
  std::vector<std::optional<ArgProbe>> probes(F.N);
  for (const auto& prod : I) {
    bool ok = true;
    for (int n = 0; n < F.N && ok; ++n) {
      if (prod.full[n]) continue;
      if (!probes[n]) probes[n].emplace(F, gamma, n);
      ok = probes[n]->in_arc(prod.coords[n].first, prod.coords[n].second);
    }
    if (ok) return true;
  }
  return false;
}

IVec divide_by_k(const FieldDescriptor& F, const IVec& beta, const KVec& a) {
  QVec q = F.K->qmul(F.K->to_q(beta), F.K->qinv(F.K->to_q(F.k_to_K(a))));
  if (!F.K->is_integral(q)) throw std::logic_error("canonical preimage is not integral");
  return F.K->to_int(q);
}

// Canonical preimage of psi(beta): reduced to the domain with beta O_K = D B.
IVec canonical_preimage(const FieldDescriptor& F, const IVec& beta, Decomposition& dec) {
  IVec b = reduce_to_domain(F, beta).beta;
  dec = decompose(F, b);
  if (dec.A.is_unit()) return b;
  b = reduce_to_domain(F, divide_by_k(F, b, principal_generator(F, dec.A))).beta;
  dec = decompose(F, b);
  return b;
}

}  // namespace

KVec principal_generator(const FieldDescriptor& F, const IdealHNF& A) {
  if (F.h_k != 1) throw ConfigError("principal generators need class number one");
  KVec g{};
  if (F.N == 1) {
    g[0] = A.H[0][0];
    return g;
  }
  auto basis = A.basis();
  // Trace form sum_e sigma_e(x)^2 on the basis of A.
  std::vector<std::vector<double>> emb(2, std::vector<double>(2));
  for (int i = 0; i < 2; ++i)
    for (int e = 0; e < 2; ++e) emb[i][e] = F.k_real(basis[i], e).to_double();
  GramLD G(2, std::vector<long double>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) G[i][j] = emb[i][0] * emb[j][0] + emb[i][1] * emb[j][1];
  // Some associate has sigma_1 / |sigma_2| in [1, eps1^2), so x^2 + y^2 <= N(A) (eps1^2 + 1).
  double e1 = F.k_real(F.eps(), 0).to_double();
  long double bound = static_cast<long double>(A.norm()) * (e1 * e1 + 1) * 1.01L + 1;
  Enumerator en(G, bound);
  bool found = false;
  en.run([&](const Coeffs& c) {
    if (found) return;
    KVec x{};
    for (int j = 0; j < 2; ++j) x[j] = checked_add(checked_mul(c[0], basis[0][j]), checked_mul(c[1], basis[1][j]));
    if (std::labs(F.k_norm(x)) == A.norm()) {
      g = x;
      found = true;
    }
  });
  if (!found) throw std::logic_error("no generator found for " + A.str());
  if (F.k_real(g, 0).sign() < 0) g = KVec{-g[0], -g[1], 0, 0};
  return g;
}

OracleResult enumerate_SK(const FieldDescriptor& F, const std::vector<ArcProduct>& I, const HeightBound& H,
                          int threads) {
  if (I.empty()) throw ConfigError("empty arc set");
  for (const auto& p : I)
    if (p.N() != F.N) throw ConfigError("arc product dimension does not match the field");
  Rational H2N = H.pow2N(F.N);
  if (H2N < 1) throw ConfigError("height bound must be at least 1");

  // Largest cell norm N(C O_K D) over classes and ramified divisors.
  Rational cellmax = 0;
  for (int c = 0; c < F.h_k; ++c) {
    Rational t = cell_T2N(F, c, F.full_ramified_mask(), H);
    if (t > cellmax) cellmax = t;
  }
  long double B = static_cast<long double>(cellmax.get_d());
  long double T2 = F.N == 1 ? B : std::sqrt(B);
  long double radius_sq = static_cast<long double>(L0_sq(F)) * T2 * (1 + 1e-12L);

  IdealHNF OK = unit_ideal(*F.K, Ring::K);
  Enumerator en(to_long_double(trace_gram(F, OK)), radius_sq);

  // Phase 1: psi of every lattice point in the ball, deduplicated per slab.
  i64 lo = en.top_min(), hi = en.top_max();
  long slabs = static_cast<long>(hi - lo + 1);
  std::vector<std::map<ReducedFraction, IVec>> found(slabs);
  std::vector<long> visited(slabs, 0);
  parallel_for(slabs, threads, [&](long s) {
    en.run_slab(lo + s, [&](const Coeffs& c) {
      IVec beta = combine(F, OK, c);
      ++visited[s];
      found[s].emplace(F.psi_int(beta), beta);
    });
  });
  std::map<ReducedFraction, IVec> all;
  OracleResult res;
  for (long s = 0; s < slabs; ++s) {
    res.enumerated += visited[s];
    for (auto& [a, b] : found[s]) all.emplace(a, b);
  }
  res.distinct = static_cast<long>(all.size());

  // Phase 2: exact height and argument filters, canonical preimages.
  std::vector<std::pair<ReducedFraction, IVec>> cand(all.begin(), all.end());
  auto ends = endpoints_of(I);
  std::vector<std::optional<NormOnePoint>> pts(cand.size());
  std::vector<std::string> notes(cand.size());
  parallel_for(static_cast<long>(cand.size()), threads, [&](long i) {
    const auto& [alpha, seed] = cand[i];
    Integer h2N = F.denominator_norm(alpha);
    if (Rational(h2N) > H2N) return;
    if (!args_in(F, alpha.gamma, ends)) return;
    NormOnePoint p;
    p.alpha = alpha;
    p.height_pow2N = h2N;
    p.height = std::pow(h2N.get_d(), 1.0 / (2 * F.N));
    Decomposition dec;
    p.beta = canonical_preimage(F, seed, dec);
    p.class_index = 0;
    p.D_mask = dec.D_mask;
    QVec aq = F.fraction_to_q(alpha);
    p.args = F.arg_vector(aq);
    p.torsion = F.is_torsion(aq);
    std::ostringstream bad;
    if (!dec.A.is_unit()) bad << "canonical preimage keeps a factor from O_k; ";
    if (!(F.psi_int(p.beta) == alpha)) bad << "psi(beta) != alpha; ";
    // H^(2N) N(C O_K D) = N(beta)
    i64 nD = 1;
    for (size_t r = 0; r < F.ramified.size(); ++r)
      if (p.D_mask & (1u << r)) nD *= F.ramified[r].norm;
    if (h2N * big(nD) != big(F.norm_abs_int(p.beta))) bad << "height identity fails; ";
    if (!(F.weil_height(aq).pow2N == QuadReal::rational(Rational(h2N), F.D))) bad << "weil_height disagrees; ";
    if (!Region::domain(F).contains(p.beta)) bad << "beta outside the domain; ";
    bool in_region = false;
    for (const auto& prod : I)
      if (Region(F, prod, cell_T2N(F, 0, p.D_mask, H)).contains(p.beta)) in_region = true;
    if (!in_region) bad << "beta outside its cell region; ";
    notes[i] = bad.str();
    pts[i] = std::move(p);
  });

  std::map<std::pair<int, unsigned>, long> cells;
  std::map<IVec, int> seen_beta;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (!pts[i]) continue;
    if (!notes[i].empty()) {
      ++res.anomalies;
      res.anomaly_notes.push_back(notes[i]);
    }
    if (seen_beta[pts[i]->beta]++ > 0) {
      ++res.anomalies;
      res.anomaly_notes.push_back("two points share a canonical preimage");
    }
    ++cells[{pts[i]->class_index, pts[i]->D_mask}];
    res.points.push_back(std::move(*pts[i]));
  }
  for (const auto& [c, n] : cells) res.cells.push_back({c.first, c.second, n});
  return res;
}

Discrepancy discrepancy(const FieldDescriptor& F, const std::vector<NormOnePoint>& points, int grid) {
  Discrepancy d;
  d.points = static_cast<long>(points.size());
  if (points.empty()) return d;
  double n = static_cast<double>(points.size());
  if (F.N == 1) {
    // D = sup F - inf F for F(x) = #{theta < x}/n - x/2pi on [0, 2pi].
    std::vector<double> th;
    for (const auto& p : points) th.push_back(p.args[0]);
    std::sort(th.begin(), th.end());
    double sup = 0, inf = 0;
    for (size_t j = 0; j < th.size(); ++j) {
      double x = th[j] / kTwoPi;
      sup = std::max(sup, (j + 1) / n - x);
      inf = std::min(inf, j / n - x);
    }
    d.value = sup - inf;
    d.exact = true;
    return d;
  }
  // Boxes with corners on a G x G grid: a lower bound for the sup.
  int G = grid;
  std::vector<std::vector<long>> cnt(G + 1, std::vector<long>(G + 1, 0));
  for (const auto& p : points) {
    int i = std::min(G - 1, static_cast<int>(p.args[0] / kTwoPi * G));
    int j = std::min(G - 1, static_cast<int>(p.args[1] / kTwoPi * G));
    ++cnt[i + 1][j + 1];
  }
  for (int i = 1; i <= G; ++i)
    for (int j = 1; j <= G; ++j) cnt[i][j] += cnt[i - 1][j] + cnt[i][j - 1] - cnt[i - 1][j - 1];
  double best = 0;
  for (int x1 = 0; x1 < G; ++x1)
    for (int x2 = x1 + 1; x2 <= G; ++x2)
      for (int y1 = 0; y1 < G; ++y1)
        for (int y2 = y1 + 1; y2 <= G; ++y2) {
          long c = cnt[x2][y2] - cnt[x1][y2] - cnt[x2][y1] + cnt[x1][y1];
          double area = static_cast<double>(x2 - x1) * (y2 - y1) / (static_cast<double>(G) * G);
          best = std::max(best, std::fabs(c / n - area));
        }
  d.value = best;
  d.grid = G;
  return d;
}

std::vector<HistogramBin> histogram(const std::vector<NormOnePoint>& points, int bins) {
  if (bins <= 0) throw ConfigError("bins must be positive");
  std::vector<HistogramBin> out(bins);
  for (int b = 0; b < bins; ++b) {
    out[b].lo = kTwoPi * b / bins;
    out[b].hi = kTwoPi * (b + 1) / bins;
  }
  for (const auto& p : points) {
    int b = static_cast<int>(p.args[0] / kTwoPi * bins);
    ++out[std::clamp(b, 0, bins - 1)].count;
  }
  return out;
}

std::string histogram_csv(const std::vector<HistogramBin>& bins) {
  std::string s = "bin_lo,bin_hi,count\n";
  char buf[96];
  for (const auto& b : bins) {
    std::snprintf(buf, sizeof buf, "%.12f,%.12f,%ld\n", b.lo, b.hi, b.count);
    s += buf;
  }
  return s;
}

CosetReport coset_checks(const FieldDescriptor& F, const std::vector<NormOnePoint>& points, long pairs,
                         long coset_samples, std::uint64_t seed) {
  CosetReport r;
  const NumberField& K = *F.K;
  for (const auto& p : points) {
    QVec a = F.fraction_to_q(p.alpha);
    ++r.psi_checked;
    if (K.qsub(F.psi(a), K.qmul(a, a)) != K.qzero()) ++r.psi_violations;
  }
  if (points.empty()) return r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(0, static_cast<long>(points.size()) - 1);
  std::uniform_int_distribution<long> coef(-30, 30), den(1, 30);
  for (long s = 0; s < pairs; ++s) {
    const auto& p = points[pick(rng)];
    std::vector<Rational> g(F.N);
    bool zero = true;
    for (auto& c : g) {
      c = Rational(coef(rng), den(rng));
      c.canonicalize();
      if (c != 0) zero = false;
    }
    if (zero) g[0] = 1;
    QVec ag = K.qmul(F.fraction_to_q(p.alpha), F.k_to_K_q(g));
    ++r.height_pairs;
    if (!(QuadReal::rational(Rational(p.height_pow2N), F.D) <= F.weil_height(ag).pow2N)) ++r.height_violations;
  }
  // Solutions of beta = alpha^2 tau(beta) form the k-line alpha k.
  int n = K.degree();
  for (long s = 0; s < coset_samples; ++s) {
    const auto& p = points[pick(rng)];
    QVec a = F.fraction_to_q(p.alpha);
    QVec a2 = K.qmul(a, a);
    QMat M(n, std::vector<Rational>(n));
    for (int j = 0; j < n; ++j) {
      QVec e = K.qzero();
      e[j] = 1;
      QVec img = K.qsub(e, K.qmul(a2, F.tau_q(e)));
      for (int i = 0; i < n; ++i) M[i][j] = img[i];
    }
    auto ker = kernel_basis(M);
    ++r.coset_checked;
    bool ok = static_cast<int>(ker.size()) == F.N;
    QVec ainv = K.qinv(a);
    for (const auto& v : ker)
      if (!F.K_to_k_q(K.qmul(v, ainv))) ok = false;
    if (!ok) ++r.coset_violations;
  }
  return r;
}

}  // namespace normone
