#include "normone/field.hpp"

#include <algorithm>
#include <cmath>

#include "normone/lattice.hpp"

namespace normone {

Endpoint Endpoint::make(const Angle& a) {
  Interval e = a.enclosure(64);
  return Endpoint{a, e.lo_d(), e.hi_d()};
}

// ---------------------------------------------------------------------------
// Conjugation and the subfield.

IVec FieldDescriptor::tau_int(const IVec& a) const {
  int n = K->degree();
  i128 acc[kMaxDegree] = {};
  for (int j = 0; j < n; ++j) {
    if (a[j] == 0) continue;
    for (int i = 0; i < n; ++i) acc[i] += static_cast<i128>(a[j]) * tau[j][i];
  }
  IVec r{};
  for (int i = 0; i < n; ++i) r[i] = narrow(acc[i]);
  return r;
}

QVec FieldDescriptor::tau_q(const QVec& a) const {
  int n = K->degree();
  QVec r(n, 0);
  for (int j = 0; j < n; ++j) {
    if (a[j] == 0) continue;
    for (int i = 0; i < n; ++i) r[i] += a[j] * tau[j][i];
  }
  return r;
}

IVec FieldDescriptor::k_to_K(const KVec& a) const {
  int n = K->degree();
  i128 acc[kMaxDegree] = {};
  for (int j = 0; j < N; ++j) {
    if (a[j] == 0) continue;
    for (int i = 0; i < n; ++i) acc[i] += static_cast<i128>(a[j]) * k_basis[j][i];
  }
  IVec r{};
  for (int i = 0; i < n; ++i) r[i] = narrow(acc[i]);
  return r;
}

QVec FieldDescriptor::k_to_K_q(const std::vector<Rational>& a) const {
  int n = K->degree();
  QVec r(n, 0);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < n; ++i) r[i] += a[j] * k_basis[j][i];
  return r;
}

std::optional<std::vector<Rational>> FieldDescriptor::K_to_k_q(const QVec& a) const {
  std::vector<Rational> c(N, 0);
  if (N == 1) {
    c[0] = a[0];
  } else {
    c[1] = a[k_pivot] / k_basis[1][k_pivot];
    c[0] = (a[0] - c[1] * k_basis[1][0]) / k_basis[0][0];
  }
  if (K->qsub(a, k_to_K_q(c)) != K->qzero()) return std::nullopt;
  return c;
}

std::optional<KVec> FieldDescriptor::K_to_k(const IVec& a) const {
  auto c = K_to_k_q(K->to_q(a));
  if (!c) return std::nullopt;
  KVec r{};
  for (int j = 0; j < N; ++j) {
    if ((*c)[j].get_den() != 1) return std::nullopt;
    r[j] = narrow((*c)[j].get_num());
  }
  return r;
}

KVec FieldDescriptor::k_conj(const KVec& a) const {
  if (N == 1) return a;
  // conj(w) = t - w
  return KVec{checked_add(a[0], checked_mul(a[1], k_t)), -a[1], 0, 0};
}

KVec FieldDescriptor::k_mul(const KVec& a, const KVec& b) const {
  if (N == 1) return KVec{checked_mul(a[0], b[0]), 0, 0, 0};
  i128 c0 = static_cast<i128>(a[0]) * b[0] + static_cast<i128>(k_n) * a[1] * b[1];
  i128 c1 = static_cast<i128>(a[0]) * b[1] + static_cast<i128>(a[1]) * b[0] + static_cast<i128>(k_t) * a[1] * b[1];
  return KVec{narrow(c0), narrow(c1), 0, 0};
}

i64 FieldDescriptor::k_norm(const KVec& a) const {
  if (N == 1) return a[0];
  i128 v = static_cast<i128>(a[0]) * a[0] + static_cast<i128>(k_t) * a[0] * a[1] - static_cast<i128>(k_n) * a[1] * a[1];
  return narrow(v);
}

QuadReal FieldDescriptor::k_real_q(const std::vector<Rational>& a, int e) const {
  if (N == 1) return QuadReal::rational(a[0], 0);
  // sigma_e(w) = (t + s_e * f * sqrt(D)) / 2
  Rational p = a[0] + a[1] * k_t / 2;
  Rational q = a[1] * sqrtD_sign.at(e) * k_f / 2;
  return QuadReal(p, q, D);
}

QuadReal FieldDescriptor::k_real(const KVec& a, int e) const {
  std::vector<Rational> q(N);
  for (int j = 0; j < N; ++j) q[j] = a[j];
  return k_real_q(q, e);
}

// ---------------------------------------------------------------------------
// Norms, psi and heights.

KVec FieldDescriptor::norm_rel_int(const IVec& beta) const {
  auto v = K_to_k(K->mul(beta, tau_int(beta)));
  if (!v) throw std::logic_error("beta * tau(beta) is not in k");
  return *v;
}

std::vector<Rational> FieldDescriptor::norm_rel(const QVec& alpha) const {
  auto v = K_to_k_q(K->qmul(alpha, tau_q(alpha)));
  if (!v) throw std::logic_error("alpha * tau(alpha) is not in k");
  return *v;
}

i64 FieldDescriptor::norm_abs_int(const IVec& beta) const { return k_norm(norm_rel_int(beta)); }

Rational FieldDescriptor::norm_abs(const QVec& alpha) const { return K->qnorm(alpha); }

QVec FieldDescriptor::psi(const QVec& beta) const { return K->qmul(beta, K->qinv(tau_q(beta))); }

ReducedFraction FieldDescriptor::psi_int(const IVec& beta) const {
  // beta / tau(beta) = beta^2 / nu with nu = beta tau(beta) in k.
  KVec nu = norm_rel_int(beta);
  IVec b2 = K->mul(beta, beta);
  ReducedFraction r;
  if (N == 1) {
    r.gamma = b2;
    r.m = nu[0];
  } else {
    r.gamma = K->mul(b2, k_to_K(k_conj(nu)));
    r.m = k_norm(nu);
  }
  if (r.m <= 0) throw std::logic_error("relative norm is not totally positive");
  i64 g = r.m;
  for (int j = 0; j < K->degree(); ++j) g = gcd64(g, r.gamma[j]);
  if (g > 1) {
    for (int j = 0; j < K->degree(); ++j) r.gamma[j] /= g;
    r.m /= g;
  }
  return r;
}

QVec FieldDescriptor::fraction_to_q(const ReducedFraction& r) const {
  QVec q = K->to_q(r.gamma);
  for (auto& c : q) {
    c /= r.m;
    c.canonicalize();
  }
  return q;
}

// Index of the Z-lattice spanned by rows in Z^n, rows assumed of full rank.
static Integer lattice_index(std::vector<std::vector<Integer>> rows, int n) {
  Integer det = 1;
  for (int c = 0; c < n; ++c) {
    // Euclid down column c over the rows still in play
    for (;;) {
      int piv = -1;
      for (size_t i = c; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (piv < 0 || abs(rows[i][c]) < abs(rows[piv][c]))) piv = static_cast<int>(i);
      if (piv < 0) throw std::logic_error("lattice is not of full rank");
      std::swap(rows[c], rows[piv]);
      bool done = true;
      for (size_t i = c + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = rows[i][c] / rows[c][c];
        for (int j = c; j < n; ++j) rows[i][j] -= q * rows[c][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    det *= abs(rows[c][c]);
  }
  return det;
}

Integer FieldDescriptor::denominator_norm(const ReducedFraction& r) const {
  // N(J) for J = (m, gamma), in big integers since it can reach m^(2N)
  int n = K->degree();
  Integer mm = big(r.m);
  std::vector<std::vector<Integer>> rows;
  for (int i = 0; i < n; ++i) {
    IVec e{};
    e[i] = 1;
    IVec g = K->mul(r.gamma, e);
    std::vector<Integer> row(n), mrow(n, Integer(0));
    for (int j = 0; j < n; ++j) row[j] = big(g[j]);
    mrow[i] = mm;
    rows.push_back(row);
    rows.push_back(mrow);
  }
  Integer num;
  mpz_pow_ui(num.get_mpz_t(), mm.get_mpz_t(), static_cast<unsigned long>(2 * N));
  Integer jn = lattice_index(rows, n);
  if (num % jn != 0) throw std::logic_error("denominator ideal norm is not integral");
  return num / jn;
}

HeightValue FieldDescriptor::weil_height(const QVec& alpha) const {
  if (K->qis_zero(alpha)) throw std::domain_error("height of zero");
  // alpha = gamma / m with gamma integral.
  Integer m = 1;
  for (const auto& c : alpha) m = lcm(m, Integer(c.get_den()));
  ReducedFraction r;
  r.m = narrow(m);
  for (int j = 0; j < K->degree(); ++j) {
    Rational c = alpha[j] * m;
    r.gamma[j] = narrow(c.get_num());
  }
  HeightValue h;
  h.nonarch = denominator_norm(r);
  QuadReal prod = QuadReal::rational(h.nonarch, D);
  std::vector<Rational> nu = norm_rel(alpha);
  for (int e = 0; e < N; ++e) {
    QuadReal s = k_real_q(nu, e);  // |sigma_e(alpha)|^2
    if (QuadReal::rational(1, D) < s) prod = prod * s;
  }
  h.pow2N = prod;
  h.value = std::pow(prod.to_double(), 1.0 / (2 * N));
  return h;
}

bool FieldDescriptor::in_SK(const QVec& alpha) const {
  auto nu = norm_rel(alpha);
  if (nu[0] != 1) return false;
  for (int j = 1; j < N; ++j)
    if (nu[j] != 0) return false;
  return true;
}

bool FieldDescriptor::is_torsion(const QVec& alpha) const {
  for (const auto& t : torsion)
    if (K->to_q(t.zeta) == alpha) return true;
  return false;
}

std::vector<double> FieldDescriptor::arg_vector(const QVec& alpha) const {
  std::vector<double> out;
  for (int e = 0; e < N; ++e) {
    double a = std::arg(K->embed_approx(alpha, e));
    if (a < 0) a += 2 * M_PI;
    if (a >= 2 * M_PI) a = 0;
    out.push_back(a);
  }
  return out;
}

std::optional<int> FieldDescriptor::psi_torsion_index(const IVec& gamma) const {
  IVec tg = tau_int(gamma);
  for (size_t i = 0; i < torsion.size(); ++i)
    if (K->mul(torsion[i].zeta, tg) == gamma) return static_cast<int>(i);
  return std::nullopt;
}

KVec FieldDescriptor::eps_inv() const {
  KVec e = eps();
  KVec c = k_conj(e);
  i64 n = k_norm(e);
  return KVec{c[0] * n, c[1] * n, 0, 0};
}

const LocalPrimes& FieldDescriptor::local(u64 p) const {
  std::lock_guard<std::mutex> lock(local_mutex_);
  auto it = local_cache_.find(p);
  if (it != local_cache_.end()) return *it->second;
  auto L = std::make_unique<LocalPrimes>();
  L->p = p;
  L->K_primes = primes_above(*K, Ring::K, p);
  L->k_primes = primes_above(*k, Ring::k, p);
  L->k_split.resize(L->k_primes.size());
  L->K_below.assign(L->K_primes.size(), -1);
  L->ramified_index.assign(L->K_primes.size(), -1);
  for (size_t q = 0; q < L->k_primes.size(); ++q) {
    IdealHNF QK = extend_to_K(*this, L->k_primes[q].ideal);
    for (size_t i = 0; i < L->K_primes.size(); ++i) {
      if (!ideal_contains(L->K_primes[i].ideal, QK)) continue;
      L->k_split[q].emplace_back(static_cast<int>(i), L->K_primes[i].e / L->k_primes[q].e);
      L->K_below[i] = static_cast<int>(q);
    }
  }
  for (size_t i = 0; i < L->K_primes.size(); ++i)
    for (size_t r = 0; r < ramified.size(); ++r)
      if (ramified[r].p == L->K_primes[i].ideal) L->ramified_index[i] = static_cast<int>(r);
  return *local_cache_.emplace(p, std::move(L)).first->second;
}

// ---------------------------------------------------------------------------
// Fundamental unit of a real quadratic order.

KVec fundamental_unit(i64 t, i64 n) {
  Integer disc = big(t) * big(t) + 4 * big(n);
  if (disc <= 0) throw ConfigError("real quadratic subfield needs t^2 + 4n > 0");
  Integer s = sqrt(disc);
  if (s * s == disc) throw ConfigError("w is rational");
  // (P + sqrt(disc)) / Q expansion of w = (t + sqrt(disc)) / 2.
  Integer P = big(t), Q = 2;
  Integer p1 = 1, p2 = 0, q1 = 0, q2 = 1;
  for (int step = 0; step < 100000; ++step) {
    Integer a;
    if (Q > 0) {
      a = P + s;
      mpz_fdiv_q(a.get_mpz_t(), a.get_mpz_t(), Q.get_mpz_t());
    } else {
      a = P + s + 1;
      mpz_fdiv_q(a.get_mpz_t(), a.get_mpz_t(), Q.get_mpz_t());
    }
    Integer p = a * p1 + p2, q = a * q1 + q2;
    Integer nrm = p * p - big(t) * p * q - big(n) * q * q;
    if (nrm == 1 || nrm == -1) return KVec{narrow(p), narrow(Integer(-q)), 0, 0};
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
    P = a * Q - P;
    Q = (disc - P * P) / Q;
  }
  throw ConfigError("continued fraction did not produce a unit");
}

// ---------------------------------------------------------------------------
// Validation and derived data.

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace

void FieldDescriptor::finalize_subfield() {
  require(N == 1 || N == 2, "only N = 1 or N = 2 is supported (got N = " + std::to_string(N) + ")");
  require(K && K->degree() == 2 * N, "K must have degree 2N");
  require(K->num_embeddings() == N, "need one approximate root per embedding of K");
  int n = K->degree();
  require(static_cast<int>(tau.size()) == n, "tau must have one row per basis element");
  for (auto& row : tau) {
    require(static_cast<int>(row.size()) == n, "tau row has wrong length");
    row.resize(kMaxDegree, 0);
  }

  // tau is the ring automorphism determined by tau(theta).
  IVec th{};
  th[1] = 1;
  IVec tth = tau_int(th);
  IVec pw = K->one();
  IVec fval{};
  for (int j = 0; j <= n; ++j) {
    if (j < n) {
      IVec row{};
      for (int i = 0; i < n; ++i) row[i] = tau[j][i];
      require(row == pw, "tau rows are not the powers of tau(theta)");
    }
    fval = K->add(fval, K->scale(pw, K->poly()[j]));
    pw = K->mul(pw, tth);
  }
  require(K->is_zero(fval), "tau(theta) is not a root of the defining polynomial");
  for (int j = 0; j < n; ++j) require(tau_int(tau_int(K->power(j))) == K->power(j), "tau is not an involution");
  for (int e = 0; e < N; ++e) {
    auto a = K->embed_approx(K->to_q(tth), e);
    auto b = std::conj(K->embed_approx(K->to_q(th), e));
    require(std::abs(a - b) < 1e-9, "tau does not act as complex conjugation");
  }

  // Subfield.
  require(static_cast<int>(k_basis.size()) == N, "basis of k needs N rows");
  for (auto& row : k_basis) {
    require(static_cast<int>(row.size()) == n, "basis row of k has wrong length");
    row.resize(kMaxDegree, 0);
  }
  IVec one{};
  for (int i = 0; i < n; ++i) one[i] = k_basis[0][i];
  require(one == K->one(), "first basis element of k must be 1");
  std::vector<i64> kpoly;
  if (N == 1) {
    kpoly = {0, 1};
  } else {
    IVec w{};
    for (int i = 0; i < n; ++i) w[i] = k_basis[1][i];
    require(tau_int(w) == w, "tau does not fix w");
    k_pivot = -1;
    for (int i = 1; i < n; ++i)
      if (w[i] != 0) {
        k_pivot = i;
        break;
      }
    require(k_pivot > 0, "w is rational");
    // w^2 = t w + n
    IVec w2 = K->mul(w, w);
    require(w2[k_pivot] % w[k_pivot] == 0, "w^2 is not in Z[w]");
    k_t = w2[k_pivot] / w[k_pivot];
    IVec rest = K->sub(w2, K->scale(w, k_t));
    for (int i = 1; i < n; ++i) require(rest[i] == 0, "w^2 is not in Z + Z w");
    k_n = rest[0];
    kpoly = {-k_n, -k_t, 1};
    i64 disc = k_t * k_t + 4 * k_n;
    require(disc > 0, "k is not real quadratic");
    D = static_cast<long>(squarefree_kernel(static_cast<u64>(disc)));
    i64 f2 = disc / D;
    k_f = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(f2))));
    require(k_f * k_f == f2, "malformed discriminant of k");
  }
  k = std::make_shared<NumberField>(kpoly, std::vector<std::complex<double>>{});
  disc_k = N == 1 ? Integer(1) : k->discriminant();
  disc_K = K->discriminant();
  require(disc_K % (disc_k * disc_k) == 0, "disc(K) is not divisible by disc(k)^2");
  rel_disc_norm = abs(disc_K) / (disc_k * disc_k);

  sqrtD_sign.assign(N, 1);
  if (N == 2) {
    IVec w{};
    for (int i = 0; i < n; ++i) w[i] = k_basis[1][i];
    double sw = std::sqrt(static_cast<double>(D)) * k_f;
    for (int e = 0; e < N; ++e) {
      auto z = K->embed_approx(K->to_q(w), e);
      require(std::fabs(z.imag()) < 1e-9, "w is not real");
      double plus = (k_t + sw) / 2, minus = (k_t - sw) / 2;
      sqrtD_sign[e] = std::fabs(z.real() - plus) < std::fabs(z.real() - minus) ? 1 : -1;
    }
    require(sqrtD_sign[0] != sqrtD_sign[1], "the chosen embeddings restrict to the same embedding of k");
  }

}

void FieldDescriptor::finalize() {
  if (!k) finalize_subfield();

  // Units of k.
  if (N == 2) {
    KVec cf = fundamental_unit(k_t, k_n);
    auto normalise = [&](KVec e) {
      if (k_real(e, 0).sign() < 0) e = KVec{-e[0], -e[1], 0, 0};
      if (k_real(e, 0) < QuadReal::rational(1, D)) {
        KVec c = k_conj(e);
        i64 nn = k_norm(e);
        e = KVec{c[0] * nn, c[1] * nn, 0, 0};
      }
      return e;
    };
    cf = normalise(cf);
    if (units.empty()) {
      units.push_back(cf);
    } else {
      require(units.size() == 1, "k has unit rank 1");
      require(std::abs(k_norm(units[0])) == 1, "configured unit is not a unit");
      units[0] = normalise(units[0]);
      require(units[0] == cf, "configured unit is not fundamental");
    }
    double reg = std::log(k_real(units[0], 0).to_double());
    if (regulator > 0) require(std::fabs(regulator - reg) < 1e-9, "configured regulator does not match the unit");
    regulator = reg;
    log_eps1_ = reg;
    KVec e2 = k_mul(units[0], units[0]);
    eps4_ = k_mul(e2, e2);
  } else {
    units.clear();
    regulator = 1.0;
  }
  omega_k = 2;

  // Class group of k.
  if (class_reps.empty()) class_reps.push_back(unit_ideal(*k, Ring::k));
  h_k = static_cast<int>(class_reps.size());
  require(class_reps[0].is_unit(), "first class representative must be O_k");

  // Ramification.
  for (auto& r : ramified) {
    require(r.P.ring == Ring::k && r.p.ring == Ring::K, "ramified pair has wrong rings");
    require(ideal_pow(*K, r.p, 2) == extend_to_K(*this, r.P), "p^2 != P O_K for a ramified pair");
    r.norm = r.P.norm();
    require(r.p.norm() == r.norm, "N(P) != N(p)");
    auto fac = factor_u64(static_cast<u64>(r.norm));
    require(fac.size() == 1, "ramified prime norm is not a prime power");
    r.rational_prime = fac[0].first;
  }
  std::sort(ramified.begin(), ramified.end(),
            [](const RamifiedPair& a, const RamifiedPair& b) { return a.p < b.p; });
  for (auto& [p, e] : factor_u64(static_cast<u64>(rel_disc_norm.get_ui()))) {
    (void)e;
    const LocalPrimes& L = local(p);
    for (size_t i = 0; i < L.K_primes.size(); ++i) {
      int q = L.K_below[i];
      require(q >= 0, "K prime without a k prime below");
      int rel_e = L.K_primes[i].e / L.k_primes[q].e;
      if (rel_e == 2) require(L.ramified_index[i] >= 0, "ramified prime above " + std::to_string(p) + " missing");
    }
  }
  for (const auto& r : ramified)
    require(mpz_divisible_ui_p(rel_disc_norm.get_mpz_t(), r.rational_prime), "listed prime is not ramified");

  // Torsion: integral elements with all |sigma| = 1.
  torsion.clear();
  IdealHNF OK = unit_ideal(*K, Ring::K);
  QMat g = trace_gram(*this, OK);
  Enumerator en(to_long_double(g), static_cast<long double>(N));
  en.run([&](const Coeffs& c) {
    IVec z = combine(*this, OK, c);
    if (K->trace(K->mul(z, tau_int(z))) != 2 * N) return;
    KVec nu = norm_rel_int(z);
    if (nu[0] != 1 || (N == 2 && nu[1] != 0)) return;
    TorsionElement t;
    t.zeta = z;
    IVec pw = z;
    int ord = 1;
    while (pw != K->one()) {
      pw = K->mul(pw, z);
      ++ord;
      require(ord <= 1000, "unit of modulus one has no finite order");
    }
    t.order = ord;
    for (int e = 0; e < N; ++e) {
      double a = std::arg(K->embed_approx(K->to_q(z), e));
      if (a < 0) a += 2 * M_PI;
      long j = std::lround(a * ord / (2 * M_PI)) % ord;
      t.arg_over_pi.push_back(Rational(2 * j, ord));
      t.arg_over_pi.back().canonicalize();
    }
    torsion.push_back(t);
  });
  std::sort(torsion.begin(), torsion.end(), [](const TorsionElement& a, const TorsionElement& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.zeta < b.zeta;
  });

  // Sampled check that psi lands in the norm-one kernel.
  for (int j = 1; j < K->degree(); ++j) {
    IVec b = K->add(K->one(), K->power(j));
    require(in_SK(fraction_to_q(psi_int(b))), "psi(beta) is not of relative norm one");
  }
}

// ---------------------------------------------------------------------------
// Certified arguments.

ArgProbe::ArgProbe(const FieldDescriptor& F, const IVec& gamma, int e) : F_(F), gamma_(gamma), e_(e) {
  EmbeddingApprox z = F.K->embed_d(gamma, e);
  double r = std::abs(z.value);
  if (std::isfinite(z.err) && r > 2 * z.err) {
    fast_ok_ = true;
    theta_ = std::arg(z.value);
    if (theta_ < 0) theta_ += 2 * M_PI;
    delta_ = 1.6 * z.err / r + 4e-15;
    fast_wraps_ = theta_ - delta_ <= 0 || theta_ + delta_ >= 2 * M_PI;
  }
}

double ArgProbe::approx() {
  if (fast_ok_) return theta_;
  auto z = F_.K->embed(gamma_, e_, default_precision_bits());
  double a = std::atan2(z.im.mid_d(), z.re.mid_d());
  return a < 0 ? a + 2 * M_PI : a;
}

std::optional<Rational> ArgProbe::exact_over_pi() {
  if (torsion_state_ == 0) {
    auto idx = F_.psi_torsion_index(gamma_);
    if (!idx) {
      torsion_state_ = -1;
    } else {
      torsion_state_ = 1;
      // 2 arg(gamma) = arg(zeta) mod 2pi.
      Rational half = F_.torsion[*idx].arg_over_pi[e_] / 2;
      Rational other = half + 1;
      double a = approx() / M_PI;
      auto dist = [](double x, double y) {
        double d = std::fabs(x - y);
        return std::min(d, 2 - d);
      };
      exact_ = dist(a, half.get_d()) <= dist(a, other.get_d()) ? half : other;
    }
  }
  if (torsion_state_ < 0) return std::nullopt;
  return exact_;
}

int ArgProbe::compare(const Endpoint& ep) {
  if (ep.angle.is_two_pi()) return -1;
  if (fast_ok_ && !fast_wraps_) {
    if (theta_ + delta_ < ep.lo) return -1;
    if (theta_ - delta_ > ep.hi) return 1;
  }
  if (ep.angle.is_zero()) {
    auto inK = F_.K_to_k(gamma_);
    if (inK && F_.k_real(*inK, e_).sign() > 0) return 0;
    return 1;
  }
  if (ep.angle.is_pi_multiple()) {
    if (auto ex = exact_over_pi()) return cmp(*ex, ep.angle.b) < 0 ? -1 : (*ex == ep.angle.b ? 0 : 1);
  }
  if (auto inK = F_.K_to_k(gamma_); inK && F_.k_real(*inK, e_).sign() > 0) return -1;
  for (mpfr_prec_t prec = default_precision_bits(); prec <= kMaxPrecisionBits; prec *= 2) {
    ComplexInterval z = F_.K->embed(gamma_, e_, prec);
    if (!arg_box_resolvable(z.re, z.im)) continue;
    Interval a = arg_enclosure(z.re, z.im);
    Interval b = ep.angle.enclosure(prec);
    if (a.strictly_below(b)) return -1;
    if (b.strictly_below(a)) return 1;
  }
  throw PrecisionError("could not compare an argument with endpoint " + ep.angle.str());
}

bool ArgProbe::in_arc(const Endpoint& lo, const Endpoint& hi) { return compare(lo) >= 0 && compare(hi) < 0; }

}  // namespace normone
