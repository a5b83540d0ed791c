#include "normone/domain.hpp"

#include <cmath>
#include <random>

namespace normone {

std::vector<std::vector<Arc>> build_istar(const ArcProduct& I) {
  std::vector<std::vector<Arc>> out;
  for (int n = 0; n < I.N(); ++n) {
    Angle lo = I.arcs[n].lo.half(), hi = I.arcs[n].hi.half();
    if (n == 0)
      out.push_back({Arc{lo, hi}});
    else
      out.push_back({Arc{lo, hi}, Arc{lo.plus_pi(), hi.plus_pi()}});
  }
  return out;
}

Region::Region(const FieldDescriptor& F, const ArcProduct& I, std::optional<Rational> T2N)
    : F_(&F), I_(I), T2N_(std::move(T2N)) {
  if (I.N() != F.N) throw ConfigError("arc product has " + std::to_string(I.N()) + " coordinates, field needs " +
                                      std::to_string(F.N));
  if (T2N_ && *T2N_ <= 0) throw std::invalid_argument("T must be positive");
  for (const auto& arcs : build_istar(I)) {
    std::vector<EndpointArc> e;
    for (const auto& a : arcs) e.push_back({Endpoint::make(a.lo), Endpoint::make(a.hi)});
    istar_.push_back(e);
  }
  for (int n = 0; n < I.N(); ++n) coord_full_.push_back(n > 0 && I.arcs[n].lo.is_zero() && I.arcs[n].hi.is_two_pi());
}

Region Region::domain(const FieldDescriptor& F) { return Region(F, ArcProduct::full(F.N), std::nullopt); }

double L0_sq(const FieldDescriptor& F) {
  if (F.N == 1) return 1.0;
  double s = 0;
  for (int e = 0; e < F.N; ++e) {
    double v = std::fabs(F.k_real(F.eps(), e).to_double());
    s += std::max(1.0, v * v);
  }
  return s;
}

long double Region::radius_sq() const {
  if (!T2N_) throw std::logic_error("unbounded region has no enclosing ball");
  long double t2N = static_cast<long double>(T2N_->get_d());
  long double T2 = F_->N == 1 ? t2N : std::pow(t2N, 1.0L / F_->N);
  return static_cast<long double>(L0_sq(*F_)) * T2 * (1 + 1e-12L);
}

bool Region::radial_ok(const IVec& beta) const {
  if (!T2N_) return true;
  return Rational(big(F_->norm_abs_int(beta))) <= *T2N_;
}

bool Region::in_F(const IVec& beta) const {
  if (F_->N == 1) return true;
  KVec nu = F_->norm_rel_int(beta);
  KVec nb = F_->k_conj(nu);
  // c >= 0  <=>  sigma_1(nu - conj(nu)) >= 0
  KVec d0{nu[0] - nb[0], nu[1] - nb[1], 0, 0};
  if (F_->k_real(d0, 0).sign() < 0) return false;
  // c < 1  <=>  sigma_1(nu - eps^4 conj(nu)) < 0
  KVec e4 = F_->k_mul(F_->eps4(), nb);
  KVec d1{checked_add(nu[0], -e4[0]), checked_add(nu[1], -e4[1]), 0, 0};
  return F_->k_real(d1, 0).sign() < 0;
}

bool Region::args_ok(const IVec& beta) const {
  for (int n = 0; n < F_->N; ++n) {
    if (coord_full_[n]) continue;
    ArgProbe probe(*F_, beta, n);
    bool hit = false;
    for (const auto& a : istar_[n])
      if (probe.in_arc(a.lo, a.hi)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool Region::contains_approx(const std::vector<std::complex<double>>& x) const {
  double nrm = 1;
  for (const auto& z : x) nrm *= std::norm(z);
  if (nrm == 0) return false;
  if (T2N_ && nrm > T2N_->get_d()) return false;
  if (F_->N == 2) {
    double c = std::log(std::norm(x[0]) / std::norm(x[1])) / (4 * F_->log_eps1());
    if (c < 0 || c >= 1) return false;
  }
  for (int n = 0; n < F_->N; ++n) {
    double a = std::arg(x[n]);
    if (a < 0) a += 2 * M_PI;
    bool hit = false;
    for (const auto& arc : istar_[n])
      if (a >= arc.lo.angle.to_double() && a < arc.hi.angle.to_double()) hit = true;
    if (!hit) return false;
  }
  return true;
}

double region_volume(const FieldDescriptor& F, const ArcProduct& I, double T2N) {
  return I.measure() * F.regulator / (std::ldexp(1.0, F.N) * F.omega_k) * T2N;
}

LipschitzParams lipschitz_params(const FieldDescriptor& F, const ArcProduct& I) {
  LipschitzParams p;
  if (F.N == 1) {
    // Boundary of a sector of opening phi and radius 1: two radii, the arc cut
    // into pieces of length <= 2, and one spare map.
    double phi = I.arcs[0].length() / 2;
    p.M = 3 + static_cast<int>(std::ceil(phi / 2));
    p.L = 2;
    p.derived = true;
    return p;
  }
  // N = 2: faces of the boundary (radial cap, two F faces, arc faces per
  // coordinate) parametrised over [0,1]^3 with a common constant.
  double L0 = std::sqrt(L0_sq(F));
  p.M = 1 + 2 + 2 + 4;
  p.L = 2 * M_PI * L0 * std::max(1.0, 4 * F.log_eps1());
  p.derived = false;
  return p;
}

IVec mul_eps_pow(const FieldDescriptor& F, const IVec& beta, long m) {
  if (m == 0 || F.N == 1) return beta;
  IVec u = F.k_to_K(m > 0 ? F.eps() : F.eps_inv());
  IVec r = beta;
  for (long i = 0; i < std::labs(m); ++i) r = F.K->mul(r, u);
  return r;
}

UnitReduction reduce_to_domain(const FieldDescriptor& F, const IVec& beta) {
  if (F.K->is_zero(beta)) throw std::domain_error("reduce_to_domain of zero");
  UnitReduction out;
  out.beta = beta;
  Region dom = Region::domain(F);
  if (F.N == 2) {
    auto x1 = F.K->embed_approx(F.K->to_q(beta), 0), x2 = F.K->embed_approx(F.K->to_q(beta), 1);
    double c = std::log(std::norm(x1) / std::norm(x2)) / (4 * F.log_eps1());
    long m = -static_cast<long>(std::floor(c));
    IVec b = mul_eps_pow(F, beta, m);
    // Correct a floating misjudgement at the faces.
    for (int guard = 0; guard < 4 && !dom.in_F(b); ++guard) {
      KVec nu = F.norm_rel_int(b);
      KVec nb = F.k_conj(nu);
      KVec d0{nu[0] - nb[0], nu[1] - nb[1], 0, 0};
      long step = F.k_real(d0, 0).sign() < 0 ? 1 : -1;
      m += step;
      b = mul_eps_pow(F, b, step);
    }
    if (!dom.in_F(b)) throw std::logic_error("reduce_to_domain failed to land in F");
    out.beta = b;
    out.m = m;
  }
  ArgProbe probe(F, out.beta, 0);
  if (probe.compare(Endpoint::make(Angle::pi_times(1))) >= 0) {
    out.beta = F.K->neg(out.beta);
    out.sign = -1;
  }
  return out;
}

MonteCarloVolume monte_carlo_volume(const FieldDescriptor& F, const ArcProduct& I, long samples, std::uint64_t seed) {
  Region R(F, I, Rational(1));
  // The region lies in the polydisc |x_n| <= max(1, |sigma_n eps|).
  std::vector<double> rad(F.N, 1.0);
  if (F.N == 2)
    for (int e = 0; e < F.N; ++e) rad[e] = std::max(1.0, std::fabs(F.k_real(F.eps(), e).to_double()));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MonteCarloVolume mc;
  mc.samples = samples;
  mc.box_volume = 1;
  for (double r : rad) mc.box_volume *= 4 * r * r;
  std::vector<std::complex<double>> x(F.N);
  for (long s = 0; s < samples; ++s) {
    for (int n = 0; n < F.N; ++n) {
      double re = u(rng), im = u(rng);
      x[n] = {rad[n] * re, rad[n] * im};
    }
    if (R.contains_approx(x)) ++mc.hits;
  }
  double p = static_cast<double>(mc.hits) / samples;
  mc.volume = p * mc.box_volume;
  mc.std_error = mc.box_volume * std::sqrt(p * (1 - p) / samples);
  return mc;
}

}  // namespace normone
