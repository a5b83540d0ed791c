#include "normone/number_field.hpp"

#include <cmath>

namespace normone {

namespace {

ComplexInterval point(const Interval& re, const Interval& im, mpfr_prec_t prec) {
  Interval r(prec), i(prec);
  mpfr_t m;
  mpfr_init2(m, prec);
  mpfr_add(m, re.lo(), re.hi(), MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  mpfr_set(r.lo_mut(), m, MPFR_RNDD);
  mpfr_set(r.hi_mut(), m, MPFR_RNDU);
  mpfr_add(m, im.lo(), im.hi(), MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  mpfr_set(i.lo_mut(), m, MPFR_RNDD);
  mpfr_set(i.hi_mut(), m, MPFR_RNDU);
  mpfr_clear(m);
  return {r, i};
}

}  // namespace

NumberField::NumberField(std::vector<i64> poly, std::vector<std::complex<double>> roots)
    : poly_(std::move(poly)), approx_roots_(std::move(roots)) {
  n_ = static_cast<int>(poly_.size()) - 1;
  if (n_ < 1 || n_ > kMaxDegree) throw ConfigError("unsupported field degree " + std::to_string(n_));
  if (poly_.back() != 1) throw ConfigError("defining polynomial must be monic");
  int top = 3 * n_ - 2;
  powers_.assign(top, IVec{});
  for (int k = 0; k < top; ++k) {
    IVec v{};
    if (k < n_) {
      v[k] = 1;
    } else {
      const IVec& prev = powers_[k - 1];
      // theta * prev, then reduce theta^n
      i64 carry = prev[n_ - 1];
      for (int j = n_ - 1; j >= 1; --j) v[j] = prev[j - 1];
      v[0] = 0;
      for (int j = 0; j < n_; ++j) v[j] = checked_add(v[j], checked_mul(-poly_[j], carry));
    }
    powers_[k] = v;
  }
  traces_.assign(2 * n_ - 1, 0);
  for (int k = 0; k < 2 * n_ - 1; ++k) {
    i64 t = 0;
    for (int i = 0; i < n_; ++i) t = checked_add(t, powers_[i + k][i]);
    traces_[k] = t;
  }
  QMat tm(n_, std::vector<Rational>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) tm[i][j] = Rational(traces_[i + j]);
  disc_ = determinant(tm).get_num();

  if (!approx_roots_.empty()) {
    if (2 * static_cast<int>(approx_roots_.size()) != n_)
      throw ConfigError("need exactly one approximate root per conjugate pair of embeddings");
    fast_.resize(approx_roots_.size());
    for (int e = 0; e < num_embeddings(); ++e) {
      const auto& pw = theta_powers(e, 128);
      for (int j = 0; j < n_; ++j) {
        EmbeddingApprox a;
        a.value = {pw[j].re.mid_d(), pw[j].im.mid_d()};
        a.err = (pw[j].re.width_d() + pw[j].im.width_d()) + std::abs(a.value) * 4.5e-16;
        fast_[e].push_back(a);
      }
    }
  }
}

IVec NumberField::mul(const IVec& a, const IVec& b) const {
  i128 tmp[2 * kMaxDegree - 1] = {};
  for (int i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n_; ++j) tmp[i + j] += static_cast<i128>(a[i]) * b[j];
  }
  i128 acc[kMaxDegree] = {};
  for (int k = 0; k < n_; ++k) acc[k] = tmp[k];
  for (int k = n_; k < 2 * n_ - 1; ++k) {
    if (tmp[k] == 0) continue;
    for (int j = 0; j < n_; ++j) acc[j] += tmp[k] * powers_[k][j];
  }
  IVec r{};
  for (int j = 0; j < n_; ++j) r[j] = narrow(acc[j]);
  return r;
}

IVec NumberField::add(const IVec& a, const IVec& b) const {
  IVec r{};
  for (int j = 0; j < n_; ++j) r[j] = checked_add(a[j], b[j]);
  return r;
}

IVec NumberField::sub(const IVec& a, const IVec& b) const {
  IVec r{};
  for (int j = 0; j < n_; ++j) r[j] = checked_add(a[j], -b[j]);
  return r;
}

IVec NumberField::neg(const IVec& a) const {
  IVec r{};
  for (int j = 0; j < n_; ++j) r[j] = -a[j];
  return r;
}

IVec NumberField::scale(const IVec& a, i64 s) const {
  IVec r{};
  for (int j = 0; j < n_; ++j) r[j] = checked_mul(a[j], s);
  return r;
}

i64 NumberField::trace(const IVec& a) const {
  i128 t = 0;
  for (int j = 0; j < n_; ++j) t += static_cast<i128>(a[j]) * traces_[j];
  return narrow(t);
}

IVec NumberField::one() const {
  IVec r{};
  r[0] = 1;
  return r;
}

bool NumberField::is_zero(const IVec& a) const {
  for (int j = 0; j < n_; ++j)
    if (a[j] != 0) return false;
  return true;
}

Mat NumberField::mul_rows(const IVec& a) const {
  Mat rows;
  IVec t = one();
  IVec th{};
  if (n_ > 1) th[1] = 1;
  for (int j = 0; j < n_; ++j) {
    IVec r = mul(a, t);
    rows.emplace_back(r.begin(), r.begin() + n_);
    if (n_ > 1) t = mul(t, th);
  }
  return rows;
}

QVec NumberField::qmul(const QVec& a, const QVec& b) const {
  std::vector<Rational> tmp(2 * n_ - 1, 0);
  for (int i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n_; ++j) tmp[i + j] += a[i] * b[j];
  }
  QVec r(n_, 0);
  for (int k = 0; k < n_; ++k) r[k] = tmp[k];
  for (int k = n_; k < 2 * n_ - 1; ++k) {
    if (tmp[k] == 0) continue;
    for (int j = 0; j < n_; ++j) r[j] += tmp[k] * powers_[k][j];
  }
  return r;
}

QVec NumberField::qadd(const QVec& a, const QVec& b) const {
  QVec r(n_);
  for (int j = 0; j < n_; ++j) r[j] = a[j] + b[j];
  return r;
}

QVec NumberField::qsub(const QVec& a, const QVec& b) const {
  QVec r(n_);
  for (int j = 0; j < n_; ++j) r[j] = a[j] - b[j];
  return r;
}

QVec NumberField::qscale(const QVec& a, const Rational& s) const {
  QVec r(n_);
  for (int j = 0; j < n_; ++j) r[j] = a[j] * s;
  return r;
}

QVec NumberField::qone() const {
  QVec r(n_, 0);
  r[0] = 1;
  return r;
}

QVec NumberField::qzero() const { return QVec(n_, 0); }

bool NumberField::qis_zero(const QVec& a) const {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

namespace {

// Matrix of multiplication by a: column j = coordinates of a*theta^j.
QMat mult_matrix(const NumberField& K, const QVec& a) {
  int n = K.degree();
  QMat m(n, std::vector<Rational>(n, 0));
  QVec t = K.qone();
  QVec th = K.qzero();
  if (n > 1) th[1] = 1;
  for (int j = 0; j < n; ++j) {
    QVec col = K.qmul(a, t);
    for (int i = 0; i < n; ++i) m[i][j] = col[i];
    if (n > 1) t = K.qmul(t, th);
  }
  return m;
}

}  // namespace

QVec NumberField::qinv(const QVec& a) const {
  if (qis_zero(a)) throw std::domain_error("inverse of zero");
  QVec rhs = qone();
  return solve_linear(mult_matrix(*this, a), rhs);
}

Rational NumberField::qnorm(const QVec& a) const { return determinant(mult_matrix(*this, a)); }

Rational NumberField::qtrace(const QVec& a) const {
  Rational t = 0;
  for (int j = 0; j < n_; ++j) t += a[j] * traces_[j];
  return t;
}

QVec NumberField::to_q(const IVec& a) const {
  QVec r(n_);
  for (int j = 0; j < n_; ++j) r[j] = a[j];
  return r;
}

bool NumberField::is_integral(const QVec& a) const {
  for (const auto& c : a)
    if (c.get_den() != 1) return false;
  return true;
}

IVec NumberField::to_int(const QVec& a) const {
  IVec r{};
  for (int j = 0; j < n_; ++j) {
    if (a[j].get_den() != 1) throw std::domain_error("element is not integral");
    r[j] = narrow(a[j].get_num());
  }
  return r;
}

std::vector<std::vector<ComplexInterval>> NumberField::certify_roots(mpfr_prec_t prec) const {
  mpfr_prec_t wp = prec + 32;
  std::vector<std::vector<ComplexInterval>> out;
  std::vector<ComplexInterval> centers;
  std::vector<Interval> radii;
  auto horner = [&](const ComplexInterval& z, bool derivative) {
    ComplexInterval acc(wp);
    for (int k = n_; k >= (derivative ? 1 : 0); --k) {
      i64 c = derivative ? checked_mul(poly_[k], k) : poly_[k];
      acc = acc * z + ComplexInterval(Interval::from_integer(Integer(static_cast<long>(c)), wp), Interval(wp));
    }
    return acc;
  };
  for (const auto& r0 : approx_roots_) {
    ComplexInterval z(Interval::from_double(r0.real(), wp), Interval::from_double(r0.imag(), wp));
    for (int it = 0; it < 200; ++it) {
      ComplexInterval fz = horner(z, false);
      ComplexInterval dz = horner(z, true);
      Interval den = dz.abs_sq();
      if (den.contains_zero()) throw ConfigError("root refinement hit a critical point");
      Interval sre = (fz.re * dz.re + fz.im * dz.im) / den;
      Interval sim = (fz.im * dz.re - fz.re * dz.im) / den;
      ComplexInterval next = point(z.re - sre, z.im - sim, wp);
      double step = std::max(std::fabs(sre.mid_d()), std::fabs(sim.mid_d()));
      double scale = std::max(1.0, std::abs(std::complex<double>(z.re.mid_d(), z.im.mid_d())));
      z = next;
      if (step == 0.0 || std::log2(step / scale) < -static_cast<double>(wp) + 4) break;
    }
    ComplexInterval fz = horner(z, false);
    ComplexInterval dz = horner(z, true);
    Interval den = dz.abs_sq();
    if (den.contains_zero()) throw ConfigError("root certification failed (vanishing derivative)");
    Interval r = (fz.abs_sq() / den).sqrt() * Interval::from_integer(n_, wp);
    mpfr_set(r.lo_mut(), r.hi(), MPFR_RNDD);  // use the upper bound as radius
    centers.push_back(z);
    radii.push_back(r);
  }
  // Disks around the roots and their conjugates must be pairwise disjoint.
  size_t m = centers.size();
  for (size_t i = 0; i < 2 * m; ++i) {
    for (size_t j = i + 1; j < 2 * m; ++j) {
      const ComplexInterval& a = i < m ? centers[i] : centers[i - m];
      const ComplexInterval& b = j < m ? centers[j] : centers[j - m];
      Interval ai = i < m ? a.im : -a.im;
      Interval bi = j < m ? b.im : -b.im;
      Interval dist2 = (a.re - b.re).sqr() + (ai - bi).sqr();
      Interval rs = (radii[i % m] + radii[j % m]).sqr();
      if (!rs.strictly_below(dist2)) throw ConfigError("approximate roots do not isolate distinct roots");
    }
  }
  for (size_t e = 0; e < m; ++e) {
    ComplexInterval box(centers[e].re.inflate(radii[e]), centers[e].im.inflate(radii[e]));
    std::vector<ComplexInterval> pw;
    pw.emplace_back(Interval::from_integer(1, wp), Interval(wp));
    for (int j = 1; j < n_; ++j) pw.push_back(pw.back() * box);
    out.push_back(std::move(pw));
  }
  return out;
}

const std::vector<ComplexInterval>& NumberField::theta_powers(int e, mpfr_prec_t prec) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = cache_.find(prec);
  if (it == cache_.end()) it = cache_.emplace(prec, certify_roots(prec)).first;
  return it->second.at(e);
}

ComplexInterval NumberField::embed(const QVec& a, int e, mpfr_prec_t prec) const {
  const auto& pw = theta_powers(e, prec);
  ComplexInterval acc(prec);
  for (int j = 0; j < n_; ++j) {
    if (a[j] == 0) continue;
    acc = acc + pw[j].scale(Interval::from_rational(a[j], prec));
  }
  return acc;
}

ComplexInterval NumberField::embed(const IVec& a, int e, mpfr_prec_t prec) const {
  const auto& pw = theta_powers(e, prec);
  ComplexInterval acc(prec);
  for (int j = 0; j < n_; ++j) {
    if (a[j] == 0) continue;
    acc = acc + pw[j].scale(Interval::from_integer(Integer(static_cast<long>(a[j])), prec));
  }
  return acc;
}

EmbeddingApprox NumberField::embed_d(const IVec& a, int e) const {
  const auto& pw = fast_[e];
  EmbeddingApprox out;
  double mag = 0, err = 0;
  for (int j = 0; j < n_; ++j) {
    if (a[j] == 0) continue;
    double c = static_cast<double>(a[j]);
    out.value += c * pw[j].value;
    mag += std::fabs(c) * std::abs(pw[j].value);
    err += std::fabs(c) * pw[j].err;
  }
  bool exact_coeffs = true;
  for (int j = 0; j < n_; ++j)
    if (a[j] > (1LL << 52) || a[j] < -(1LL << 52)) exact_coeffs = false;
  out.err = exact_coeffs ? err + mag * 2e-15 : INFINITY;
  return out;
}

std::complex<double> NumberField::embed_approx(const QVec& a, int e) const {
  std::complex<double> v = 0;
  for (int j = 0; j < n_; ++j) v += a[j].get_d() * fast_[e][j].value;
  return v;
}

}  // namespace normone
