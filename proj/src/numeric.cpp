#include "normone/numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace normone {

mpfr_prec_t default_precision_bits() {
  static const mpfr_prec_t bits = [] {
    const char* env = std::getenv("NORMONE_PRECISION_BITS");
    if (env == nullptr || *env == '\0') return mpfr_prec_t{128};
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 32 || v > kMaxPrecisionBits) return mpfr_prec_t{128};
    return static_cast<mpfr_prec_t>(v);
  }();
  return bits;
}

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept : Interval(other.prec_) {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(const Interval& other) {
  if (this == &other) return *this;
  if (prec_ != other.prec_) {
    prec_ = other.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
  }
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& other) noexcept {
  std::swap(prec_, other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_integer(const Integer& z, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_double(double x, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_d(r.lo_, x, MPFR_RNDD);
  mpfr_set_d(r.hi_, x, MPFR_RNDU);
  return r;
}

Interval Interval::from_bounds(double lo, double hi, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

double Interval::lo_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_d() const {
  mpfr_t m;
  mpfr_init2(m, prec_ + 1);
  mpfr_add(m, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m, m, 1, MPFR_RNDN);
  double d = mpfr_get_d(m, MPFR_RNDN);
  mpfr_clear(m);
  return d;
}

double Interval::width_d() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

bool Interval::positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::strictly_below(const Interval& o) const { return mpfr_less_p(hi_, o.lo_) != 0; }

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = std::max(a.prec_, b.prec_);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  mpfr_srcptr al[2] = {a.lo_, a.hi_};
  mpfr_srcptr bl[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : al) {
    for (auto y : bl) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw PrecisionError("interval division by an interval containing zero");
  mpfr_prec_t p = std::max(a.prec_, b.prec_);
  Interval r(p);
  mpfr_t t;
  mpfr_init2(t, p);
  mpfr_srcptr al[2] = {a.lo_, a.hi_};
  mpfr_srcptr bl[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : al) {
    for (auto y : bl) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval Interval::sqr() const {
  Interval r(prec_);
  if (mpfr_sgn(lo_) >= 0) {
    mpfr_sqr(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqr(r.hi_, hi_, MPFR_RNDU);
  } else if (mpfr_sgn(hi_) <= 0) {
    mpfr_sqr(r.lo_, hi_, MPFR_RNDD);
    mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
  } else {
    mpfr_set_zero(r.lo_, 1);
    mpfr_t a;
    mpfr_init2(a, prec_);
    mpfr_sqr(a, lo_, MPFR_RNDU);
    mpfr_sqr(r.hi_, hi_, MPFR_RNDU);
    if (mpfr_greater_p(a, r.hi_)) mpfr_set(r.hi_, a, MPFR_RNDU);
    mpfr_clear(a);
  }
  return r;
}

Interval Interval::sqrt() const {
  Interval r(prec_);
  if (mpfr_sgn(lo_) <= 0)
    mpfr_set_zero(r.lo_, 1);
  else
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  if (mpfr_sgn(hi_) < 0) throw PrecisionError("sqrt of a negative interval");
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(prec_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (!positive()) throw PrecisionError("log of a non-positive interval");
  Interval r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::cos() const {
  // Generic enclosure: evaluate at the endpoints and add the extrema of any
  // multiple of pi inside the interval.
  Interval r(prec_);
  Interval p = pi(prec_ + 16);
  mpfr_t a, b, k;
  mpfr_inits2(prec_ + 16, a, b, k, static_cast<mpfr_ptr>(nullptr));
  mpfr_cos(a, lo_, MPFR_RNDD);
  mpfr_cos(b, hi_, MPFR_RNDD);
  mpfr_min(r.lo_, a, b, MPFR_RNDD);
  mpfr_cos(a, lo_, MPFR_RNDU);
  mpfr_cos(b, hi_, MPFR_RNDU);
  mpfr_max(r.hi_, a, b, MPFR_RNDU);
  // k ranges over integers with k*pi possibly in [lo, hi].
  mpfr_div(a, lo_, p.hi_, MPFR_RNDD);
  mpfr_floor(a, a);
  mpfr_div(b, hi_, p.lo_, MPFR_RNDU);
  mpfr_ceil(b, b);
  mpfr_sub(k, b, a, MPFR_RNDU);
  if (mpfr_cmp_ui(k, 8) > 0) {
    mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    mpfr_set_si(r.hi_, 1, MPFR_RNDU);
  } else {
    for (mpfr_set(k, a, MPFR_RNDN); mpfr_lessequal_p(k, b); mpfr_add_ui(k, k, 1, MPFR_RNDN)) {
      Interval kp = Interval::from_integer(Integer(static_cast<long>(mpfr_get_si(k, MPFR_RNDN))), prec_ + 16) * p;
      bool maybe_inside = !mpfr_less_p(kp.hi_, lo_) && !mpfr_greater_p(kp.lo_, hi_);
      if (!maybe_inside) continue;
      if (mpfr_get_si(k, MPFR_RNDN) % 2 == 0)
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
      else
        mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    }
  }
  mpfr_clears(a, b, k, static_cast<mpfr_ptr>(nullptr));
  return r;
}

Interval Interval::inflate(const Interval& radius) const {
  Interval r(std::max(prec_, radius.prec_));
  mpfr_sub(r.lo_, lo_, radius.hi_, MPFR_RNDD);
  mpfr_add(r.hi_, hi_, radius.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

std::string Interval::str() const {
  std::ostringstream os;
  os.precision(17);
  os << '[' << lo_d() << ", " << hi_d() << ']';
  return os.str();
}

bool arg_box_resolvable(const Interval& x, const Interval& y) {
  bool touches_ray = mpfr_sgn(y.lo()) <= 0 && mpfr_sgn(y.hi()) >= 0 && mpfr_sgn(x.hi()) >= 0;
  return !touches_ray;
}

namespace {

// Enclosure of atan2(y, x) at a single exact point.
Interval atan2_point(mpfr_srcptr y, mpfr_srcptr x, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_atan2(r.lo_mut(), y, x, MPFR_RNDD);
  mpfr_atan2(r.hi_mut(), y, x, MPFR_RNDU);
  return r;
}

}  // namespace

Interval arg_enclosure(const Interval& x, const Interval& y) {
  if (!arg_box_resolvable(x, y)) throw PrecisionError("argument box touches the branch ray");
  mpfr_prec_t prec = std::max(x.prec(), y.prec());
  Interval two_pi = Interval::pi(prec) * Interval::from_integer(2, prec);
  mpfr_srcptr xs[2] = {x.lo(), x.hi()};
  mpfr_srcptr ys[2] = {y.lo(), y.hi()};
  bool straddles_negative_axis = mpfr_sgn(y.lo()) <= 0 && mpfr_sgn(y.hi()) >= 0;
  Interval out(prec);
  bool first = true;
  for (auto xc : xs) {
    for (auto yc : ys) {
      Interval a(prec);
      if (straddles_negative_axis) {
        // x < 0 on the whole box here; arg = pi - atan2(y, -x) is continuous.
        mpfr_t nx;
        mpfr_init2(nx, mpfr_get_prec(xc));
        mpfr_neg(nx, xc, MPFR_RNDN);
        a = Interval::pi(prec) - atan2_point(yc, nx, prec);
        mpfr_clear(nx);
      } else {
        a = atan2_point(yc, xc, prec);
        if (mpfr_sgn(y.hi()) < 0) a = a + two_pi;
      }
      out = first ? a : out.hull(a);
      first = false;
    }
  }
  return out;
}

}  // namespace normone
