#pragma once

// Certified real/complex interval arithmetic on top of MPFR.
//
// Every operation rounds the lower endpoint down and the upper endpoint up,
// so the exact value of any expression evaluated on exact inputs is always
// contained in the resulting interval.

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace normone {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when a certified decision could not be reached within the
// precision cap.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Working precision (bits) used before any escalation. Reads
// NORMONE_PRECISION_BITS once; defaults to 128.
mpfr_prec_t default_precision_bits();

// Hard cap for precision doubling.
inline constexpr mpfr_prec_t kMaxPrecisionBits = 1 << 14;

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = default_precision_bits());
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(const Interval& other);
  Interval& operator=(Interval&& other) noexcept;
  ~Interval();

  static Interval from_integer(const Integer& z, mpfr_prec_t prec);
  static Interval from_rational(const Rational& q, mpfr_prec_t prec);
  static Interval from_double(double x, mpfr_prec_t prec);  // exact
  static Interval from_bounds(double lo, double hi, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return prec_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo_mut() { return lo_; }
  mpfr_ptr hi_mut() { return hi_; }

  double lo_d() const;  // rounded down
  double hi_d() const;  // rounded up
  double mid_d() const;
  double width_d() const;

  bool positive() const;  // lo > 0
  bool negative() const;  // hi < 0
  bool contains_zero() const { return !positive() && !negative(); }
  bool strictly_below(const Interval& o) const;  // hi < o.lo
  bool strictly_above(const Interval& o) const { return o.strictly_below(*this); }

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  Interval sqr() const;
  Interval sqrt() const;  // requires lo >= 0 (clamped)
  Interval exp() const;
  Interval log() const;   // requires lo > 0
  Interval cos() const;
  Interval inflate(const Interval& radius) const;  // [lo - r.hi, hi + r.hi]
  // Union hull.
  Interval hull(const Interval& o) const;

  std::string str() const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

// Argument of (x, y) normalised to [0, 2pi). Valid only when the box does
// not contain the origin and does not straddle the positive real axis
// (callers check `arg_box_resolvable` first).
bool arg_box_resolvable(const Interval& x, const Interval& y);
Interval arg_enclosure(const Interval& x, const Interval& y);

struct ComplexInterval {
  Interval re;
  Interval im;

  explicit ComplexInterval(mpfr_prec_t prec = default_precision_bits()) : re(prec), im(prec) {}
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ComplexInterval scale(const Interval& s) const { return {re * s, im * s}; }
  ComplexInterval conj() const { return {re, -im}; }
  Interval abs_sq() const { return re.sqr() + im.sqr(); }
};

}  // namespace normone
