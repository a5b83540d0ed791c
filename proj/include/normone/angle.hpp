#pragma once

// Exact angles a + b*pi, half-open arcs and height bounds.

#include <string>
#include <vector>

#include "normone/algebra.hpp"
#include "normone/numeric.hpp"

namespace normone {

struct Angle {
  Rational a = 0;  // rational part
  Rational b = 0;  // coefficient of pi

  static Angle pi_times(Rational b_) { return {0, std::move(b_)}; }
  static Angle zero() { return {0, 0}; }
  static Angle two_pi() { return {0, 2}; }

  // An algebraic point on the circle can only sit exactly on an endpoint of
  // this form (rational multiple of pi).
  bool is_pi_multiple() const { return a == 0; }
  bool is_zero() const { return a == 0 && b == 0; }
  bool is_two_pi() const { return a == 0 && b == 2; }

  Angle half() const { return {a / 2, b / 2}; }
  Angle plus_pi() const { return {a, b + 1}; }
  Angle minus_pi() const { return {a, b - 1}; }

  Interval enclosure(mpfr_prec_t prec) const;
  double to_double() const;
  std::string str() const;

  friend bool operator==(const Angle& x, const Angle& y) { return x.a == y.a && x.b == y.b; }
};

// Certified comparison of two angles (never ambiguous: pi is irrational).
int compare_angles(const Angle& x, const Angle& y);

// Accepts decimals ("0.5", "6.2832") and multiples of pi ("pi", "pi/3",
// "2pi/3", "2*pi/3", "-pi/4").
Angle parse_angle(const std::string& text);

// Half-open [lo, hi) with 0 <= lo < hi <= 2pi.
struct Arc {
  Angle lo;
  Angle hi;

  double length() const { return hi.to_double() - lo.to_double(); }
  Interval length_enclosure(mpfr_prec_t prec) const { return hi.enclosure(prec) - lo.enclosure(prec); }
  std::string str() const { return "[" + lo.str() + ", " + hi.str() + ")"; }
};

// Validates 0 <= lo < hi and clamps hi to 2pi when it exceeds 2pi.
Arc make_arc(const Angle& lo, const Angle& hi);

struct ArcProduct {
  std::vector<Arc> arcs;  // one per coordinate

  static ArcProduct full(int N);
  int N() const { return static_cast<int>(arcs.size()); }
  double measure() const;
  bool is_full() const;
  std::string str() const;
};

// "lo:hi[,lo:hi...]". For N = 1 the items form a union of disjoint arcs; for
// N >= 2 there must be exactly N items, one per coordinate. A wrapping item
// (lo > hi) is split at 2pi. Returns disjoint non-wrapping products.
std::vector<ArcProduct> parse_arc_spec(const std::string& spec, int N);

struct HeightBound {
  Rational h2;  // square of the bound, exact
  std::string label;

  double value() const;
  Rational pow2N(int N) const;  // H^(2N)
};

// "5", "1.5", "sqrt(5)", "7/2".
HeightBound parse_height(const std::string& text);
std::vector<HeightBound> parse_height_list(const std::string& text);
HeightBound height_from_int(long h);

}  // namespace normone
