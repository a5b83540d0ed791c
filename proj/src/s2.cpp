#include "normone/s2.hpp"

#include <cmath>
#include <numeric>
#include <optional>

#include "normone/parallel.hpp"

namespace normone {

namespace {

// cos of an arc endpoint in [0, pi]; rational exactly at the Niven angles.
struct CosEndpoint {
  Angle angle;
  std::optional<Rational> exact;
  double approx = 0;

  explicit CosEndpoint(const Angle& x) : angle(x), approx(std::cos(x.to_double())) {
    if (x.a != 0) return;
    static const std::pair<Rational, Rational> niven[] = {
        {Rational(0), Rational(1)}, {Rational(1, 3), Rational(1, 2)}, {Rational(1, 2), Rational(0)},
        {Rational(2, 3), Rational(-1, 2)}, {Rational(1), Rational(-1)}};
    for (const auto& [b, c] : niven)
      if (x.b == b) exact = c;
  }

  // sign(c - cos(angle))
  int compare(const Rational& c) const {
    if (exact) return sgn(c - *exact);
    for (mpfr_prec_t prec = default_precision_bits(); prec <= kMaxPrecisionBits; prec *= 2) {
      Interval v = angle.enclosure(prec).cos();
      Interval q = Interval::from_rational(c, prec);
      if (q.strictly_above(v)) return 1;
      if (q.strictly_below(v)) return -1;
    }
    throw PrecisionError("cosine comparison at " + angle.str() + " exceeded the precision cap");
  }
};

struct UpperArc {
  CosEndpoint lo, hi;
  // theta in [lo, hi)  <=>  cos(hi) < c <= cos(lo)
  bool contains(const Rational& c) const { return lo.compare(c) <= 0 && hi.compare(c) > 0; }
};

void check_upper(const Arc& I) {
  if (compare_angles(I.hi, Angle::pi_times(1)) > 0) throw ConfigError("arc " + I.str() + " is not within [0, pi]");
}

Rational cos_of(i64 a, i64 b) { return Rational(-b, 2 * a); }

// Range of b with theta in I for fixed a, clipped to |b| < 2a.
std::pair<i64, i64> b_range(const UpperArc& U, i64 a) {
  i64 lo = static_cast<i64>(std::ceil(-2.0 * a * U.lo.approx)) - 2;
  i64 hi = static_cast<i64>(std::ceil(-2.0 * a * U.hi.approx)) + 1;
  lo = std::max(lo, -2 * a + 1);
  hi = std::min(hi, 2 * a - 1);
  while (lo <= hi && !U.contains(cos_of(a, lo))) ++lo;
  while (hi >= lo && !U.contains(cos_of(a, hi))) --hi;
  return {lo, hi};
}

i64 max_a(const HeightBound& H) {
  Integer f = H.h2.get_num() / H.h2.get_den();
  return narrow(f);
}

}  // namespace

Arc reflect_to_upper(const Arc& I) {
  if (compare_angles(I.lo, Angle::pi_times(1)) < 0)
    throw ConfigError("arc " + I.str() + " is not within [pi, 2pi]");
  return Arc{I.lo.minus_pi(), I.hi.minus_pi()};
}

S2Result count_S2(const Arc& I_in, const HeightBound& H, int threads, bool by_field) {
  if (H.h2 < 1) throw ConfigError("height bound must be at least 1");
  Arc I = compare_angles(I_in.lo, Angle::pi_times(1)) >= 0 ? reflect_to_upper(I_in) : I_in;
  check_upper(I);
  UpperArc U{CosEndpoint(I.lo), CosEndpoint(I.hi)};
  i64 A = max_a(H);

  constexpr i64 kChunk = 64;
  long chunks = static_cast<long>((A + kChunk - 1) / kChunk);
  std::vector<i64> counts(chunks, 0);
  std::vector<std::map<u64, i64>> fields(chunks);
  parallel_for(chunks, threads, [&](long ch) {
    i64 a0 = 1 + ch * kChunk, a1 = std::min(A, a0 + kChunk - 1);
    for (i64 a = a0; a <= a1; ++a) {
      auto [lo, hi] = b_range(U, a);
      for (i64 b = lo; b <= hi; ++b) {
        if (std::gcd(a, b) != 1) continue;
        ++counts[ch];
        if (by_field) ++fields[ch][squarefree_kernel(static_cast<u64>(4 * a * a - b * b))];
      }
    }
  });
  S2Result r;
  for (long ch = 0; ch < chunks; ++ch) {
    r.count += counts[ch];
    for (const auto& [d, n] : fields[ch]) r.by_field[d] += n;
  }
  // alpha = 1 at theta = 0; alpha = -1 sits at pi, outside every [lo, hi) within [0, pi].
  if (I.lo.is_zero()) r.boundary = 1;
  r.count += r.boundary;
  r.cos_measure = std::cos(I.lo.to_double()) - std::cos(I.hi.to_double());
  double h2 = H.h2.get_d();
  r.main_term = r.cos_measure / (M_PI * M_PI / 6) * h2 * h2;
  return r;
}

std::vector<AggregatePoint> aggregate_points(const Arc& I, const HeightBound& H) {
  check_upper(I);
  UpperArc U{CosEndpoint(I.lo), CosEndpoint(I.hi)};
  std::vector<AggregatePoint> out;
  for (i64 a = 1; a <= max_a(H); ++a) {
    auto [lo, hi] = b_range(U, a);
    for (i64 b = lo; b <= hi; ++b)
      if (std::gcd(a, b) == 1)
        out.push_back({a, b, std::acos(-static_cast<double>(b) / (2.0 * a)),
                       squarefree_kernel(static_cast<u64>(4 * a * a - b * b))});
  }
  return out;
}

}  // namespace normone
