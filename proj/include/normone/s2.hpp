#pragma once

// Aggregate count of norm-one points of degree at most two: e^{i theta} with
// minimal polynomial a x^2 + b x + a, gcd(a, b) = 1, |b| < 2a, height sqrt(a).

#include <map>
#include <vector>

#include "normone/angle.hpp"

namespace normone {

struct AggregatePoint {
  i64 a = 1;
  i64 b = 0;
  double theta = 0;  // cos theta = -b / (2a), theta in (0, pi)
  u64 field = 1;     // K = Q(sqrt(-field)), the squarefree kernel of 4a^2 - b^2
};

struct S2Result {
  i64 count = 0;
  i64 boundary = 0;  // the real points +-1 inside I
  std::map<u64, i64> by_field;  // non-real points grouped by field, when requested
  double cos_measure = 0;       // |cos(I)|
  double main_term = 0;         // |cos(I)| / zeta(2) * H^4
};

// I within [0, pi], or within [pi, 2pi] (delegated through alpha -> -alpha).
S2Result count_S2(const Arc& I, const HeightBound& H, int threads = 0, bool by_field = false);

// [lo, hi) within [pi, 2pi]  ->  [lo - pi, hi - pi).
Arc reflect_to_upper(const Arc& I);

// The non-real points with theta in I (I within [0, pi]), sorted by (a, b).
std::vector<AggregatePoint> aggregate_points(const Arc& I, const HeightBound& H);

}  // namespace normone
