#pragma once

// Minkowski lattices of ideals, exhaustive short-vector enumeration and the
// lattice-point error certificate.

#include <functional>
#include <vector>

#include "normone/algebra.hpp"
#include "normone/ideal.hpp"

namespace normone {

class FieldDescriptor;

using GramLD = std::vector<std::vector<long double>>;
using Coeffs = std::vector<i64>;

// Fincke-Pohst enumeration of all nonzero integer vectors with v G v^T <= bound.
// Floating point is only used to prune; a relative slack guarantees that no
// vector inside the bound is missed (callers re-check exactly).
class Enumerator {
 public:
  Enumerator(const GramLD& gram, long double bound);
  i64 top_min() const { return top_lo_; }
  i64 top_max() const { return top_hi_; }
  void run(const std::function<void(const Coeffs&)>& cb) const;
  // Only vectors whose last coordinate equals `top`.
  void run_slab(i64 top, const std::function<void(const Coeffs&)>& cb) const;

 private:
  void recurse(int i, Coeffs& x, long double partial, const std::function<void(const Coeffs&)>& cb) const;

  int n_;
  std::vector<std::vector<long double>> q_;  // q_[i][i] diagonal, q_[i][j] (j > i) mu coefficients
  long double bound_;
  i64 top_lo_ = 0, top_hi_ = 0;
};

GramLD to_long_double(const QMat& g);

// Exact Gram matrix of the trace form (1/2) Tr(x tau(y)) on the HNF basis.
QMat trace_gram(const FieldDescriptor& F, const IdealHNF& I);

struct LatticeBasis {
  int D = 0;
  IdealHNF ideal;
  QMat gram;                              // exact
  std::vector<std::vector<double>> cols;  // Minkowski images of the HNF basis (real/imag interleaved)
  double det = 0;                         // numerical |det|
  double det_closed_form = 0;             // 2^-N N(I) sqrt|disc_K|
};

LatticeBasis minkowski_lattice(const FieldDescriptor& F, const IdealHNF& I);

struct ShortestVector {
  IVec beta{};
  Rational length_sq;
  double lambda1 = 0;
};
ShortestVector shortest_vector(const FieldDescriptor& F, const LatticeBasis& L);

// Exact #(L intersect S) for a region contained in the ball of squared radius
// `radius_sq`; `pred` decides membership exactly.
i64 count_points(const FieldDescriptor& F, const LatticeBasis& L, long double radius_sq,
                 const std::function<bool(const IVec&)>& pred, std::vector<IVec>* points = nullptr);

// Visits every nonzero element of the ideal inside the ball.
void for_each_in_ball(const FieldDescriptor& F, const IdealHNF& I, long double radius_sq,
                      const std::function<void(const IVec&)>& cb);

IVec combine(const FieldDescriptor& F, const IdealHNF& I, const Coeffs& c);

// 2 * D^(3D^2/2) * M * (L / lambda1)^(D-1)
double error_certificate(int D, int M, double L, double lambda1);

}  // namespace normone
