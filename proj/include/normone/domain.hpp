#pragma once

// The unit-lattice fundamental domain F, the halved arc set I* and the
// region S_F(I*; T) together with its volume and boundary parameters.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "normone/angle.hpp"
#include "normone/field.hpp"

namespace normone {

// Half-open arc [lo, hi) with certified endpoints.
struct EndpointArc {
  Endpoint lo, hi;
};

class Region {
 public:
  // T2N = T^(2N); nullopt means T = infinity.
  Region(const FieldDescriptor& F, const ArcProduct& I, std::optional<Rational> T2N);
  // Full I and T = infinity: the domain used to pick canonical preimages.
  static Region domain(const FieldDescriptor& F);

  const FieldDescriptor& field() const { return *F_; }
  const ArcProduct& arcs() const { return I_; }
  bool bounded() const { return T2N_.has_value(); }
  const Rational& T2N() const { return *T2N_; }
  const std::vector<std::vector<EndpointArc>>& istar() const { return istar_; }

  // Squared radius of a Euclidean ball containing the region.
  long double radius_sq() const;

  // Exact membership of sigma(beta) for integral beta != 0.
  bool in_F(const IVec& beta) const;
  bool radial_ok(const IVec& beta) const;
  bool args_ok(const IVec& beta) const;
  bool contains(const IVec& beta) const { return radial_ok(beta) && in_F(beta) && args_ok(beta); }

  // Floating-point membership of a point of C^N (Monte-Carlo only).
  bool contains_approx(const std::vector<std::complex<double>>& x) const;

 private:
  const FieldDescriptor* F_;
  ArcProduct I_;
  std::optional<Rational> T2N_;
  std::vector<std::vector<EndpointArc>> istar_;
  std::vector<bool> coord_full_;
};

// I* coordinates: [a1/2, b1/2) and, for n >= 2, [a/2, b/2) u [a/2 + pi, b/2 + pi).
std::vector<std::vector<Arc>> build_istar(const ArcProduct& I);

// Squared radius of the ball containing S_F(I*; 1): sum_n max(1, |sigma_n eps|^2).
double L0_sq(const FieldDescriptor& F);

// |I| R_k / (2^N omega_k) * T^(2N).
double region_volume(const FieldDescriptor& F, const ArcProduct& I, double T2N);

struct LipschitzParams {
  int M = 0;
  double L = 0;  // for T = 1; scale by T
  bool derived = false;  // true when the cover is constructed explicitly
};
LipschitzParams lipschitz_params(const FieldDescriptor& F, const ArcProduct& I);

// beta' = sign * eps^m * beta is the unique element of {+-eps^m beta} in the domain.
struct UnitReduction {
  IVec beta{};
  long m = 0;
  int sign = 1;
};
UnitReduction reduce_to_domain(const FieldDescriptor& F, const IVec& beta);

// Multiplies by eps^m in O_K (m may be negative).
IVec mul_eps_pow(const FieldDescriptor& F, const IVec& beta, long m);

struct MonteCarloVolume {
  double volume = 0;
  double std_error = 0;
  double box_volume = 0;
  long samples = 0;
  long hits = 0;
};
MonteCarloVolume monte_carlo_volume(const FieldDescriptor& F, const ArcProduct& I, long samples, std::uint64_t seed);

}  // namespace normone
