#pragma once

// Arithmetic data for a CM quadratic extension K/k: tau, the subfield, units,
// ramification, torsion, psi, heights and certified argument predicates.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "normone/angle.hpp"
#include "normone/ideal.hpp"
#include "normone/number_field.hpp"

namespace normone {

using KVec = IVec;  // element of O_k in the basis 1, w (N coordinates)

struct RamifiedPair {
  IdealHNF P;      // over O_k
  IdealHNF p;      // over O_K, p^2 = P O_K
  u64 rational_prime = 0;
  i64 norm = 0;    // N(P) = N(p)
};

struct TorsionElement {
  IVec zeta;
  int order = 1;
  std::vector<Rational> arg_over_pi;  // exact argument / pi in [0, 2) per embedding
};

// alpha = gamma / m with m > 0 and gcd(content(gamma), m) = 1.
struct ReducedFraction {
  IVec gamma{};
  i64 m = 1;
  friend bool operator<(const ReducedFraction& a, const ReducedFraction& b) {
    if (a.m != b.m) return a.m < b.m;
    return a.gamma < b.gamma;
  }
  friend bool operator==(const ReducedFraction& a, const ReducedFraction& b) {
    return a.m == b.m && a.gamma == b.gamma;
  }
};

struct HeightValue {
  Rational nonarch;  // N(denominator ideal)
  QuadReal pow2N;    // H^(2N), exact
  double value = 0;  // H
};

// Angle endpoint with a cached double enclosure.
struct Endpoint {
  Angle angle;
  double lo = 0, hi = 0;
  static Endpoint make(const Angle& a);
};

class FieldDescriptor {
 public:
  std::string name;
  std::string mode;  // "imag_quadratic" or "quartic_cm"
  int N = 1;
  long d = 0;  // imaginary quadratic mode: K = Q(sqrt(-d))
  std::shared_ptr<NumberField> K;
  std::shared_ptr<NumberField> k;
  Mat tau;      // row j = coordinates of tau(theta^j)
  Mat k_basis;  // row j = K-coordinates of w^j
  int k_pivot = 0;
  long D = 0;   // k = Q(sqrt(D)), 0 for k = Q
  i64 k_t = 0, k_n = 0;  // w^2 = t*w + n
  i64 k_f = 1;           // disc_k = f^2 * D
  std::vector<int> sqrtD_sign;  // sigma_e(sqrt(D)) = sign * sqrt(D)
  Integer disc_k = 1, disc_K = 0, rel_disc_norm = 1;
  std::vector<IdealHNF> class_reps;
  int h_k = 1;
  std::vector<KVec> units;  // fundamental units with sigma_1(eps) > 1
  double regulator = 0;  // 0 until derived or configured
  int omega_k = 2;
  std::vector<RamifiedPair> ramified;
  std::vector<TorsionElement> torsion;
  std::vector<std::string> notes;  // trusted-config flags surfaced in reports

  // Exact conjugation.
  IVec tau_int(const IVec& a) const;
  QVec tau_q(const QVec& a) const;

  // Subfield conversions.
  IVec k_to_K(const KVec& a) const;
  QVec k_to_K_q(const std::vector<Rational>& a) const;
  std::optional<KVec> K_to_k(const IVec& a) const;
  std::optional<std::vector<Rational>> K_to_k_q(const QVec& a) const;
  KVec k_conj(const KVec& a) const;
  KVec k_mul(const KVec& a, const KVec& b) const;
  i64 k_norm(const KVec& a) const;
  QuadReal k_real(const KVec& a, int e) const;
  QuadReal k_real_q(const std::vector<Rational>& a, int e) const;

  // Relative and absolute norms.
  KVec norm_rel_int(const IVec& beta) const;
  std::vector<Rational> norm_rel(const QVec& alpha) const;
  i64 norm_abs_int(const IVec& beta) const;
  Rational norm_abs(const QVec& alpha) const;

  // psi(beta) = beta / tau(beta).
  QVec psi(const QVec& beta) const;
  ReducedFraction psi_int(const IVec& beta) const;
  QVec fraction_to_q(const ReducedFraction& r) const;

  HeightValue weil_height(const QVec& alpha) const;
  // N(denominator ideal) of gamma/m, i.e. H^(2N) for norm-one elements.
  Integer denominator_norm(const ReducedFraction& r) const;

  bool in_SK(const QVec& alpha) const;
  bool is_torsion(const QVec& alpha) const;
  std::vector<double> arg_vector(const QVec& alpha) const;
  // Index into `torsion` with gamma = zeta * tau(gamma), if any.
  std::optional<int> psi_torsion_index(const IVec& gamma) const;

  // Fundamental unit data (N = 2).
  KVec eps() const { return units.at(0); }
  KVec eps_inv() const;
  KVec eps4() const { return eps4_; }
  double log_eps1() const { return log_eps1_; }

  const LocalPrimes& local(u64 p) const;
  unsigned full_ramified_mask() const { return (1u << ramified.size()) - 1u; }

  // Validates tau and builds the subfield k (needed before O_k ideals can be read).
  void finalize_subfield();
  // Validates everything else and derives units, torsion and caches.
  void finalize();

 private:
  KVec eps4_{};
  double log_eps1_ = 0;
  mutable std::mutex local_mutex_;
  mutable std::map<u64, std::unique_ptr<LocalPrimes>> local_cache_;
};

// Certified argument of sigma_e(gamma) for integral gamma != 0.
class ArgProbe {
 public:
  ArgProbe(const FieldDescriptor& F, const IVec& gamma, int e);
  // sign(arg - endpoint) with arg in [0, 2pi); exact at ties.
  int compare(const Endpoint& ep);
  bool in_arc(const Endpoint& lo, const Endpoint& hi);
  double approx();
  // Exact argument / pi when psi(gamma) is torsion.
  std::optional<Rational> exact_over_pi();

 private:
  const FieldDescriptor& F_;
  IVec gamma_;
  int e_;
  bool fast_ok_ = false;
  bool fast_wraps_ = false;
  double theta_ = 0, delta_ = 0;
  int torsion_state_ = 0;  // 0 unknown, 1 torsion, -1 not torsion
  Rational exact_;
};

// Fundamental unit of Z[w], w^2 = t*w + n, from the continued fraction of
// the larger root; returned as coordinates (x, y) of x + y*w, up to sign and
// inversion.
KVec fundamental_unit(i64 t, i64 n);

std::shared_ptr<FieldDescriptor> load_descriptor(const std::string& name_or_path);
std::shared_ptr<FieldDescriptor> load_descriptor_json(const std::string& json_text, const std::string& name);
std::shared_ptr<FieldDescriptor> imag_quadratic(long d);
std::vector<std::string> builtin_field_names();

}  // namespace normone
