#pragma once

// Brute-force enumeration of S_K(I, H) through psi, independent of the
// sieve, plus discrepancy, histograms and coset checks on its output.

#include <cstdint>
#include <string>
#include <vector>

#include "normone/angle.hpp"
#include "normone/field.hpp"

namespace normone {

struct NormOnePoint {
  ReducedFraction alpha;  // alpha = gamma / m
  IVec beta{};            // canonical preimage: in the domain, beta O_K = C O_K D B
  Integer height_pow2N;   // H(alpha)^(2N), an integer for norm-one alpha
  double height = 0;
  std::vector<double> args;  // arg sigma_n(alpha) in [0, 2pi)
  int class_index = 0;
  unsigned D_mask = 0;
  bool torsion = false;
};

struct OracleCell {
  int class_index = 0;
  unsigned D_mask = 0;
  long count = 0;
};

struct OracleResult {
  std::vector<NormOnePoint> points;  // sorted by (m, gamma)
  std::vector<OracleCell> cells;
  long enumerated = 0;   // lattice points visited
  long distinct = 0;     // distinct psi values before filtering
  long anomalies = 0;    // failed self-checks; must be zero
  std::vector<std::string> anomaly_notes;
};

// All alpha in S_K with H(alpha) <= H and arg vector in the union of `I`.
OracleResult enumerate_SK(const FieldDescriptor& F, const std::vector<ArcProduct>& I, const HeightBound& H,
                          int threads = 0);

struct Discrepancy {
  double value = 0;
  bool exact = false;  // N = 1 endpoint scan; otherwise a grid lower bound
  int grid = 0;
  long points = 0;
};
// Over the full-circle point set returned by enumerate_SK.
Discrepancy discrepancy(const FieldDescriptor& F, const std::vector<NormOnePoint>& points, int grid = 64);

struct HistogramBin {
  double lo = 0, hi = 0;
  long count = 0;
};
std::vector<HistogramBin> histogram(const std::vector<NormOnePoint>& points, int bins);
std::string histogram_csv(const std::vector<HistogramBin>& bins);

struct CosetReport {
  long height_pairs = 0;
  long height_violations = 0;
  long psi_checked = 0;
  long psi_violations = 0;
  long coset_checked = 0;
  long coset_violations = 0;
};
// Random gamma in k^x against sampled alpha; psi(alpha) = alpha^2 on every
// point; square-coset characterisation on `coset_samples` points.
CosetReport coset_checks(const FieldDescriptor& F, const std::vector<NormOnePoint>& points, long pairs,
                         long coset_samples, std::uint64_t seed);

// Generator of a principal O_k ideal (class number one), positive under sigma_1.
KVec principal_generator(const FieldDescriptor& F, const IdealHNF& A);

}  // namespace normone
