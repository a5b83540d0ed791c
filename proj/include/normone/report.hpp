#pragma once

// JSON reports shared by the CLI, the Python module and the acceptance suite.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "normone/oracle.hpp"
#include "normone/s2.hpp"
#include "normone/sieve.hpp"

namespace normone {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "normone-report/1";

// 1 for N >= 2, log H for N = 1.
double log_factor(int N, double H);

Json field_json(const FieldDescriptor& F);
Json constants_json(const FieldDescriptor& F);
Json arcs_json(const std::vector<ArcProduct>& I);

struct CountReport {
  std::string field;
  std::vector<ArcProduct> arcs;
  HeightBound H;
  i64 sieve = 0;
  std::optional<long> oracle;
  long oracle_anomalies = 0;
  double main_term = 0;
  double residual = 0;           // sieve - main term
  std::optional<double> scaled;  // residual / (H^(2N-1) L); empty when L = 0
  std::optional<Discrepancy> discrepancy;
  SieveLedger ledger;
  std::vector<OracleCell> oracle_cells;
  bool failed = false;
  std::vector<std::string> failures;
  double wall_seconds = 0;  // kept out of the JSON so reports are byte-stable

  Json json() const;
};

CountReport run_count(const FieldDescriptor& F, const std::vector<ArcProduct>& I, const HeightBound& H,
                      bool with_oracle, bool with_discrepancy, int threads);

// Residual constants over increasing H stay bounded: the largest value over
// the later half is at most `factor` times the largest over the earlier half.
struct ResidualFit {
  std::vector<double> values;
  double early_max = 0;
  double late_max = 0;
  bool bounded = false;
};
ResidualFit fit_bounded(const std::vector<double>& values, double factor = 2.0);

Json s2_json(const Arc& I, const HeightBound& H, const S2Result& r);

}  // namespace normone
