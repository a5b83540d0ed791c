#include "normone/report.hpp"

#include <chrono>
#include <cmath>

namespace normone {

double log_factor(int N, double H) { return N == 1 ? std::log(H) : 1.0; }

Json field_json(const FieldDescriptor& F) {
  Json j;
  j["name"] = F.name;
  j["mode"] = F.mode;
  j["N"] = F.N;
  j["disc_K"] = F.disc_K.get_str();
  j["disc_k"] = F.disc_k.get_str();
  j["rel_disc_norm"] = F.rel_disc_norm.get_str();
  j["class_number_k"] = F.h_k;
  j["regulator_k"] = F.N == 1 ? 1.0 : F.regulator;
  j["omega_k"] = F.omega_k;
  Json ram = Json::array();
  for (const auto& r : F.ramified) ram.push_back(r.rational_prime);
  j["ramified"] = ram;
  Json ramn = Json::array();
  for (const auto& r : F.ramified) ramn.push_back(r.norm);
  j["ramified_norms"] = ramn;
  j["torsion"] = F.torsion.size();
  if (F.N == 2) j["unit"] = {F.eps()[0], F.eps()[1]};
  j["notes"] = F.notes;
  return j;
}

Json constants_json(const FieldDescriptor& F) {
  ConstantAK c = constant_AK(F);
  Json j;
  j["A_K"] = c.value;
  j["ramified_factor"] = c.ramified_factor;
  j["rel_disc_factor"] = c.rel_disc_factor;
  j["zeta_k2"] = c.zeta_k2;
  j["zeta_k2_euler"] = c.zeta_k2_euler;
  j["zeta_k2_euler_tail"] = c.zeta_k2_euler_tail;
  return j;
}

Json arcs_json(const std::vector<ArcProduct>& I) {
  Json a = Json::array();
  for (const auto& p : I) {
    Json prod = Json::array();
    for (const auto& arc : p.arcs) prod.push_back({arc.lo.str(), arc.hi.str()});
    a.push_back(prod);
  }
  return a;
}

Json CountReport::json() const {
  Json j;
  j["field"] = field;
  j["arcs"] = arcs_json(arcs);
  j["H"] = H.label;
  j["sieve"] = sieve;
  j["oracle"] = oracle ? Json(*oracle) : Json(nullptr);
  if (oracle) j["oracle_anomalies"] = oracle_anomalies;
  j["main_term"] = main_term;
  j["residual"] = residual;
  j["residual_constant"] = scaled ? Json(*scaled) : Json(nullptr);
  if (discrepancy) {
    j["discrepancy"] = {{"value", discrepancy->value},
                        {"mode", discrepancy->exact ? "exact" : "grid_lower_bound"},
                        {"grid", discrepancy->grid},
                        {"points", discrepancy->points}};
  }
  Json cells = Json::array();
  for (const auto& c : ledger.cells) {
    Json cj{{"class", c.class_index}, {"D_mask", c.D_mask}, {"sieve", c.count}};
    if (oracle) {
      long oc = 0;
      for (const auto& o : oracle_cells)
        if (o.class_index == c.class_index && o.D_mask == c.D_mask) oc = o.count;
      cj["oracle"] = oc;
    }
    cells.push_back(cj);
  }
  j["ledger"] = {{"truncation_H2N", rational_str(ledger.truncation)},
                 {"terms", ledger.terms},
                 {"nonzero_terms", ledger.nonzero_terms},
                 {"cells", cells}};
  j["status"] = failed ? "FAILED" : "ok";
  j["failures"] = failures;
  return j;
}

CountReport run_count(const FieldDescriptor& F, const std::vector<ArcProduct>& I, const HeightBound& H,
                      bool with_oracle, bool with_discrepancy, int threads) {
  auto t0 = std::chrono::steady_clock::now();
  CountReport r;
  r.field = F.name;
  r.arcs = I;
  r.H = H;
  SieveResult s = count_SK(F, I, H, threads);
  r.sieve = s.count;
  r.ledger = std::move(s.ledger);
  r.main_term = main_term(F, I, H);
  r.residual = static_cast<double>(r.sieve) - r.main_term;
  double h = H.value(), L = log_factor(F.N, h);
  if (L > 0) r.scaled = r.residual / (std::pow(h, 2 * F.N - 1) * L);
  if (with_oracle || with_discrepancy) {
    OracleResult o = enumerate_SK(F, I, H, threads);
    if (with_oracle) {
      r.oracle = static_cast<long>(o.points.size());
      r.oracle_anomalies = o.anomalies;
      r.oracle_cells = o.cells;
      if (*r.oracle != r.sieve) r.failures.push_back("sieve count differs from the oracle");
      if (o.anomalies) r.failures.push_back("oracle self-checks failed: " + o.anomaly_notes.front());
      for (const auto& c : r.ledger.cells) {
        long oc = 0;
        for (const auto& oc_ : o.cells)
          if (oc_.class_index == c.class_index && oc_.D_mask == c.D_mask) oc = oc_.count;
        if (oc != c.count) {
          r.failures.push_back("per-cell totals differ");
          break;
        }
      }
    }
    if (with_discrepancy) {
      // Discrepancy is defined over the whole of S_K(H).
      bool full = I.size() == 1 && I[0].is_full();
      OracleResult all = full ? std::move(o) : enumerate_SK(F, {ArcProduct::full(F.N)}, H, threads);
      r.discrepancy = discrepancy(F, all.points);
    }
  }
  r.failed = !r.failures.empty();
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

ResidualFit fit_bounded(const std::vector<double>& values, double factor) {
  ResidualFit f;
  f.values = values;
  size_t half = values.size() / 2;
  for (size_t i = 0; i < values.size(); ++i) {
    double v = std::fabs(values[i]);
    if (i < half)
      f.early_max = std::max(f.early_max, v);
    else
      f.late_max = std::max(f.late_max, v);
  }
  f.bounded = values.size() >= 2 && std::isfinite(f.late_max) && f.late_max <= factor * f.early_max;
  return f;
}

Json s2_json(const Arc& I, const HeightBound& H, const S2Result& r) {
  Json j;
  j["arc"] = {I.lo.str(), I.hi.str()};
  j["H"] = H.label;
  j["count"] = r.count;
  j["boundary_points"] = r.boundary;
  j["cos_measure"] = r.cos_measure;
  j["main_term"] = r.main_term;
  j["ratio"] = r.main_term > 0 ? Json(static_cast<double>(r.count) / r.main_term) : Json(nullptr);
  if (!r.by_field.empty()) {
    Json bf = Json::object();
    for (const auto& [d, n] : r.by_field) bf[std::to_string(d)] = n;
    j["by_field"] = bf;
  }
  return j;
}

}  // namespace normone
