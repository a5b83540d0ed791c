// normone: counts of norm-one elements of bounded height in CM fields.
//
//   normone constants Qi
//   normone count Qi --H 5 --arc 0:6.2832 --oracle
//   normone verify Qi --H 10,20,50,100
//   normone discrepancy Qi --H 10,50
//   normone s2 --arc 0:pi --H 30
//   normone histogram Qi --H 50 --bins 24 --format csv
//
// Exit codes: 0 ok, 2 configuration error, 3 assertion failure, 4 precision failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "normone/report.hpp"

using namespace normone;

namespace {

struct Options {
  std::string field_pos;
  std::string field;
  std::string H = "5";
  std::string arc;
  bool oracle = false;
  bool by_field = false;
  int bins = 36;
  int threads = 0;
  std::string format = "json";
};

struct AssertionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::shared_ptr<FieldDescriptor> field_of(const Options& o) {
  std::string name = !o.field.empty() ? o.field : o.field_pos;
  if (name.empty()) throw ConfigError("no field given (builtin name or descriptor path)");
  return load_descriptor(name);
}

std::vector<ArcProduct> arcs_of(const Options& o, int N) {
  if (o.arc.empty()) return {ArcProduct::full(N)};
  return parse_arc_spec(o.arc, N);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

Json header(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_constants(const Options& o) {
  auto F = field_of(o);
  Json j = header("constants");
  j["field"] = field_json(*F);
  j["constants"] = constants_json(*F);
  emit(j);
  std::cerr << F->name << ": A_K = " << fmt(j["constants"]["A_K"].get<double>()) << "\n";
  return 0;
}

int cmd_count(const Options& o, bool verify) {
  auto F = field_of(o);
  auto I = arcs_of(o, F->N);
  auto Hs = parse_height_list(o.H);
  Json j = header(verify ? "verify" : "count");
  j["field"] = F->name;
  Json reports = Json::array();
  std::vector<double> scaled;
  bool failed = false;
  std::ostringstream csv;
  csv << "H,sieve,oracle,main_term,residual,residual_constant\n";
  double wall = 0;
  for (const auto& H : Hs) {
    CountReport r = run_count(*F, I, H, o.oracle, false, o.threads);
    wall += r.wall_seconds;
    failed |= r.failed;
    if (r.scaled) scaled.push_back(*r.scaled);
    reports.push_back(r.json());
    csv << H.label << "," << r.sieve << "," << (r.oracle ? std::to_string(*r.oracle) : "") << "," << fmt(r.main_term)
        << "," << fmt(r.residual) << "," << (r.scaled ? fmt(*r.scaled) : "") << "\n";
    std::cerr << F->name << " H=" << H.label << " sieve=" << r.sieve;
    if (r.oracle) std::cerr << " oracle=" << *r.oracle;
    std::cerr << " main=" << fmt(r.main_term) << " residual=" << fmt(r.residual);
    if (r.scaled) std::cerr << " residual/(H^(2N-1) L)=" << fmt(*r.scaled);
    std::cerr << (r.failed ? "  FAILED" : "") << "\n";
  }
  j["reports"] = reports;
  if (verify) {
    ResidualFit fit = fit_bounded(scaled);
    j["residual_constants"] = fit.values;
    j["residual_bounded"] = fit.bounded;
  }
  j["status"] = failed ? "FAILED" : "ok";
  if (o.format == "csv")
    std::cout << csv.str();
  else
    emit(j);
  std::cerr << "wall time " << fmt(wall) << " s\n";
  if (failed) throw AssertionFailure("sieve/oracle assertion failed");
  return 0;
}

int cmd_discrepancy(const Options& o) {
  auto F = field_of(o);
  auto Hs = parse_height_list(o.H);
  Json j = header("discrepancy");
  j["field"] = F->name;
  Json rows = Json::array();
  for (const auto& H : Hs) {
    OracleResult all = enumerate_SK(*F, {ArcProduct::full(F->N)}, H, o.threads);
    if (all.anomalies) throw AssertionFailure("oracle self-checks failed: " + all.anomaly_notes.front());
    Discrepancy d = discrepancy(*F, all.points);
    double h = H.value(), L = log_factor(F->N, h);
    Json row{{"H", H.label},
             {"points", d.points},
             {"discrepancy", d.value},
             {"mode", d.exact ? "exact" : "grid_lower_bound"},
             {"scaled", L > 0 ? Json(d.value * h / L) : Json(nullptr)}};
    rows.push_back(row);
    std::cerr << F->name << " H=" << H.label << " D=" << fmt(d.value) << " (" << (d.exact ? "exact" : "grid lower bound")
              << ", " << d.points << " points)\n";
  }
  j["rows"] = rows;
  emit(j);
  return 0;
}

int cmd_s2(const Options& o) {
  auto I = parse_arc_spec(o.arc.empty() ? "0:pi" : o.arc, 1);
  if (I.size() != 1) throw ConfigError("s2 takes a single arc");
  Json j = header("s2");
  Json rows = Json::array();
  for (const auto& H : parse_height_list(o.H)) {
    S2Result r = count_S2(I[0].arcs[0], H, o.threads, o.by_field);
    rows.push_back(s2_json(I[0].arcs[0], H, r));
    std::cerr << "S2 H=" << H.label << " count=" << r.count << " main=" << fmt(r.main_term) << "\n";
  }
  j["rows"] = rows;
  emit(j);
  return 0;
}

int cmd_histogram(const Options& o) {
  auto F = field_of(o);
  auto Hs = parse_height_list(o.H);
  if (Hs.size() != 1) throw ConfigError("histogram takes a single height");
  OracleResult all = enumerate_SK(*F, {ArcProduct::full(F->N)}, Hs[0], o.threads);
  auto bins = histogram(all.points, o.bins);
  if (o.format == "csv") {
    std::cout << histogram_csv(bins);
  } else {
    Json j = header("histogram");
    j["field"] = F->name;
    j["H"] = Hs[0].label;
    Json b = Json::array();
    for (const auto& x : bins) b.push_back({{"bin_lo", x.lo}, {"bin_hi", x.hi}, {"count", x.count}});
    j["bins"] = b;
    j["total"] = all.points.size();
    emit(j);
  }
  std::cerr << F->name << " H=" << Hs[0].label << " " << all.points.size() << " points in " << o.bins << " bins\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts of norm-one elements of bounded height in CM fields"};
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* c, bool field) {
    if (field) {
      c->add_option("field_name", o.field_pos, "builtin field (Qi, Qsqrt-3, Qsqrt-5, Qzeta5, Qsqrt-<d>) or JSON path");
      c->add_option("--field", o.field, "same as the positional field");
    }
    c->add_option("--threads", o.threads, "worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
  };
  auto* constants = app.add_subcommand("constants", "field data and the constant A_K");
  add_common(constants, true);
  auto* count = app.add_subcommand("count", "sieved count of S_K(I, H), optionally against the oracle");
  auto* verify = app.add_subcommand("verify", "residuals against the main term over a list of heights");
  for (auto* c : {count, verify}) {
    add_common(c, true);
    c->add_option("--H", o.H, "height bound or comma-separated list");
    c->add_option("--arc", o.arc, "lo:hi[,lo:hi...] in radians");
    c->add_flag("--oracle", o.oracle, "compare with brute-force enumeration");
    c->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  }
  verify->get_option("--H")->default_str("10,20,50,100");
  auto* disc = app.add_subcommand("discrepancy", "discrepancy of S_K(H) on the torus");
  add_common(disc, true);
  disc->add_option("--H", o.H, "height bound or comma-separated list");
  auto* s2 = app.add_subcommand("s2", "aggregate count over all imaginary quadratic fields");
  add_common(s2, false);
  s2->add_option("--H", o.H, "height bound or comma-separated list");
  s2->add_option("--arc", o.arc, "single arc within [0, pi] or [pi, 2pi]");
  s2->add_flag("--by-field", o.by_field, "group the non-real points by field");
  auto* hist = app.add_subcommand("histogram", "histogram of arg sigma_1 over S_K(H)");
  add_common(hist, true);
  hist->add_option("--H", o.H, "height bound");
  hist->add_option("--bins", o.bins)->check(CLI::PositiveNumber);
  hist->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (verify->parsed() && verify->get_option("--H")->count() == 0) o.H = "10,20,50,100";

  try {
    if (constants->parsed()) return cmd_constants(o);
    if (count->parsed()) return cmd_count(o, false);
    if (verify->parsed()) return cmd_count(o, true);
    if (disc->parsed()) return cmd_discrepancy(o);
    if (s2->parsed()) return cmd_s2(o);
    if (hist->parsed()) return cmd_histogram(o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const AssertionFailure& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return 3;
  } catch (const PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
