#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "normone/field.hpp"

namespace normone {

using nlohmann::json;

namespace {

// Keep in sync with data/qzeta5.json (checked by the unit tests).
const char* kQzeta5 = R"({
  "schema": "normone-field/1",
  "name": "Qzeta5",
  "mode": "quartic_cm",
  "basis": {
    "min_poly": [1, 1, 1, 1, 1],
    "roots": [[0.30901699437494745, 0.9510565162951535], [-0.8090169943749475, 0.5877852522924731]],
    "k": [[1, 0, 0, 0], [-1, 0, -1, -1]]
  },
  "tau": [[1, 0, 0, 0], [-1, -1, -1, -1], [0, 0, 0, 1], [0, 0, 1, 0]],
  "class_reps": [{"hnf": [[1, 0], [0, 1]]}],
  "units": [[1, 1]],
  "regulator": 0.48121182505960347,
  "ramified": [{"P": {"generators": [[1, 2]]}, "p": {"generators": [[1, -1, 0, 0]]}}],
  "discs": {"k": 5, "K": 125}
})";

struct Builtin {
  const char* name;
  long d;  // 0 for a JSON builtin
};
const Builtin kBuiltins[] = {{"Qi", 1}, {"Qsqrt-3", 3}, {"Qsqrt-5", 5}, {"Qzeta5", 0}};

std::string imag_name(long d) { return d == 1 ? "Qi" : "Qsqrt-" + std::to_string(d); }

Mat read_matrix(const json& j, const std::string& what) {
  if (!j.is_array()) throw ConfigError(what + " must be an array of rows");
  Mat m;
  for (const auto& row : j) {
    if (!row.is_array()) throw ConfigError(what + " must be an array of rows");
    std::vector<i64> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw ConfigError(what + " entries must be integers");
      r.push_back(x.get<i64>());
    }
    m.push_back(r);
  }
  return m;
}

IVec to_ivec(const std::vector<i64>& v, int len, const std::string& what) {
  if (static_cast<int>(v.size()) != len) throw ConfigError(what + " needs " + std::to_string(len) + " coordinates");
  IVec out{};
  for (int i = 0; i < len; ++i) out[i] = v[i];
  return out;
}

IdealHNF read_ideal(const FieldDescriptor& F, Ring ring, const json& j, const std::string& what) {
  if (!j.is_object()) throw ConfigError(what + " must be an object with 'hnf' or 'generators'");
  const NumberField& R = ring == Ring::K ? *F.K : *F.k;
  if (j.contains("hnf")) return ideal_from_hnf(R, ring, read_matrix(j.at("hnf"), what + ".hnf"));
  if (j.contains("generators")) {
    std::vector<IVec> gens;
    for (const auto& row : read_matrix(j.at("generators"), what + ".generators")) {
      if (ring == Ring::k) {
        gens.push_back(to_ivec(row, F.N, what + " generator"));
      } else {
        gens.push_back(to_ivec(row, R.degree(), what + " generator"));
      }
    }
    return ideal_from_generators(R, ring, gens);
  }
  throw ConfigError(what + " must contain 'hnf' or 'generators'");
}

std::shared_ptr<FieldDescriptor> from_json(const json& j, const std::string& fallback_name) {
  if (!j.is_object()) throw ConfigError("field config must be a JSON object");
  std::string mode = j.value("mode", "");
  if (mode == "imag_quadratic") {
    if (!j.contains("d") || !j.at("d").is_number_integer()) throw ConfigError("imag_quadratic mode needs integer d");
    auto F = imag_quadratic(j.at("d").get<long>());
    if (j.contains("name")) F->name = j.at("name").get<std::string>();
    return F;
  }
  if (mode != "quartic_cm") throw ConfigError("unknown mode '" + mode + "' (expected imag_quadratic or quartic_cm)");

  auto F = std::make_shared<FieldDescriptor>();
  F->name = j.value("name", fallback_name);
  F->mode = mode;
  F->N = 2;
  if (!j.contains("basis")) throw ConfigError("quartic_cm config needs 'basis'");
  const json& b = j.at("basis");
  std::vector<i64> poly;
  for (const auto& x : b.at("min_poly")) poly.push_back(x.get<i64>());
  if (poly.size() != 5 || poly.back() != 1)
    throw ConfigError("min_poly must list the 5 coefficients of a monic quartic, constant term first");
  std::vector<std::complex<double>> roots;
  for (const auto& r : b.at("roots")) {
    if (!r.is_array() || r.size() != 2) throw ConfigError("roots must be [re, im] pairs");
    roots.emplace_back(r[0].get<double>(), r[1].get<double>());
  }
  F->K = std::make_shared<NumberField>(poly, roots);
  F->k_basis = read_matrix(b.at("k"), "basis.k");
  F->tau = read_matrix(j.at("tau"), "tau");

  if (!j.contains("discs")) throw ConfigError("quartic_cm config needs 'discs'");
  Integer disc_k = big(j.at("discs").at("k").get<i64>());
  Integer disc_K = big(j.at("discs").at("K").get<i64>());

  if (j.contains("units"))
    for (const auto& u : read_matrix(j.at("units"), "units")) F->units.push_back(to_ivec(u, 2, "unit"));
  if (j.contains("regulator")) F->regulator = j.at("regulator").get<double>();

  json ram = j.value("ramified", json::array());
  json reps = j.value("class_reps", json::array());
  F->finalize_subfield();
  if (F->K->discriminant() != disc_K)
    throw ConfigError("disc(Z[theta]) = " + F->K->discriminant().get_str() + " differs from disc_K = " +
                      disc_K.get_str() + ": index divisors are not supported");
  if (F->k->discriminant() != disc_k)
    throw ConfigError("disc(Z[w]) differs from disc_k: index divisors are not supported");
  for (size_t i = 0; i < reps.size(); ++i)
    F->class_reps.push_back(read_ideal(*F, Ring::k, reps[i], "class_reps[" + std::to_string(i) + "]"));
  for (size_t i = 0; i < ram.size(); ++i) {
    RamifiedPair rp;
    std::string w = "ramified[" + std::to_string(i) + "]";
    rp.P = read_ideal(*F, Ring::k, ram[i].at("P"), w + ".P");
    rp.p = read_ideal(*F, Ring::K, ram[i].at("p"), w + ".p");
    F->ramified.push_back(rp);
  }
  if (F->class_reps.size() > 1) F->notes.push_back("class representatives are trusted to be pairwise inequivalent");
  F->finalize();
  return F;
}

}  // namespace

std::shared_ptr<FieldDescriptor> imag_quadratic(long d) {
  if (d < 1) throw ConfigError("d must be a positive squarefree integer");
  if (!is_squarefree(static_cast<u64>(d))) throw ConfigError("d = " + std::to_string(d) + " is not squarefree");
  auto F = std::make_shared<FieldDescriptor>();
  F->name = imag_name(d);
  F->mode = "imag_quadratic";
  F->N = 1;
  F->d = d;
  double s = std::sqrt(static_cast<double>(d));
  if (d % 4 == 3) {
    F->K = std::make_shared<NumberField>(std::vector<i64>{(1 + d) / 4, -1, 1},
                                         std::vector<std::complex<double>>{{0.5, s / 2}});
    F->tau = {{1, 0}, {1, -1}};
  } else {
    F->K = std::make_shared<NumberField>(std::vector<i64>{d, 0, 1}, std::vector<std::complex<double>>{{0.0, s}});
    F->tau = {{1, 0}, {0, -1}};
  }
  F->k_basis = {{1, 0}};
  F->finalize_subfield();
  Integer disc = F->K->discriminant();
  for (auto& [p, e] : factor_u64(Integer(abs(disc)).get_ui())) {
    (void)e;
    auto ps = primes_above(*F->K, Ring::K, p);
    if (ps.size() != 1 || ps[0].e != 2) throw std::logic_error("prime dividing disc(K) is not ramified");
    RamifiedPair rp;
    rp.P = ideal_from_element(*F->k, Ring::k, IVec{static_cast<i64>(p), 0, 0, 0});
    rp.p = ps[0].ideal;
    F->ramified.push_back(rp);
  }
  F->finalize();
  return F;
}

std::vector<std::string> builtin_field_names() {
  std::vector<std::string> out;
  for (const auto& b : kBuiltins) out.emplace_back(b.name);
  return out;
}

std::shared_ptr<FieldDescriptor> load_descriptor_json(const std::string& json_text, const std::string& name) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError("malformed field config: " + std::string(e.what()));
  }
  try {
    return from_json(j, name);
  } catch (const json::exception& e) {
    throw ConfigError("invalid field config: " + std::string(e.what()));
  }
}

std::shared_ptr<FieldDescriptor> load_descriptor(const std::string& name_or_path) {
  for (const auto& b : kBuiltins) {
    if (name_or_path != b.name) continue;
    if (b.d > 0) return imag_quadratic(b.d);
    return load_descriptor_json(kQzeta5, b.name);
  }
  if (name_or_path.rfind("Qsqrt-", 0) == 0) {
    try {
      size_t pos = 0;
      long d = std::stol(name_or_path.substr(6), &pos);
      if (pos == name_or_path.size() - 6) return imag_quadratic(d);
    } catch (const std::logic_error&) {
    }
  }
  std::ifstream in(name_or_path);
  if (!in) {
    std::string names;
    for (const auto& n : builtin_field_names()) names += (names.empty() ? "" : ", ") + n;
    throw ConfigError("unknown field '" + name_or_path + "' (builtins: " + names + ", Qsqrt-<d>, or a JSON path)");
  }
  std::stringstream ss;
  ss << in.rdbuf();
  std::string stem = name_or_path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
  if (auto dot = stem.rfind('.'); dot != std::string::npos) stem = stem.substr(0, dot);
  return load_descriptor_json(ss.str(), stem);
}

}  // namespace normone
