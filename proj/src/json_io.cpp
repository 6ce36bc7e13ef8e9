#include "wmono/json_io.hpp"

#include <cstdio>
#include <set>
#include <stdexcept>
#include <utility>

namespace wmono {

using nlohmann::json;

namespace {

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("spec: missing integer field \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

double number_at(const json& entry, std::size_t index, const char* what) {
  if (!entry.at(index).is_number()) {
    throw std::invalid_argument(std::string("spec: ") + what + " must be a number");
  }
  return entry.at(index).get<double>();
}

}  // namespace

MixtureSpec parse_mixture_spec(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("spec: expected a JSON object");
  const int n = require_int(j, "n");
  const int d = require_int(j, "d");
  if (n < 2 || d < 2) throw std::invalid_argument("spec: need n >= 2 and d >= 2");
  if (!j.contains("coeffs") || !j.at("coeffs").is_array()) {
    throw std::invalid_argument("spec: missing coefficient array \"coeffs\"");
  }

  Matrix coeffs = Matrix::Zero(n, d - 1);
  std::set<std::pair<int, int>> filled;
  for (const auto& entry : j.at("coeffs")) {
    if (!entry.is_array() || entry.size() != 4) {
      throw std::invalid_argument("spec: each coefficient must be [s, i, re, im]");
    }
    if (!entry.at(0).is_number_integer() || !entry.at(1).is_number_integer()) {
      throw std::invalid_argument("spec: coefficient labels must be integers");
    }
    const int s = entry.at(0).get<int>();
    const int i = entry.at(1).get<int>();
    if (s < 1 || s > n || i < 1 || i > d - 1) {
      throw std::invalid_argument("spec: coefficient index out of range");
    }
    if (!filled.insert({s, i}).second) {
      throw std::invalid_argument("spec: duplicate coefficient entry");
    }
    coeffs(s - 1, i - 1) =
        Complex{number_at(entry, 2, "coefficient re"), number_at(entry, 3, "coefficient im")};
  }

  double p = 1.0;
  if (j.contains("p")) {
    if (!j.at("p").is_number()) throw std::invalid_argument("spec: p must be a number");
    p = j.at("p").get<double>();
  }

  std::optional<Vector> ancilla;
  if (j.contains("ancilla")) {
    if (!j.at("ancilla").is_array()) {
      throw std::invalid_argument("spec: ancilla must be an array of [i, re, im]");
    }
    Vector x = Vector::Zero(d - 1);
    std::set<int> seen;
    for (const auto& entry : j.at("ancilla")) {
      if (!entry.is_array() || entry.size() != 3 || !entry.at(0).is_number_integer()) {
        throw std::invalid_argument("spec: ancilla entries must be [i, re, im]");
      }
      const int i = entry.at(0).get<int>();
      if (i < 1 || i > d - 1) throw std::invalid_argument("spec: ancilla index out of range");
      if (!seen.insert(i).second) throw std::invalid_argument("spec: duplicate ancilla entry");
      x(i - 1) = Complex{number_at(entry, 1, "ancilla re"), number_at(entry, 2, "ancilla im")};
    }
    ancilla = std::move(x);
  }

  return MixtureSpec(WClassSpec(n, d, std::move(coeffs)), p, std::move(ancilla));
}

json mixture_spec_to_json(const MixtureSpec& mix) {
  const WClassSpec& w = mix.wclass();
  json coeffs = json::array();
  for (int s = 0; s < w.subsystem_count(); ++s) {
    for (int i = 1; i < w.local_dim(); ++i) {
      const Complex a = w.coeff(s, i);
      coeffs.push_back({s + 1, i, a.real(), a.imag()});
    }
  }
  json j{{"n", w.subsystem_count()}, {"d", w.local_dim()}, {"coeffs", std::move(coeffs)},
         {"p", mix.p()}};
  if (mix.ancilla()) {
    json ancilla = json::array();
    for (Eigen::Index i = 0; i < mix.ancilla()->size(); ++i) {
      const Complex a = (*mix.ancilla())(i);
      ancilla.push_back({static_cast<int>(i) + 1, a.real(), a.imag()});
    }
    j["ancilla"] = std::move(ancilla);
  }
  return j;
}

Partition parse_partition(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("partition: expected a non-empty array of index lists");
  }
  std::vector<SubsystemIndexSet> blocks;
  for (const auto& entry : j) {
    if (!entry.is_array()) {
      throw std::invalid_argument("partition: each block must be an array of indices");
    }
    std::vector<int> indices;
    for (const auto& value : entry) {
      if (!value.is_number_integer()) {
        throw std::invalid_argument("partition: indices must be integers");
      }
      const int label = value.get<int>();
      if (label < 1) throw std::invalid_argument("partition: indices are 1-based");
      indices.push_back(label - 1);
    }
    blocks.emplace_back(std::move(indices));
  }
  return Partition(std::move(blocks));
}

json partition_to_json(const Partition& partition) {
  json j = json::array();
  for (const auto& block : partition.blocks()) {
    json indices = json::array();
    for (const int index : block.indices()) indices.push_back(index + 1);
    j.push_back(std::move(indices));
  }
  return j;
}

json report_to_json(const MonogamyReport& report) {
  json pairs = json::array();
  for (const auto& pair : report.pairs) {
    json entry{{"k", pair.partner + 1},
               {"c2", pair.tangle},
               {"coa2", pair.coa_tangle},
               {"c_coa_residual", pair.c_coa_residual}};
    if (pair.numeric_min) entry["min_est"] = *pair.numeric_min;
    if (pair.numeric_max) entry["max_est"] = *pair.numeric_max;
    pairs.push_back(std::move(entry));
  }

  json provenance{{"lhs", provenance_name(report.lhs_source)},
                  {"pairs", provenance_name(report.pairs.empty()
                                                ? Provenance::kClosedForm
                                                : report.pairs.front().source)}};
  if (report.lhs_cross_check) {
    provenance["lhs_cross_check"] = provenance_name(Provenance::kBruteForce);
  }

  json j{{"focus", report.focus + 1},
         {"lhs", report.lhs_tangle},
         {"pairs", std::move(pairs)},
         {"residual_ckw", report.residual_ckw},
         {"residual_dual", report.residual_dual},
         {"mode", report.mode},
         {"tolerances",
          {{"algebraic", report.tolerances.algebraic},
           {"optimizer", report.tolerances.optimizer},
           {"decomposition_gap", report.tolerances.decomposition_gap}}},
         {"provenance", std::move(provenance)}};
  if (report.lhs_cross_check) j["lhs_cross_check"] = *report.lhs_cross_check;
  if (report.numeric_lhs_min) j["lhs_min_est"] = *report.numeric_lhs_min;
  if (report.numeric_lhs_max) j["lhs_max_est"] = *report.numeric_lhs_max;
  return j;
}

std::string report_csv_header() {
  return "instance,focus,lhs,lhs_cross_check,residual_ckw,residual_dual,max_pair_residual,mode";
}

std::string report_csv_row(const std::string& instance, const MonogamyReport& report) {
  std::string row = instance;
  row += ',';
  row += std::to_string(report.focus + 1);
  row += ',';
  row += format_double(report.lhs_tangle);
  row += ',';
  row += report.lhs_cross_check ? format_double(*report.lhs_cross_check) : std::string("");
  row += ',';
  row += format_double(report.residual_ckw);
  row += ',';
  row += format_double(report.residual_dual);
  row += ',';
  row += format_double(report.max_pair_residual());
  row += ',';
  row += report.mode;
  return row;
}

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

}  // namespace wmono
