#include "diffset/io.hpp"

#include <fstream>
#include <sstream>

namespace diffset {

nlohmann::json configuration_to_json(const Configuration& c) {
  nlohmann::json j;
  j["k"] = c.variable_count();
  auto& eqs = j["equalities"] = nlohmann::json::array();
  for (const auto& e : c.equalities()) {
    const auto q = e.quadruple();
    eqs.push_back({q[0], q[1], q[2], q[3]});
  }
  return j;
}

Configuration configuration_from_json(const nlohmann::json& j) {
  require(j.is_object() && j.contains("k") && j.contains("equalities"), errc::parse_error,
          "configuration JSON needs \"k\" and \"equalities\"");
  require(j["k"].is_number_integer(), errc::parse_error, "\"k\" must be an integer");
  const int k = j["k"].get<int>();
  require(j["equalities"].is_array(), errc::parse_error, "\"equalities\" must be an array");
  std::vector<std::array<int, 4>> quads;
  for (const auto& item : j["equalities"]) {
    require(item.is_array() && item.size() == 4, errc::parse_error,
            "each equality is a quadruple [i1,i2,i3,i4]");
    std::array<int, 4> q{};
    for (int i = 0; i < 4; ++i) {
      require(item[i].is_number_integer(), errc::parse_error, "indices must be integers");
      q[i] = item[i].get<int>();
    }
    quads.push_back(q);
  }
  return Configuration::from_quadruples(k, quads);
}

std::string pointset_to_text(const PointSet& a) {
  std::string out;
  for (const Rat& v : a.elements()) {
    out += rat_to_string(v);
    out += '\n';
  }
  return out;
}

PointSet pointset_from_text(const std::string& text, std::size_t* dropped_duplicates) {
  std::vector<Rat> values;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(begin, end - begin + 1);
    const auto value = rat_from_string(token);
    require(value.has_value(), errc::parse_error,
            "line " + std::to_string(line_no) + ": cannot parse '" + token + "'");
    values.push_back(*value);
  }
  return PointSet::from_values(std::move(values), dropped_duplicates);
}

nlohmann::json pointset_to_json(const PointSet& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const Rat& v : a.elements()) out.push_back(rat_to_string(v));
  return out;
}

nlohmann::json lemma_report_to_json(const LemmaReport& report) {
  nlohmann::json j;
  for (const auto& [name, check] : report.checks) {
    nlohmann::json c;
    c["checked"] = check.checked;
    c["passed"] = check.passed;
    c["counterexamples"] = check.counterexamples;
    j[name] = std::move(c);
  }
  return j;
}

nlohmann::json oracle_result_to_json(int n, int k, long long ell, const OracleResult& result) {
  nlohmann::json j;
  j["n"] = n;
  j["k"] = k;
  j["ell"] = ell;
  j["M"] = result.grid_bound;
  if (result.infinite())
    j["value"] = "inf";
  else
    j["value"] = *result.value;
  if (result.witness)
    j["witness"] = *result.witness;
  else
    j["witness"] = nullptr;
  j["exact"] = result.exact;
  return j;
}

nlohmann::json construction_trace_to_json(const ConstructionTrace& trace) {
  nlohmann::json j;
  j["behrend_size"] = trace.behrend_size;
  j["sampled_size"] = trace.sampled_size;
  j["deleted_count"] = trace.deleted_count;
  j["seed"] = trace.seed;
  auto& deletions = j["heavy_deletions"] = nlohmann::json::array();
  for (const auto& hd : trace.heavy_deletions) {
    nlohmann::json d;
    d["subset"] = hd.support;
    d["rank"] = hd.rank;
    d["deleted"] = hd.deleted;
    deletions.push_back(std::move(d));
  }
  return j;
}

nlohmann::json cube_to_json(const CubeStructure& cube) {
  nlohmann::json j;
  j["s"] = cube.s;
  j["t"] = cube.t;
  auto& centers = j["centers"] = nlohmann::json::array();
  for (const Rat& v : cube.centers) centers.push_back(rat_to_string(v));
  auto& steps = j["steps"] = nlohmann::json::array();
  for (const Rat& v : cube.steps) steps.push_back(rat_to_string(v));
  return j;
}

nlohmann::json threshold_rows_to_json(int k, const std::vector<ThresholdRow>& rows) {
  nlohmann::json j;
  j["k"] = k;
  auto& out = j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r;
    r["source"] = row.source;
    r["ell"] = row.ell.str();
    r["exponent"] = rat_to_string(row.exponent);
    r["direction"] = row.direction;
    r["in_range"] = row.in_range;
    out.push_back(std::move(r));
  }
  return j;
}

std::string figure_curve_csv(const std::vector<CurvePoint>& points) {
  std::string csv = "coeff,exponent,direction,source\n";
  for (const auto& p : points) {
    csv += rat_to_string(p.coeff);
    csv += ',';
    csv += rat_to_string(p.exponent);
    csv += ',';
    csv += p.direction;
    csv += ',';
    csv += p.source;
    csv += '\n';
  }
  return csv;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), errc::parse_error, "cannot open '" + path + "' for writing");
  out << contents;
}

}  // namespace diffset
