#pragma once

#include <string>

#include <json.hpp>

#include "diffset/configuration.hpp"
#include "diffset/construct.hpp"
#include "diffset/implication.hpp"
#include "diffset/solution.hpp"
#include "diffset/thresholds.hpp"

namespace diffset {

// {"k": int, "equalities": [[i1,i2,i3,i4], ...]} with 1-based indices
nlohmann::json configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const nlohmann::json& j);

// one value per line, integers or "p/q", '#' comments ignored
std::string pointset_to_text(const PointSet& a);
PointSet pointset_from_text(const std::string& text, std::size_t* dropped_duplicates = nullptr);

nlohmann::json pointset_to_json(const PointSet& a);
nlohmann::json lemma_report_to_json(const LemmaReport& report);
nlohmann::json oracle_result_to_json(int n, int k, long long ell, const OracleResult& result);
nlohmann::json construction_trace_to_json(const ConstructionTrace& trace);
nlohmann::json cube_to_json(const CubeStructure& cube);
nlohmann::json threshold_rows_to_json(int k, const std::vector<ThresholdRow>& rows);

std::string figure_curve_csv(const std::vector<CurvePoint>& points);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace diffset
