#include "diffset/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "diffset/io.hpp"
#include "diffset/verify.hpp"

namespace diffset {

namespace {

Rat parse_rat(const std::string& text, const std::string& flag) {
  auto r = rat_from_string(text);
  require(r.has_value(), errc::parse_error, flag + " expects an integer or p/q rational");
  return *r;
}

std::size_t default_budget() {
  if (const char* env = std::getenv("DIFFSET_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 10'000'000;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << text;
  else
    write_file(out_path, text);
}

void emit_json(const nlohmann::json& j, const std::string& out_path, std::ostream& out) {
  emit(j.dump(2) + "\n", out_path, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for local properties of difference sets"};
  app.require_subcommand(1);

  std::string in_path, out_path, format = "json", trace_path;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::size_t budget = default_budget();

  // analyze-config
  auto* analyze = app.add_subcommand("analyze-config", "dimension, goodness and d(C) of a configuration");
  std::string analyze_c = "2";
  std::size_t subset_cap = kDefaultSubsetCap;
  analyze->add_option("--in", in_path, "configuration JSON file")->required();
  analyze->add_option("--c", analyze_c, "heaviness parameter in (1,2]");
  analyze->add_option("--seed", seed, "seed for the generic-solution sampler");
  analyze->add_option("--subset-cap", subset_cap, "cap on the heavy-part subset scan");
  analyze->add_option("--out", out_path, "output path (stdout when absent)");
  analyze->add_option("--format", format, "json or text");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "canonical difference equalities on k variables");
  int enum_k = 0;
  int involving = 0;
  bool nondegenerate = false;
  enumerate->add_option("--k", enum_k, "variable count")->required();
  enumerate->add_option("--involving", involving, "keep equalities involving this variable");
  enumerate->add_flag("--nondegenerate", nondegenerate, "drop degenerate equalities");
  enumerate->add_option("--out", out_path, "output path");

  // construct
  auto* construct = app.add_subcommand("construct", "constructive procedures");
  construct->require_subcommand(1);
  auto* behrend = construct->add_subcommand("behrend", "3-AP-free subset of {1..n}");
  long long behrend_n = 0;
  behrend->add_option("--n", behrend_n, "range bound")->required();
  behrend->add_option("--out", out_path, "output path");

  auto* local_set = construct->add_subcommand("local-set", "randomized set avoiding heavy configurations");
  int ls_n = 0, ls_k = 0;
  std::string ls_c = "2", ls_a = "1";
  local_set->add_option("--n", ls_n, "set size")->required();
  local_set->add_option("--k", ls_k, "subset size to protect")->required();
  local_set->add_option("--c", ls_c, "exponent parameter in (1,2]");
  local_set->add_option("--a", ls_a, "range scale");
  local_set->add_option("--seed", seed, "sampling seed")->required();
  local_set->add_option("--out", out_path, "point-set output path")->required();
  local_set->add_option("--trace", trace_path, "trace sidecar path (default <out>.trace.json)");
  local_set->add_option("--budget", budget, "scan budget");

  auto* cubes = construct->add_subcommand("cubes", "equal-sum affine cube structure");
  int cube_s = 1, cube_t = 1;
  bool guaranteed = false;
  cubes->add_option("--in", in_path, "point-set file")->required();
  cubes->add_option("--s", cube_s, "pair count")->required();
  cubes->add_option("--t", cube_t, "cube order")->required();
  cubes->add_flag("--guaranteed", guaranteed, "require the size hypothesis and certified success");
  cubes->add_option("--out", out_path, "output path");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  oracle->require_subcommand(1);
  auto* oracle_g = oracle->add_subcommand("g", "minimum |A-A| on an integer grid");
  int og_n = 0, og_k = 0;
  long long og_ell = 0, og_m = 0;
  oracle_g->add_option("--n", og_n, "set size")->required();
  oracle_g->add_option("--k", og_k, "local subset size")->required();
  oracle_g->add_option("--ell", og_ell, "required differences per k-subset")->required();
  oracle_g->add_option("--M", og_m, "grid bound")->required();
  oracle_g->add_option("--jobs", jobs, "worker threads");
  oracle_g->add_option("--budget", budget, "node budget");
  oracle_g->add_option("--out", out_path, "output path");

  // verify
  auto* verify = app.add_subcommand("verify", "run a named property suite");
  std::string lemma;
  int verify_k = 8, samples = 200;
  verify->add_option("--lemma", lemma, "suite name")->required();
  verify->add_option("--k", verify_k, "variable count for sampled collections");
  verify->add_option("--samples", samples, "number of sampled collections");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--out", out_path, "output path");

  // thresholds
  auto* thresholds = app.add_subcommand("thresholds", "threshold formulas for a given k");
  int thr_k = 0;
  thresholds->add_option("--k", thr_k, "subset size")->required();
  thresholds->add_option("--out", out_path, "output path");

  // figure-data
  auto* figure = app.add_subcommand("figure-data", "coefficient/exponent curves as CSV");
  int fig_k = 4;
  std::string fig_format = "csv";
  figure->add_option("--k", fig_k, "subset size")->required();
  figure->add_option("--format", fig_format, "csv or json");
  figure->add_option("--out", out_path, "output path");

  std::vector<const char*> argv;
  argv.push_back("diffset");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) {
      const Rat c = parse_rat(analyze_c, "--c");
      const Configuration cfg = configuration_from_json(nlohmann::json::parse(read_file(in_path)));
      nlohmann::json j;
      j["k"] = cfg.variable_count();
      j["size"] = cfg.size();
      j["dim"] = cfg.dim();
      j["rank"] = cfg.rank();
      j["valid"] = cfg.is_valid();
      j["ap_free"] = cfg.is_ap_free();
      j["c"] = rat_to_string(c);
      const auto heavy = cfg.heavy_parts(c, subset_cap);
      j["heavy_parts"] = heavy;
      const auto good = cfg.is_c_good(c, subset_cap);
      j["good"] = good.good;
      j["reason"] = good.reason;
      j["seed"] = seed;
      if (cfg.is_valid())
        j["d_of_C"] = generic_diff_count(cfg, seed);
      else
        j["d_of_C"] = nullptr;
      if (format == "text") {
        std::ostringstream text;
        text << "k=" << cfg.variable_count() << " dim=" << cfg.dim()
             << " valid=" << (cfg.is_valid() ? "yes" : "no")
             << " ap_free=" << (cfg.is_ap_free() ? "yes" : "no")
             << " heavy_parts=" << heavy.size() << " good=" << (good.good ? "yes" : "no") << "\n";
        emit(text.str(), out_path, out);
      } else {
        emit_json(j, out_path, out);
      }
      return 0;
    }

    if (enumerate->parsed()) {
      std::optional<int> inv;
      if (involving != 0) inv = involving;
      const auto eqs = enumerate_equalities(enum_k, inv, nondegenerate);
      nlohmann::json j;
      j["k"] = enum_k;
      j["count"] = eqs.size();
      auto& list = j["equalities"] = nlohmann::json::array();
      for (const auto& e : eqs) {
        const auto q = e.quadruple();
        list.push_back({q[0], q[1], q[2], q[3]});
      }
      emit_json(j, out_path, out);
      return 0;
    }

    if (behrend->parsed()) {
      const PointSet s = behrend_set(behrend_n);
      if (out_path.empty()) {
        nlohmann::json j;
        j["n"] = behrend_n;
        j["size"] = s.size();
        j["set"] = pointset_to_json(s);
        emit_json(j, "", out);
      } else {
        emit(pointset_to_text(s), out_path, out);
        nlohmann::json j;
        j["n"] = behrend_n;
        j["size"] = s.size();
        j["out"] = out_path;
        emit_json(j, "", out);
      }
      return 0;
    }

    if (local_set->parsed()) {
      const Rat c = parse_rat(ls_c, "--c");
      const Rat a = parse_rat(ls_a, "--a");
      const auto [set, trace] = random_local_set(ls_n, ls_k, c, a, seed, budget);
      emit(pointset_to_text(set), out_path, out);
      const std::string sidecar = trace_path.empty() ? out_path + ".trace.json" : trace_path;
      emit(construction_trace_to_json(trace).dump(2) + "\n", sidecar, out);
      nlohmann::json j;
      j["n"] = ls_n;
      j["out"] = out_path;
      j["trace"] = sidecar;
      j["deleted_count"] = trace.deleted_count;
      j["seed"] = seed;
      emit_json(j, "", out);
      return 0;
    }

    if (cubes->parsed()) {
      std::size_t dropped = 0;
      const PointSet a = pointset_from_text(read_file(in_path), &dropped);
      if (dropped > 0)
        err << "warning: dropped " << dropped << " duplicate value(s) from " << in_path << "\n";
      const CubeStructure cube = find_equal_sum_cubes(
          a, cube_s, cube_t, guaranteed ? CubeMode::guaranteed : CubeMode::opportunistic);
      const PointSet points = cube_point_set(cube);
      nlohmann::json j = cube_to_json(cube);
      j["points"] = pointset_to_json(points);
      j["distinct_differences"] = distinct_differences(points);
      j["hypothesis_holds"] = cube_hypothesis_holds(a, cube_s, cube_t);
      emit_json(j, out_path, out);
      return 0;
    }

    if (oracle_g->parsed()) {
      const OracleResult r = brute_force_g(og_n, og_k, og_ell, og_m, budget, jobs);
      emit_json(oracle_result_to_json(og_n, og_k, og_ell, r), out_path, out);
      return 0;
    }

    if (verify->parsed()) {
      const LemmaReport report = run_lemma_suite(lemma, verify_k, samples, seed, jobs);
      nlohmann::json j;
      j["lemma"] = lemma;
      j["k"] = verify_k;
      j["samples"] = samples;
      j["seed"] = seed;
      j["checks"] = lemma_report_to_json(report);
      j["all_passed"] = report.all_passed();
      emit_json(j, out_path, out);
      return report.all_passed() ? 0 : 1;
    }

    if (thresholds->parsed()) {
      emit_json(threshold_rows_to_json(thr_k, threshold_report(thr_k)), out_path, out);
      return 0;
    }

    if (figure->parsed()) {
      const auto points = figure_curve_data(fig_k);
      if (fig_format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& p : points) {
          nlohmann::json row;
          row["coeff"] = rat_to_string(p.coeff);
          row["exponent"] = rat_to_string(p.exponent);
          row["direction"] = p.direction;
          row["source"] = p.source;
          j.push_back(std::move(row));
        }
        emit_json(j, out_path, out);
      } else {
        emit(figure_curve_csv(points), out_path, out);
      }
      return 0;
    }
  } catch (const error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "ParseError: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace diffset
