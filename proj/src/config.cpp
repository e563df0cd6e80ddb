#include "qg/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qg/common.hpp"

namespace qg {

namespace {

using nlohmann::json;

void apply_fields(const json& obj, ExperimentConfig& config) {
  if (obj.contains("seed")) config.seed = obj.at("seed").get<std::uint64_t>();
  if (obj.contains("out")) config.out_dir = obj.at("out").get<std::string>();
  if (obj.contains("threads")) config.threads = obj.at("threads").get<int>();
  if (obj.contains("csv")) config.write_csv = obj.at("csv").get<bool>();
  if (obj.contains("svg")) config.write_svg = obj.at("svg").get<bool>();

  if (obj.contains("alpha")) config.alpha = obj.at("alpha").get<double>();
  if (obj.contains("gammas")) config.gammas = obj.at("gammas").get<std::vector<double>>();
  if (obj.contains("maxfreq")) config.maxfreq = obj.at("maxfreq").get<long>();
  if (obj.contains("kmax")) config.kmax = obj.at("kmax").get<int>();
  if (obj.contains("N")) config.n_grid = obj.at("N").get<std::vector<long>>();
  if (obj.contains("trials")) config.trials = obj.at("trials").get<long>();
  if (obj.contains("qg_trials")) config.qg_trials = obj.at("qg_trials").get<long>();
  if (obj.contains("sample_sets")) config.sample_sets = obj.at("sample_sets").get<long>();
  if (obj.contains("subset_budget")) config.subset_budget = obj.at("subset_budget").get<double>();
  if (obj.contains("quad_rel_tol")) config.quad_rel_tol = obj.at("quad_rel_tol").get<double>();
  if (obj.contains("quad_abs_tol")) config.quad_abs_tol = obj.at("quad_abs_tol").get<double>();

  if (obj.contains("K_grid")) config.k_grid = obj.at("K_grid").get<std::vector<double>>();
  if (obj.contains("p_grid")) config.p_grid = obj.at("p_grid").get<std::vector<double>>();
  if (obj.contains("kappa_grid"))
    config.kappa_grid = obj.at("kappa_grid").get<std::vector<double>>();

  if (obj.contains("gram_file")) config.gram_file = obj.at("gram_file").get<std::string>();
  if (obj.contains("inner")) config.inner = obj.at("inner").get<std::string>();
  if (obj.contains("force_exact")) config.force_exact = obj.at("force_exact").get<bool>();
}

ExperimentConfig from_json(const json& doc, const std::string& experiment) {
  require(doc.is_object(), "config document must be a JSON object");
  ExperimentConfig config;
  config.experiment = experiment;
  apply_fields(doc, config);
  if (!experiment.empty() && doc.contains(experiment)) {
    require(doc.at(experiment).is_object(), "per-experiment config section must be an object");
    apply_fields(doc.at(experiment), config);
  }
  return config;
}

} // namespace

std::uint64_t ExperimentConfig::required_seed() const {
  if (!seed.has_value()) {
    throw validation_error("a seed is required (--seed or \"seed\" in the config file)");
  }
  return *seed;
}

ExperimentConfig load_config(const std::string& path, const std::string& experiment) {
  std::ifstream in(path);
  require(in.good(), "cannot open config file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& err) {
    throw validation_error(std::string("config parse error: ") + err.what());
  }
  return from_json(doc, experiment);
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& experiment) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw validation_error(std::string("config parse error: ") + err.what());
  }
  return from_json(doc, experiment);
}

} // namespace qg
