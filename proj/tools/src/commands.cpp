/*
 Copyright 2026 The mmac Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "mmac_cli/commands.hpp"

#include "mmac/config.hpp"
#include "mmac/errors.hpp"
#include "mmac/hinf.hpp"
#include "mmac/io.hpp"
#include "mmac/minimax_cert.hpp"
#include "mmac/regret.hpp"
#include "mmac/simulate.hpp"
#include "mmac_cli/manifest.hpp"
#include "mmac_cli/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>

namespace mmac::cli {

namespace {

using nlohmann::json;

std::string fixed(double v, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

FeasibilityCriterion parse_criterion(const std::string& name) {
  if (name == "certified") return FeasibilityCriterion::kCertified;
  if (name == "recursion") return FeasibilityCriterion::kRecursionConverges;
  throw ValidationError("unknown criterion '" + name + "' (expected certified or recursion)");
}

ModelIndex checked_model(const ModelSet& ms, int index) {
  const ModelIndex i(index);
  if (!ms.contains(i)) {
    throw ValidationError("model index " + std::to_string(index) + " outside 1.." + std::to_string(ms.size()));
  }
  return i;
}

std::vector<double> certified_levels(const ModelSet& ms, const Penalties& p) {
  std::vector<double> out;
  for (const auto& m : ms.models()) out.push_back(optimal_attenuation(m.A, m.B, p));
  return out;
}

// Where the switching controller's certificate comes from, in priority order:
// an explicit file, the config's gamma, then a search for the smallest level.
struct CertifiedLevel {
  MinimaxCertificate certificate;
  std::vector<double> gamma_stars;
  std::string source;
};

std::optional<CertifiedLevel> certificate_for(const ExperimentConfig& cfg,
                                              const std::optional<std::filesystem::path>& file,
                                              std::optional<double> gamma, std::ostream& out) {
  const auto& ms = cfg.model_set;
  const auto& p = cfg.penalties;
  if (file) {
    auto cert = io::load_certificate(*file);
    const auto rep = verify_certificate(ms, p, cert);
    if (!rep.feasible) {
      out << "supplied certificate does not verify (worst violation " << rep.worst_violation << ")\n";
      return std::nullopt;
    }
    return CertifiedLevel{std::move(cert), certified_levels(ms, p), "file"};
  }
  if (gamma) {
    auto stars = certified_levels(ms, p);
    const double worst = *std::max_element(stars.begin(), stars.end());
    if (*gamma < worst) {
      out << "infeasible: gamma " << *gamma << " is below max gamma* = " << fixed(worst) << "\n";
      return std::nullopt;
    }
    auto cert = synthesize_certificate(ms, p, *gamma);
    if (!cert) {
      out << "infeasible: " << cert.reason() << "\n";
      return std::nullopt;
    }
    return CertifiedLevel{std::move(cert).value(), std::move(stars), "gamma"};
  }
  try {
    auto res = minimal_feasible_gamma(ms, p);
    return CertifiedLevel{std::move(res.certificate), std::move(res.gamma_stars), "search"};
  } catch (const BracketError& e) {
    out << "infeasible: " << e.what() << "\n";
    return std::nullopt;
  }
}

DisturbanceRequest scenario_request(const std::string& scenario, const ExperimentConfig& cfg) {
  DisturbanceRequest req;
  using Kind = DisturbanceRequest::Kind;
  if (scenario.empty()) return cfg.disturbance;
  if (scenario == "fig1") {
    req.kind = Kind::kHinfWorstCase;
  } else if (scenario == "fig2") {
    req.kind = Kind::kPeakSinusoid;
  } else if (scenario == "fig3") {
    req.kind = Kind::kConfusing;
    req.target = ModelIndex(3);
  } else {
    throw ValidationError("unknown scenario '" + scenario + "' (expected fig1, fig2 or fig3)");
  }
  return req;
}

// Confusing needs a target different from the plant; when sweeping the plant
// over the whole set, the smallest other index stands in for a clash.
DisturbanceRequest retarget(DisturbanceRequest req, ModelIndex plant) {
  if (req.kind == DisturbanceRequest::Kind::kConfusing && req.target == plant) {
    req.target = ModelIndex(plant.one_based() == 1 ? 2 : 1);
  }
  return req;
}

HinfSolution comparator_for(const ExperimentConfig& cfg, ModelIndex model, double gamma) {
  const auto& m = cfg.model_set[model];
  auto sol = solve_riccati(m.A, m.B, cfg.penalties, gamma);
  if (!sol) throw BracketError("comparator for model " + to_string(model) + " infeasible: " + sol.reason());
  return std::move(sol).value();
}

bool strictly_increasing(const std::vector<double>& v) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (!(v[k] > v[k - 1])) return false;
  }
  return true;
}

}  // namespace

std::filesystem::path resolve_output_dir(const std::optional<std::filesystem::path>& flag,
                                         const std::filesystem::path& leaf) {
  if (flag) return *flag;
  const char* env = std::getenv(kOutputDirEnv);
  const std::filesystem::path base = env && *env ? env : "mmac_out";
  return leaf.empty() ? base : base / leaf;
}

int synth_hinf(const SynthHinfArgs& args, std::ostream& out) {
  const auto cfg = load_config(args.config);
  const auto& ms = cfg.model_set;
  const auto criterion = parse_criterion(args.criterion);
  std::vector<ModelIndex> models;
  if (args.model) {
    models.push_back(checked_model(ms, *args.model));
  } else {
    for (std::size_t i = 0; i < ms.size(); ++i) models.push_back(ModelIndex::from_offset(i));
  }

  RunManifest manifest(args.config, resolve_output_dir(args.out));
  RiccatiOptions ropts;
  ropts.criterion = criterion;
  int code = kOk;

  if (args.gamma) {
    out << "model  gamma  status\n";
    for (auto i : models) {
      const auto sol = solve_riccati(ms[i].A, ms[i].B, cfg.penalties, *args.gamma, ropts);
      if (!sol) {
        out << to_string(i) << "  " << *args.gamma << "  infeasible: " << sol.reason() << "\n";
        code = kInfeasible;
        continue;
      }
      out << to_string(i) << "  " << *args.gamma << "  feasible\n";
      manifest.write("hinf_" + to_string(i) + ".json", "hinf_solution", io::hinf_solution_json(sol.value(), i));
    }
  } else {
    AttenuationOptions certified, recursion;
    recursion.riccati.criterion = FeasibilityCriterion::kRecursionConverges;
    std::string table = "model,gamma_star_certified,gamma_star_recursion\n";
    out << "model  gamma*(certified)  gamma*(recursion)\n";
    for (auto i : models) {
      const double gc = optimal_attenuation(ms[i].A, ms[i].B, cfg.penalties, certified);
      const double gr = optimal_attenuation(ms[i].A, ms[i].B, cfg.penalties, recursion);
      out << to_string(i) << "  " << fixed(gc) << "  " << fixed(gr) << "\n";
      table += to_string(i) + ',' + io::format_number(gc) + ',' + io::format_number(gr) + '\n';
      const double level = criterion == FeasibilityCriterion::kCertified ? gc : gr;
      const auto sol = solve_riccati(ms[i].A, ms[i].B, cfg.penalties, level, ropts);
      manifest.write("hinf_" + to_string(i) + ".json", "hinf_solution", io::hinf_solution_json(sol.value(), i));
    }
    manifest.write("gamma_star.csv", "gamma_star_table", table);
  }
  manifest.save();
  return code;
}

int synth_minimax(const SynthMinimaxArgs& args, std::ostream& out) {
  const auto cfg = load_config(args.config);
  const auto gamma = args.gamma ? args.gamma : cfg.gamma;
  RunManifest manifest(args.config, resolve_output_dir(args.out));
  manifest.begin_stage("synthesis");
  auto level = certificate_for(cfg, std::nullopt, gamma, out);
  manifest.end_stage();
  if (!level) return kInfeasible;

  const auto rep = verify_certificate(cfg.model_set, cfg.penalties, level->certificate);
  if (!rep.feasible) {
    out << "synthesized certificate failed verification (worst violation " << rep.worst_violation << ")\n";
    return kInfeasible;
  }
  const auto gaps = suboptimality_gaps(level->certificate.gamma_bar, level->gamma_stars);
  out << "gamma_bar " << fixed(level->certificate.gamma_bar) << "\n";
  out << "model  gamma*  gap\n";
  for (std::size_t i = 0; i < gaps.per_model.size(); ++i) {
    out << i + 1 << "  " << fixed(level->gamma_stars[i]) << "  " << fixed(gaps.per_model[i]) << "\n";
  }
  out << "minimal gap " << fixed(gaps.minimal) << ", maximal gap " << fixed(gaps.maximal) << "\n";
  out << "verification worst eigenvalue " << rep.worst_violation << "\n";
  manifest.write("certificate.json", "certificate", io::certificate_json(level->certificate));
  manifest.write("gaps.csv", "gaps", io::gaps_csv(gaps, level->gamma_stars));
  manifest.save();
  return kOk;
}

int verify(const VerifyArgs& args, std::ostream& out) {
  const auto cert = io::load_certificate(args.certificate);
  const auto cfg = load_config(args.config);
  const auto& ms = cfg.model_set;
  if (cert.size() != ms.size() || cert.gains.front().rows() != ms.input_dim() ||
      cert.gains.front().cols() != ms.state_dim()) {
    throw ValidationError("certificate dimensions do not match the config's model set");
  }
  VerificationReport rep;
  try {
    rep = verify_certificate(ms, cfg.penalties, cert, args.tolerance);
  } catch (const PreconditionError& e) {
    out << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  }
  const auto& [i, j, l] = rep.worst_triple;
  out << (rep.feasible ? "feasible" : "infeasible") << "\n";
  out << "gamma_bar " << fixed(cert.gamma_bar) << "\n";
  out << "worst triple (i, j, l) = (" << to_string(i) << ", " << to_string(j) << ", " << to_string(l) << ")\n";
  out << "worst eigenvalue " << rep.worst_violation << " (tolerance " << args.tolerance << ")\n";
  if (!rep.note.empty()) out << rep.note << "\n";
  return rep.feasible ? kOk : kInfeasible;
}

int run(const RunArgs& args, std::ostream& out) {
  const auto cfg = load_config(args.config);
  const auto request = scenario_request(args.scenario, cfg);
  const std::string label = args.scenario.empty() ? "run" : args.scenario;
  RunManifest manifest(args.config, resolve_output_dir(args.out, label));

  manifest.begin_stage("certificate");
  auto level = certificate_for(cfg, args.certificate, cfg.gamma, out);
  if (!level) return kInfeasible;
  const auto& cert = level->certificate;
  const double gamma_bar = cert.gamma_bar;

  manifest.begin_stage("rollout");
  const auto setup = RolloutSetup::from(cfg);
  const auto comparator = comparator_for(cfg, cfg.true_model, gamma_bar);
  const auto spec = resolve_disturbance(request, cfg.model_set, cfg.true_model, cfg.penalties, comparator);
  const auto pair = run_paired(setup, cert, comparator.K, spec);
  const auto report = make_regret_report(pair.minimax, pair.hinf, cfg.penalties, cfg.true_model, spec.kind_name());

  // Regret of the same strategy with every model in turn as the plant.
  std::vector<RegretReport> per_model;
  for (std::size_t f = 0; f < cfg.model_set.size(); ++f) {
    const auto plant = ModelIndex::from_offset(f);
    if (plant == cfg.true_model) {
      per_model.push_back(report);
      continue;
    }
    auto s = setup;
    s.true_model = plant;
    const auto comp = comparator_for(cfg, plant, gamma_bar);
    const auto sp = resolve_disturbance(retarget(request, plant), cfg.model_set, plant, cfg.penalties, comp);
    const auto pr = run_paired(s, cert, comp.K, sp);
    per_model.push_back(make_regret_report(pr.minimax, pr.hinf, cfg.penalties, plant, sp.kind_name()));
  }
  const auto total = total_regret(per_model);

  manifest.begin_stage("metrics");
  const auto gaps = suboptimality_gaps(gamma_bar, level->gamma_stars);
  const auto sub = sublinearity_diagnostic(report.R, cfg.sublinearity);
  const double bound = value_bound(cert, cfg.x0);
  const double cost = accumulated_cost(pair.minimax, cfg.penalties, gamma_bar);
  const double d_peak = *std::max_element(report.d.begin(), report.d.end());
  const bool true_model_selected =
      std::any_of(pair.minimax.selected->begin() + (pair.minimax.selected->empty() ? 0 : 1),
                  pair.minimax.selected->end(), [&](ModelIndex l) { return l == cfg.true_model; });

  json summary;
  summary["scenario"] = label;
  summary["disturbance"] = spec.kind_name();
  summary["certificate_source"] = level->source;
  summary["gamma_bar"] = gamma_bar;
  summary["value_bound"] = bound;
  summary["minimax_cost"] = cost;
  summary["hinf_cost"] = accumulated_cost(pair.hinf, cfg.penalties, gamma_bar);
  summary["cost_within_bound"] = cost <= bound + 1e-6;
  summary["regret_final"] = report.R.back();
  summary["regret_strictly_increasing"] = strictly_increasing(report.R);
  summary["d_final_over_peak"] = d_peak > 0.0 ? report.d.back() / d_peak : 0.0;
  summary["sublinearity"] = sub.verdict();
  summary["true_model_selected_after_start"] = true_model_selected;
  summary["minimal_gap"] = gaps.minimal;
  summary["maximal_gap"] = gaps.maximal;
  if (const auto* s = std::get_if<disturbance::Sinusoid>(&spec.strategy)) summary["omega"] = s->omega;

  manifest.begin_stage("write");
  manifest.write("minimax_trajectory.csv", "trajectory", io::trajectory_csv(pair.minimax));
  manifest.write("hinf_trajectory.csv", "trajectory", io::trajectory_csv(pair.hinf));
  manifest.write("residuals.csv", "residuals", io::residuals_csv(pair.minimax));
  manifest.write("disturbance.csv", "disturbance", io::disturbance_csv(pair.minimax.w));
  manifest.write("regret.csv", "regret", io::regret_csv(report));
  manifest.write("total_regret.csv", "total_regret", io::total_regret_csv(per_model, total));
  manifest.write("gaps.csv", "gaps", io::gaps_csv(gaps, level->gamma_stars));
  manifest.write("certificate.json", "certificate", io::certificate_json(cert));
  if (request.kind == DisturbanceRequest::Kind::kPeakSinusoid || request.kind == DisturbanceRequest::Kind::kSinusoid) {
    const auto& plant = cfg.model_set[cfg.true_model];
    manifest.write("scan.csv", "frequency_scan",
                   io::scan_csv(closed_loop_scan(plant.A, plant.B, comparator.K, cfg.penalties)));
  }
  manifest.write("summary.json", "summary", summary.dump(2) + "\n");
  if (args.svg) {
    manifest.write("regret.svg", "plot", svg_line_chart("model-based regret", {{"R", report.R}}));
    manifest.write("stage_cost.svg", "plot",
                   svg_line_chart("stage cost", {{"minimax", pair.minimax.step_cost}, {"hinf", pair.hinf.step_cost}}));
    std::vector<Series> alpha(cfg.model_set.size());
    for (std::size_t f = 0; f < alpha.size(); ++f) {
      alpha[f].label = "alpha_" + std::to_string(f + 1);
      for (const auto& a : *pair.minimax.alpha) alpha[f].y.push_back(a(static_cast<Eigen::Index>(f)));
    }
    manifest.write("residuals.svg", "plot", svg_line_chart("residuals", alpha));
  }
  manifest.end_stage();
  manifest.save();

  out << "scenario " << label << " (" << spec.kind_name() << "), gamma_bar " << fixed(gamma_bar) << "\n";
  out << "accumulated cost " << fixed(cost, 4) << " vs bound " << fixed(bound, 4) << "\n";
  out << "regret R(T) " << fixed(report.R.back(), 4) << ", sublinearity " << sub.verdict() << "\n";
  out << "wrote " << manifest.artifacts().size() << " artifacts to " << manifest.output_dir().string() << "\n";
  return kOk;
}

int scan(const ScanArgs& args, std::ostream& out) {
  const auto cfg = load_config(args.config);
  const auto model = args.model ? checked_model(cfg.model_set, *args.model) : cfg.true_model;
  const auto& m = cfg.model_set[model];
  if (args.grid < 2) throw ValidationError("grid must have at least two points");
  double gamma = 0.0;
  if (args.gamma) {
    gamma = *args.gamma;
  } else if (cfg.gamma) {
    gamma = *cfg.gamma;
  } else {
    gamma = optimal_attenuation(m.A, m.B, cfg.penalties);
  }
  const auto sol = solve_riccati(m.A, m.B, cfg.penalties, gamma);
  if (!sol) {
    out << "infeasible: " << sol.reason() << "\n";
    return kInfeasible;
  }
  const auto result = closed_loop_scan(m.A, m.B, sol->K, cfg.penalties, args.grid);
  RunManifest manifest(args.config, resolve_output_dir(args.out, "scan"));
  manifest.write("scan.csv", "frequency_scan", io::scan_csv(result));
  manifest.save();
  out << "model " << to_string(model) << " at gamma " << fixed(gamma) << ": peak " << fixed(result.peak_norm)
      << " at omega " << fixed(result.peak_omega) << "\n";
  return kOk;
}

int main(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimax adaptive and H-infinity control experiments", "mmac"};
  app.require_subcommand(1);
  app.set_version_flag("--version", MMAC_VERSION);

  SynthHinfArgs hinf_args;
  auto* hinf_cmd = app.add_subcommand("synth-hinf", "Per-model H-infinity synthesis and gamma* table");
  hinf_cmd->add_option("config", hinf_args.config, "Experiment config (JSON)")->required();
  hinf_cmd->add_option("--model", hinf_args.model, "Restrict to one model (1-based)");
  hinf_cmd->add_option("--gamma", hinf_args.gamma, "Solve at this level instead of bisecting");
  hinf_cmd->add_option("--criterion", hinf_args.criterion, "certified or recursion")
      ->check(CLI::IsMember({"certified", "recursion"}));
  hinf_cmd->add_option("--out", hinf_args.out, "Output directory");

  SynthMinimaxArgs mm_args;
  auto* mm_cmd = app.add_subcommand("synth-minimax", "Synthesize and verify a switching-controller certificate");
  mm_cmd->add_option("config", mm_args.config, "Experiment config (JSON)")->required();
  mm_cmd->add_option("--gamma", mm_args.gamma, "Synthesize at this level instead of searching");
  mm_cmd->add_option("--out", mm_args.out, "Output directory");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a config");
  verify_cmd->add_option("certificate", verify_args.certificate, "Certificate (JSON)")->required();
  verify_cmd->add_option("config", verify_args.config, "Experiment config (JSON)")->required();
  verify_cmd->add_option("--tol", verify_args.tolerance, "Eigenvalue tolerance");

  RunArgs repro_args;
  auto* repro_cmd = app.add_subcommand("reproduce", "Run one of the reference scenarios and export data");
  repro_cmd->add_option("config", repro_args.config, "Experiment config (JSON)")->required();
  repro_cmd->add_option("--scenario", repro_args.scenario, "fig1, fig2 or fig3")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
  repro_cmd->add_option("--certificate", repro_args.certificate, "Use this certificate");
  repro_cmd->add_option("--out", repro_args.out, "Output directory");
  repro_cmd->add_flag("--svg", repro_args.svg, "Also write SVG line charts");

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Run the config's own disturbance and export data");
  run_cmd->add_option("config", run_args.config, "Experiment config (JSON)")->required();
  run_cmd->add_option("--certificate", run_args.certificate, "Use this certificate");
  run_cmd->add_option("--out", run_args.out, "Output directory");
  run_cmd->add_flag("--svg", run_args.svg, "Also write SVG line charts");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Frequency scan of one model's H-infinity closed loop");
  scan_cmd->add_option("config", scan_args.config, "Experiment config (JSON)")->required();
  scan_cmd->add_option("--model", scan_args.model, "Model (1-based), default the true model");
  scan_cmd->add_option("--gamma", scan_args.gamma, "Attenuation level");
  scan_cmd->add_option("--grid", scan_args.grid, "Grid points over [0, pi]");
  scan_cmd->add_option("--out", scan_args.out, "Output directory");

  try {
    std::vector<std::string> rev(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*hinf_cmd) return synth_hinf(hinf_args, out);
    if (*mm_cmd) return synth_minimax(mm_args, out);
    if (*verify_cmd) return verify(verify_args, out);
    if (*repro_cmd) return run(repro_args, out);
    if (*run_cmd) return run(run_args, out);
    if (*scan_cmd) return scan(scan_args, out);
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kDivergence;
  } catch (const BracketError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kInfeasible;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "file error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace mmac::cli
