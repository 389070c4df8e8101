// Command-line front end: simulate / detect / fit / tailprob / spectral-density.
//
// Exit codes: 0 success, 2 invalid configuration, 3 I/O failure,
// 4 parse failure, 5 degenerate data, 6 fit refused (no evidence of
// asymptotic independence).

#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hda/errors.hpp"
#include "hda/examples.hpp"
#include "hda/fit.hpp"
#include "hda/sample.hpp"
#include "hda/serialize.hpp"
#include "hda/spectral.hpp"
#include "hda/tailprob.hpp"

namespace {

using nlohmann::json;

int exit_code(hda::ErrorCode c) {
  switch (c) {
    case hda::ErrorCode::InvalidConfig: return 2;
    case hda::ErrorCode::IoFailure: return 3;
    case hda::ErrorCode::ParseFailure: return 4;
    case hda::ErrorCode::DegenerateData: return 5;
    case hda::ErrorCode::NoAsymptoticIndependence: return 6;
  }
  return 1;
}

void emit(const std::string& output, const std::string& text) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  hda::atomic_write_text(output, text);
}

hda::ExampleId example_from_name(const std::string& name) {
  if (name == "ex21") return hda::ExampleId::Ex21;
  if (name == "ex22") return hda::ExampleId::Ex22;
  if (name == "ex31") return hda::ExampleId::Ex31;
  if (name == "ex32") return hda::ExampleId::Ex32;
  throw hda::Error(hda::ErrorCode::InvalidConfig, "unknown example: " + name);
}

int default_k(Eigen::Index n) {
  return static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
}

int resolve_k(std::optional<int> k, Eigen::Index n) {
  const int kk = k.value_or(default_k(n));
  if (kk < 8)
    throw hda::Error(hda::ErrorCode::InvalidConfig, "k must be at least 8");
  if (static_cast<Eigen::Index>(kk) > n)
    throw hda::Error(hda::ErrorCode::InvalidConfig, "k exceeds sample size");
  return kk;
}

struct Options {
  std::string input;
  std::string output;
  std::string sample_path;
  std::string queries_path;
  std::optional<int> k;
  double delta = 0.05;
  double theta = 0.35;
  double joint_threshold = 0.05;
  std::optional<double> bandwidth;
  int gridsize = 512;
  std::uint64_t seed = 0;
  Eigen::Index n = 0;
  std::string example;
  std::string method = "auto";
  std::string mode = "joint";
  std::optional<double> u;
  std::optional<double> v;
  int model_index = 0;
};

int cmd_simulate(const Options& o) {
  hda::BivariateSample s =
      hda::simulate(example_from_name(o.example), o.n, hda::rng::Seed{o.seed});
  std::ostringstream out;
  hda::write_csv(s, out);
  emit(o.output, out.str());
  return 0;
}

json detection_report(const hda::BivariateSample& s, int k, const Options& o,
                      const hda::Category& cat, const hda::SpectralSample& det) {
  json j;
  j["category"] = hda::category_name(cat.kind);
  j["m0"] = cat.m0;
  j["m1"] = cat.m1;
  j["interior"] = cat.interior;
  j["k"] = k;
  j["n"] = s.n();
  j["delta"] = o.delta;
  j["theta"] = o.theta;
  j["density"] = hda::density_to_json(hda::kde(det, o.bandwidth, o.gridsize));
  return j;
}

int cmd_detect(const Options& o) {
  hda::BivariateSample s = hda::load_sample_file(o.input);
  const int k = resolve_k(o.k, s.n());
  hda::SpectralSample det =
      hda::detection_spectral(hda::antiranks(s, hda::RankReference::MaxRef), k);
  hda::Category cat = hda::classify(det, o.delta, o.theta);
  emit(o.output, detection_report(s, k, o, cat, det).dump(2) + "\n");
  return 0;
}

int cmd_fit(const Options& o) {
  hda::BivariateSample loaded = hda::load_sample_file(o.input);
  const int k = resolve_k(o.k, loaded.n());
  hda::SpectralSample det =
      hda::detection_spectral(hda::antiranks(loaded, hda::RankReference::MaxRef), k);
  hda::Category cat = hda::classify(det, o.delta, o.theta);

  json j;
  j["category"] = hda::category_name(cat.kind);
  j["m0"] = cat.m0;
  j["m1"] = cat.m1;
  j["interior"] = cat.interior;
  j["k"] = k;
  j["n"] = loaded.n();
  j["delta"] = o.delta;
  j["theta"] = o.theta;
  j["swapped"] = false;
  auto& models = j["models"] = json::array();

  switch (cat.kind) {
    case hda::CategoryKind::BothAxes: {
      models.push_back(hda::model_to_json(hda::fit_standard(loaded, k)));
      break;
    }
    case hda::CategoryKind::ZeroSecondMarginal:
    case hda::CategoryKind::ZeroFirstMarginal: {
      const bool swapped = cat.kind == hda::CategoryKind::ZeroFirstMarginal;
      hda::BivariateSample s = swapped ? hda::swap_components(loaded) : loaded;
      j["swapped"] = swapped;
      j["joint_threshold"] = o.joint_threshold;
      hda::NonstandardFit fit = hda::fit_nonstandard(s, k, o.joint_threshold);
      // threshold rule standing in for "zero joint mass"; flagged as heuristic
      j["sqcap_joint_mass"] = fit.sqcap_joint_mass;
      j["joint_mass_rule"] = "heuristic";
      models.push_back(hda::model_to_json(fit.sqcap));
      if (fit.e0) models.push_back(hda::model_to_json(*fit.e0));
      break;
    }
    case hda::CategoryKind::NoAsymptoticIndependence:
      throw hda::Error(hda::ErrorCode::NoAsymptoticIndependence,
                       "no evidence of asymptotic independence; fit refused");
  }
  emit(o.output, j.dump(2) + "\n");
  return 0;
}

std::vector<json> models_in(const json& j) {
  std::vector<json> out;
  if (j.contains("models")) {
    for (const auto& m : j.at("models")) out.push_back(m);
  } else {
    out.push_back(j);
  }
  if (out.empty())
    throw hda::Error(hda::ErrorCode::ParseFailure, "no models in input JSON");
  return out;
}

int cmd_tailprob(const Options& o) {
  const json in = hda::read_json(o.input);
  std::vector<hda::HdaModel> models;
  for (const auto& mj : models_in(in)) models.push_back(hda::model_from_json(mj));

  std::vector<std::pair<double, double>> queries;
  if (!o.queries_path.empty()) {
    hda::BivariateSample q = hda::load_sample_file(o.queries_path);
    for (Eigen::Index i = 0; i < q.n(); ++i) queries.emplace_back(q.x1[i], q.x2[i]);
  }
  if (o.u && !o.v)
    throw hda::Error(hda::ErrorCode::InvalidConfig, "--u requires --v");
  if (o.v) queries.emplace_back(o.u.value_or(0.0), *o.v);
  if (queries.empty())
    throw hda::Error(hda::ErrorCode::InvalidConfig,
                     "no queries: pass --queries or --u/--v");

  const bool marginal = o.mode == "marginal2";
  hda::MethodChoice choice = hda::MethodChoice::Auto;
  if (o.method == "nonparametric") choice = hda::MethodChoice::Nonparametric;
  else if (o.method == "semiparametric") choice = hda::MethodChoice::Semiparametric;
  else if (o.method != "auto")
    throw hda::Error(hda::ErrorCode::InvalidConfig, "unknown method: " + o.method);

  std::optional<hda::BivariateSample> sample;
  const bool needs_sample = !marginal && o.method != "semiparametric";
  if (!o.sample_path.empty()) sample = hda::load_sample_file(o.sample_path);
  if (needs_sample && !sample)
    throw hda::Error(hda::ErrorCode::InvalidConfig,
                     "--sample is required for joint queries unless "
                     "--method semiparametric");

  json out = json::array();
  for (const auto& [u, v] : queries) {
    for (const hda::HdaModel& m : models) {
      if (marginal && m.cone != hda::Cone::NonStandardSqcap) continue;
      hda::TailEstimate est;
      if (marginal) {
        est = hda::marginal2_tail(m, v);
      } else if (sample) {
        est = hda::joint_tail(m, *sample, hda::TailQuery{u, v}, choice);
      } else {
        // no data on hand: semiparametric evaluation against the model only
        hda::BivariateSample dummy;
        dummy.x1 = Eigen::ArrayXd::Zero(m.n);
        dummy.x2 = Eigen::ArrayXd::Zero(m.n);
        est = hda::joint_tail(m, dummy, hda::TailQuery{u, v},
                              hda::MethodChoice::Semiparametric);
      }
      json e = hda::estimate_to_json(est);
      e["model_cone"] = hda::cone_name(m.cone);
      e["u"] = u;
      e["v"] = v;
      e["mode"] = marginal ? "marginal2" : "joint";
      out.push_back(e);
    }
  }
  emit(o.output, out.dump(2) + "\n");
  return 0;
}

int cmd_spectral_density(const Options& o) {
  const json in = hda::read_json(o.input);
  const auto models = models_in(in);
  if (o.model_index < 0 || o.model_index >= static_cast<int>(models.size()))
    throw hda::Error(hda::ErrorCode::InvalidConfig, "model index out of range");
  hda::HdaModel m = hda::model_from_json(models[o.model_index]);
  json j = hda::density_to_json(hda::kde(m.spectral, o.bandwidth, o.gridsize));
  j["cone"] = hda::cone_name(m.cone);
  j["k"] = m.k;
  emit(o.output, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Detection and estimation of hidden joint-tail structure in bivariate "
      "samples with asymptotic independence."};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 ok, 2 invalid configuration, 3 I/O failure, 4 parse "
      "failure,\n5 degenerate data, 6 fit refused (no asymptotic "
      "independence).");

  Options o;
  double bandwidth_arg = 0.0;
  int k_arg = 0;
  double u_arg = 0.0;
  double v_arg = 0.0;

  auto add_common = [&](CLI::App* c, bool with_k) {
    c->add_option("-o,--output", o.output, "output path ('-' or empty: stdout)");
    if (with_k) {
      c->add_option("-k,--k", k_arg, "number of upper order statistics (default floor(sqrt(n)))")
          ->check(CLI::PositiveNumber);
    }
  };

  auto* sim = app.add_subcommand("simulate", "write a CSV sample from a built-in example");
  sim->add_option("--example", o.example, "one of ex21, ex22, ex31, ex32")->required();
  sim->add_option("--n", o.n, "sample size")->required()->check(CLI::PositiveNumber);
  sim->add_option("--seed", o.seed, "64-bit seed (default 0)");
  add_common(sim, false);

  auto* det = app.add_subcommand("detect", "classify asymptotic-independence structure");
  det->add_option("-i,--input", o.input, "two-column CSV sample")->required();
  det->add_option("--delta", o.delta, "boundary width (default 0.05)");
  det->add_option("--theta", o.theta, "boundary-mass threshold (default 0.35)");
  det->add_option("--bandwidth", bandwidth_arg, "KDE bandwidth (default Silverman)");
  det->add_option("--gridsize", o.gridsize, "KDE grid size (default 512)");
  add_common(det, true);

  auto* fit = app.add_subcommand("fit", "classify, then fit the matching model(s)");
  fit->add_option("-i,--input", o.input, "two-column CSV sample")->required();
  fit->add_option("--delta", o.delta, "boundary width (default 0.05)");
  fit->add_option("--theta", o.theta, "boundary-mass threshold (default 0.35)");
  fit->add_option("--joint-threshold", o.joint_threshold,
                  "origin joint-mass threshold for the second-stage fit (default 0.05)");
  add_common(fit, true);

  auto* tail = app.add_subcommand("tailprob", "evaluate tail probabilities from a fit");
  tail->add_option("-i,--input", o.input, "model JSON (fit output)")->required();
  tail->add_option("--sample", o.sample_path, "CSV sample used for the fit");
  tail->add_option("--queries", o.queries_path, "CSV of u,v query thresholds");
  tail->add_option("--u", u_arg, "single query threshold for X1");
  tail->add_option("--v", v_arg, "single query threshold for X2");
  tail->add_option("--mode", o.mode, "joint (default) or marginal2");
  tail->add_option("--method", o.method, "auto (default), nonparametric, semiparametric");
  add_common(tail, false);

  auto* dens = app.add_subcommand("spectral-density", "KDE of a fitted spectral sample");
  dens->add_option("-i,--input", o.input, "model JSON (fit output)")->required();
  dens->add_option("--model", o.model_index, "model index within the fit output (default 0)");
  dens->add_option("--bandwidth", bandwidth_arg, "KDE bandwidth (default Silverman)");
  dens->add_option("--gridsize", o.gridsize, "KDE grid size (default 512)");
  add_common(dens, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (det->count("--bandwidth") || dens->count("--bandwidth"))
    o.bandwidth = bandwidth_arg;
  if (det->count("--k") || fit->count("--k")) o.k = k_arg;
  if (tail->count("--u")) o.u = u_arg;
  if (tail->count("--v")) o.v = v_arg;

  try {
    if (sim->parsed()) return cmd_simulate(o);
    if (det->parsed()) return cmd_detect(o);
    if (fit->parsed()) return cmd_fit(o);
    if (tail->parsed()) return cmd_tailprob(o);
    if (dens->parsed()) return cmd_spectral_density(o);
  } catch (const hda::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
