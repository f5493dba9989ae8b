#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcp1d/density.hpp"
#include "mcp1d/geometry.hpp"
#include "mcp1d/kernels.hpp"
#include "mcp1d/needles.hpp"
#include "mcp1d/profile.hpp"
#include "mcp1d/serde.hpp"

namespace {

using mcp1d::json;

struct CommonOpts {
  double K = 0.0;
  double N = 2.0;
  double D = 1.0;
  double tol_quad = 1e-10;
  double tol_inv = 1e-10;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 1;

  [[nodiscard]] mcp1d::QuadratureConfig quad() const {
    mcp1d::QuadratureConfig cfg;
    cfg.rel_tol = tol_quad;
    cfg.abs_tol = tol_quad / 100.0;
    return cfg;
  }
  [[nodiscard]] mcp1d::InversionConfig inv() const {
    mcp1d::InversionConfig cfg;
    cfg.tol = tol_inv;
    return cfg;
  }
  [[nodiscard]] mcp1d::CurvatureParams params() const {
    return mcp1d::CurvatureParams(K, N, D);
  }
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool json_only = false) {
  cmd->add_option("--K", opts.K, "curvature bound")->required();
  cmd->add_option("--N", opts.N, "dimension bound, > 1")->required();
  cmd->add_option("--D", opts.D, "diameter bound, > 0")->required();
  cmd->add_option("--tol-quad", opts.tol_quad, "relative quadrature tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol-inv", opts.tol_inv, "mass inversion tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", opts.out, "output file (stdout when omitted)");
  if (json_only) {
    opts.format = "json";
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json"}));
  } else {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  }
  cmd->add_option("--seed", opts.seed, "seed for randomized suites");
}

// Grid spec lo:hi:n expands to n log-spaced values, endpoints included.
std::vector<double> parse_log_range(const std::string& spec) {
  const auto first = spec.find(':');
  const auto second = spec.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::invalid_argument("log range must look like lo:hi:n");
  const double lo = std::stod(spec.substr(0, first));
  const double hi = std::stod(spec.substr(first + 1, second - first - 1));
  const long n = std::stol(spec.substr(second + 1));
  if (!(lo > 0.0) || !(hi > 0.0) || n < 1)
    throw std::invalid_argument("log range needs positive endpoints and n >= 1");
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(n));
  if (n == 1) {
    vals.push_back(lo);
    return vals;
  }
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (long i = 0; i < n; ++i)
    vals.push_back(std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                      static_cast<double>(n - 1)));
  return vals;
}

std::vector<double> resolve_grid(const std::string& log_spec,
                                 const std::vector<double>& list,
                                 const char* what) {
  if (!log_spec.empty() && !list.empty())
    throw std::invalid_argument(std::string(what) + ": give either a list or a log range");
  if (!log_spec.empty()) return parse_log_range(log_spec);
  if (!list.empty()) return list;
  throw std::invalid_argument(std::string(what) + ": a value grid is required");
}

void emit(const CommonOpts& opts, const std::string& content) {
  if (opts.out.empty()) {
    std::fwrite(content.data(), 1, content.size(), stdout);
  } else {
    mcp1d::write_text_file(opts.out, content);
  }
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

int run_profile(const CommonOpts& opts, const std::vector<double>& v_grid) {
  const mcp1d::CurvatureParams p = opts.params();
  const auto cfg = opts.quad();
  const auto inv = opts.inv();
  mcp1d::CsvWriter csv;
  csv.header({"K", "N", "D", "v", "a", "I", "I_asym", "ratio"});
  json rows = json::array();
  for (const double v : v_grid) {
    const mcp1d::ProfilePoint pt = mcp1d::isoperimetric_profile(p, v, cfg, inv);
    const double ratio = pt.I / pt.I_asym;
    csv.row({p.K, p.N, p.D, pt.v, pt.a, pt.I, pt.I_asym, ratio});
    rows.push_back({{"K", p.K},
                    {"N", p.N},
                    {"D", p.D},
                    {"v", pt.v},
                    {"a", pt.a},
                    {"I", pt.I},
                    {"I_asym", pt.I_asym},
                    {"ratio", ratio}});
  }
  emit(opts, opts.format == "csv" ? csv.str() : dump_json(rows));
  return 0;
}

int run_density_check(const CommonOpts& opts, std::optional<double> model_a,
                      bool constant, const std::string& csv_path,
                      std::size_t grid_n) {
  const mcp1d::CurvatureParams p = opts.params();
  const int sources = int(model_a.has_value()) + int(constant) + int(!csv_path.empty());
  if (sources != 1)
    throw std::invalid_argument(
        "density-check: exactly one of --model-a, --constant, --csv required");
  std::optional<mcp1d::Density1D> h;
  if (model_a) {
    h = mcp1d::model_density(mcp1d::ModelDensityParams(p, *model_a), 4096,
                             opts.quad());
  } else if (constant) {
    h = mcp1d::constant_density(p.D);
  } else {
    h = mcp1d::density_from_csv(csv_path);
  }
  const mcp1d::McpReport report = mcp1d::check_mcp_density(*h, p, grid_n);
  json j = mcp1d::to_json(report);
  j["params"] = {{"K", p.K}, {"N", p.N}, {"D", p.D}};
  emit(opts, dump_json(j));
  return report.pass ? 0 : 1;
}

int run_sharpness(const CommonOpts& opts, const std::vector<double>& a_grid) {
  const mcp1d::CurvatureParams p = opts.params();
  const auto cfg = opts.quad();
  const double vol = mcp1d::model_volume(p, p.D, cfg);
  mcp1d::CsvWriter csv;
  csv.header({"K", "N", "D", "a", "v", "content", "bound", "ratio"});
  json rows = json::array();
  for (const double a : a_grid) {
    const mcp1d::ModelDensityParams mp(p, a);
    const double v = mcp1d::needle_mass(mp, cfg);
    const double content = vol * mcp1d::f_boundary(p, a, cfg);
    const double mass = vol * v;
    const double bound = std::pow(p.N * mcp1d::omega(p.N), 1.0 / p.N) *
                         std::pow(mass, (p.N - 1.0) / p.N);
    const double ratio = mcp1d::sharpness_ratio(p, a, cfg);
    csv.row({p.K, p.N, p.D, a, v, content, bound, ratio});
    rows.push_back({{"K", p.K},
                    {"N", p.N},
                    {"D", p.D},
                    {"a", a},
                    {"v", v},
                    {"content", content},
                    {"bound", bound},
                    {"ratio", ratio}});
  }
  emit(opts, opts.format == "csv" ? csv.str() : dump_json(rows));
  return 0;
}

int run_verify(const CommonOpts& opts, double delta, std::size_t n_needles,
               std::size_t trials, bool optimal, const std::string& in_path,
               std::optional<double> psi_band) {
  const mcp1d::CurvatureParams p = opts.params();
  const auto cfg = opts.quad();
  const auto inv = opts.inv();
  json out;
  out["params"] = {{"K", p.K}, {"N", p.N}, {"D", p.D}};
  out["delta"] = delta;
  out["seed"] = opts.seed;
  bool all_pass = true;

  if (!in_path.empty()) {
    const json doc = json::parse(mcp1d::read_text_file(in_path));
    const mcp1d::NeedleDecomposition dec = mcp1d::decomposition_from_json(doc);
    const mcp1d::LocalizedReport rep = mcp1d::check_localized_inequality(dec, cfg, inv);
    out["localized"] = mcp1d::to_json(rep);
    all_pass = all_pass && rep.pass;
  } else {
    json trials_json = json::array();
    double worst_slack = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < trials; ++t) {
      const std::uint64_t trial_seed = opts.seed + t;
      const mcp1d::NeedleDecomposition dec =
          mcp1d::random_decomposition(p, delta, n_needles, trial_seed);
      const mcp1d::LocalizedReport rep = mcp1d::check_localized_inequality(dec, cfg, inv);
      json row = mcp1d::to_json(rep);
      row["seed"] = trial_seed;
      trials_json.push_back(std::move(row));
      worst_slack = std::min(worst_slack, rep.slack);
      all_pass = all_pass && rep.pass;
    }
    out["trials"] = trials;
    out["needles"] = n_needles;
    out["worst_slack"] = worst_slack;
    out["localized_trials"] = std::move(trials_json);
  }

  if (optimal) {
    const mcp1d::NeedleDecomposition dec =
        mcp1d::optimal_decomposition(p, delta, n_needles, opts.seed);
    const mcp1d::LocalizedReport rep = mcp1d::check_localized_inequality(dec, cfg, inv);
    json opt_json = mcp1d::to_json(rep);
    const bool tight = std::abs(rep.slack) <= 1e-6;
    opt_json["tight"] = tight;
    out["optimal"] = std::move(opt_json);
    all_pass = all_pass && rep.pass && tight;
  }

  if (delta > 0.0 && delta < p.D) {
    const double vol = mcp1d::model_volume(p, p.D, cfg);
    const mcp1d::Density1D family = mcp1d::model_density(
        mcp1d::ModelDensityParams(p, delta), 4096, cfg);
    const mcp1d::Density1D measure(
        p.D, [vol, &family](double x) { return vol * family(x); },
        mcp1d::DensityKind::UserSupplied, 4096, {delta});
    mcp1d::TheoremOptions topt;
    topt.psi_band = psi_band;
    const mcp1d::TheoremReport rep = mcp1d::verify_theorem_conclusion(
        measure, 0.0, p, mcp1d::IntervalSet({{0.0, delta}}), delta, topt, cfg);
    out["theorem"] = mcp1d::to_json(rep);
    all_pass = all_pass && rep.pass;
  }

  out["all_pass"] = all_pass;
  emit(opts, dump_json(out));
  return all_pass ? 0 : 1;
}

int run_oracle(const CommonOpts& opts, const std::vector<double>& v_grid,
               std::size_t grid_n, double rtol) {
  const mcp1d::CurvatureParams p = opts.params();
  const auto cfg = opts.quad();
  const auto inv = opts.inv();
  mcp1d::CsvWriter csv;
  csv.header({"K", "N", "D", "v", "I", "I_brute", "rel_err", "E_l", "E_r"});
  json rows = json::array();
  bool ok = true;
  for (const double v : v_grid) {
    const mcp1d::ProfilePoint pt = mcp1d::isoperimetric_profile(p, v, cfg, inv);
    const mcp1d::Density1D h =
        mcp1d::model_density(mcp1d::ModelDensityParams(p, pt.a), 4096, cfg);
    const mcp1d::BruteForceResult bf =
        mcp1d::brute_force_min_content(h, v, grid_n, cfg);
    const double rel_err = std::abs(bf.content - pt.I) / pt.I;
    ok = ok && rel_err <= rtol;
    const mcp1d::Interval iv = bf.argmin.intervals().front();
    csv.row({p.K, p.N, p.D, v, pt.I, bf.content, rel_err, iv.l, iv.r});
    rows.push_back({{"K", p.K},
                    {"N", p.N},
                    {"D", p.D},
                    {"v", v},
                    {"I", pt.I},
                    {"I_brute", bf.content},
                    {"rel_err", rel_err},
                    {"E_l", iv.l},
                    {"E_r", iv.r}});
  }
  emit(opts, opts.format == "csv" ? csv.str() : dump_json(rows));
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-dimensional isoperimetric model toolkit"};
  app.require_subcommand(1);

  CommonOpts profile_opts;
  std::string profile_vlog;
  std::vector<double> profile_vlist;
  CLI::App* profile = app.add_subcommand("profile", "exact profile table over a mass grid");
  add_common(profile, profile_opts);
  profile->add_option("--v-log", profile_vlog, "log-spaced mass grid lo:hi:n");
  profile->add_option("--v", profile_vlist, "explicit mass values")->delimiter(',');

  CommonOpts dc_opts;
  std::optional<double> dc_model_a;
  bool dc_constant = false;
  std::string dc_csv;
  std::size_t dc_grid_n = 40;
  CLI::App* dc = app.add_subcommand("density-check", "contraction-inequality certificate");
  add_common(dc, dc_opts, /*json_only=*/true);
  dc->add_option("--model-a", dc_model_a, "check the model density with this split point");
  dc->add_flag("--constant", dc_constant, "check the constant density on [0, D]");
  dc->add_option("--csv", dc_csv, "check a tabulated density from CSV");
  dc->add_option("--grid-n", dc_grid_n, "lattice resolution")->check(CLI::PositiveNumber);

  CommonOpts sh_opts;
  std::string sh_alog;
  std::vector<double> sh_alist;
  CLI::App* sh = app.add_subcommand("sharpness", "dimensional-constant sharpness sweep");
  add_common(sh, sh_opts);
  sh->add_option("--a-log", sh_alog, "log-spaced split points lo:hi:n");
  sh->add_option("--a", sh_alist, "explicit split points")->delimiter(',');

  CommonOpts vf_opts;
  double vf_delta = 0.0;
  std::size_t vf_needles = 4;
  std::size_t vf_trials = 5;
  bool vf_optimal = false;
  std::string vf_in;
  std::optional<double> vf_psi_band;
  CLI::App* vf = app.add_subcommand("verify", "localized inequality and deficit reports");
  add_common(vf, vf_opts, /*json_only=*/true);
  vf->add_option("--delta", vf_delta, "ball radius")->required()->check(CLI::PositiveNumber);
  vf->add_option("--needles", vf_needles, "needles per decomposition")->check(CLI::PositiveNumber);
  vf->add_option("--trials", vf_trials, "seeded random decompositions")->check(CLI::PositiveNumber);
  vf->add_flag("--optimal", vf_optimal, "also check the tight configuration");
  vf->add_option("--in", vf_in, "verify a decomposition loaded from JSON");
  vf->add_option("--psi-band", vf_psi_band, "assert the measured deficit stays below this");

  CommonOpts or_opts;
  std::string or_vlog;
  std::vector<double> or_vlist;
  std::size_t or_grid_n = 512;
  double or_rtol = 1e-3;
  CLI::App* orc = app.add_subcommand("oracle", "brute-force cross-check of the profile");
  add_common(orc, or_opts);
  orc->add_option("--v-log", or_vlog, "log-spaced mass grid lo:hi:n");
  orc->add_option("--v", or_vlist, "explicit mass values")->delimiter(',');
  orc->add_option("--grid-n", or_grid_n, "search lattice resolution")->check(CLI::PositiveNumber);
  orc->add_option("--rtol", or_rtol, "assertion threshold on the relative error")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (profile->parsed())
      return run_profile(profile_opts, resolve_grid(profile_vlog, profile_vlist, "profile"));
    if (dc->parsed())
      return run_density_check(dc_opts, dc_model_a, dc_constant, dc_csv, dc_grid_n);
    if (sh->parsed())
      return run_sharpness(sh_opts, resolve_grid(sh_alog, sh_alist, "sharpness"));
    if (vf->parsed())
      return run_verify(vf_opts, vf_delta, vf_needles, vf_trials, vf_optimal, vf_in,
                        vf_psi_band);
    if (orc->parsed())
      return run_oracle(or_opts, resolve_grid(or_vlog, or_vlist, "oracle"), or_grid_n,
                        or_rtol);
  } catch (const std::domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
