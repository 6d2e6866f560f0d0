// Copyright 2026 the ftr authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Every subcommand prints CSV (or JSON with
// --output json) on stdout with fixed 17-significant-digit formatting, so
// identical invocations produce identical bytes. Exit codes: 0 success,
// 2 validation/usage error (single-line diagnostic on stderr),
// 3 numerical non-convergence (error estimate printed).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ftr/errors.hpp"
#include "ftr/fit.hpp"
#include "ftr/metrics.hpp"
#include "ftr/model.hpp"
#include "ftr/sampler.hpp"

namespace {

using json = nlohmann::ordered_json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Grid {
  double start = 0.0;
  double stop = 0.0;
  int points = 0;

  std::vector<double> values() const {
    std::vector<double> v(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i)
      v[static_cast<std::size_t>(i)] =
          points == 1 ? start : start + (stop - start) * i / (points - 1);
    return v;
  }
};

Grid parse_grid(const std::string& spec) {
  Grid g;
  const auto c1 = spec.find(':');
  const auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw ftr::DomainError("grid must be start:stop:points, got '" + spec +
                           "'");
  try {
    g.start = std::stod(spec.substr(0, c1));
    g.stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    g.points = std::stoi(spec.substr(c2 + 1));
  } catch (const std::exception&) {
    throw ftr::DomainError("grid must be start:stop:points, got '" + spec +
                           "'");
  }
  if (g.points < 2) throw ftr::DomainError("grid needs at least 2 points");
  return g;
}

struct CommonParams {
  double K = 0.0;
  double Delta = 0.0;
  double m = 1.0;
  std::optional<double> gamma_bar;
  std::optional<double> gamma_db;

  void add_flags(CLI::App* cmd, bool with_gamma = true) {
    cmd->add_option("--K", K, "Specular-to-diffuse power ratio (linear)");
    cmd->add_option("--Delta", Delta, "Specular similarity in [0,1]");
    cmd->add_option("--m", m, "Fluctuation index");
    if (with_gamma) {
      auto* lin = cmd->add_option("--gamma-bar", gamma_bar,
                                  "Average SNR (linear)");
      auto* db = cmd->add_option("--gamma-db", gamma_db, "Average SNR (dB)");
      lin->excludes(db);
      db->excludes(lin);
    }
  }

  ftr::FtrParams params(double fallback_gamma = 1.0) const {
    double gb = fallback_gamma;
    if (gamma_bar) gb = *gamma_bar;
    if (gamma_db) gb = ftr::db_to_linear(*gamma_db);
    return ftr::FtrParams(K, Delta, m, gb);
  }
};

void emit_table(const std::string& output,
                const std::vector<std::string>& columns,
                const std::vector<std::vector<double>>& rows) {
  if (output == "json") {
    json j;
    j["columns"] = columns;
    auto& out_rows = j["rows"];
    out_rows = json::array();
    for (const auto& r : rows) {
      json jr = json::array();
      for (double v : r) jr.push_back(v);
      out_rows.push_back(jr);
    }
    std::cout << j.dump() << "\n";
    return;
  }
  std::string header;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) header += ',';
    header += columns[i];
  }
  std::cout << header << "\n";
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) line += ',';
      line += g17(r[i]);
    }
    std::cout << line << "\n";
  }
}

int default_mixture_order(const ftr::FtrParams& p) {
  return static_cast<int>(std::ceil(p.K * p.Delta)) + 1;
}

/// auto method: use the mixture unless it disagrees with the exact route
/// beyond 1e-3 sup on a coarse probe of the requested range.
bool auto_prefers_approx(const ftr::FtrParams& p, const ftr::MixtureCoeffs& mc,
                         double lo, double hi, bool cdf) {
  for (int i = 0; i <= 16; ++i) {
    const double x = lo + (hi - lo) * i / 16.0;
    if (x < 0.0) continue;
    const double a = cdf ? ftr::cdf_approx(p, x, mc) : ftr::pdf_approx(p, x, mc);
    const double e = cdf ? ftr::cdf_exact(p, x) : ftr::pdf_exact(p, x);
    if (std::abs(a - e) > 1e-3) return false;
  }
  return true;
}

int run_distribution(const CommonParams& common, const std::string& grid_spec,
                     const std::string& method, int mixture_order,
                     const std::string& output, bool cdf) {
  const ftr::FtrParams p = common.params();
  const Grid grid = parse_grid(grid_spec);
  std::string chosen = method;
  ftr::MixtureCoeffs mc;
  if (method != "exact") {
    const int order =
        mixture_order > 0 ? mixture_order : default_mixture_order(p);
    mc = ftr::mixture_coeffs(p, order);
    if (mc.precision_warning)
      std::cerr << "warning: mixture order " << mc.M
                << " > 25 loses double precision\n";
    if (method == "auto")
      chosen = auto_prefers_approx(p, mc, grid.start, grid.stop, cdf)
                   ? "approx"
                   : "exact";
  }
  std::vector<std::vector<double>> rows;
  for (double x : grid.values()) {
    double v;
    if (chosen == "approx")
      v = cdf ? ftr::cdf_approx(p, x, mc) : ftr::pdf_approx(p, x, mc);
    else
      v = cdf ? ftr::cdf_exact(p, x) : ftr::pdf_exact(p, x);
    rows.push_back({x, v});
  }
  emit_table(output, {"x", cdf ? "cdf" : "pdf"}, rows);
  return 0;
}

ftr::CepFamily parse_cep(const std::string& mod,
                         const std::vector<std::string>& raw_terms) {
  if (!raw_terms.empty()) {
    ftr::CepFamily cep;
    for (const auto& t : raw_terms) {
      const auto colon = t.find(':');
      if (colon == std::string::npos)
        throw ftr::DomainError("--cep terms must be alpha:beta");
      cep.terms.emplace_back(std::stod(t.substr(0, colon)),
                             std::stod(t.substr(colon + 1)));
    }
    cep.validate();
    return cep;
  }
  if (mod == "bpsk") return ftr::CepFamily::bpsk();
  throw ftr::DomainError("unknown modulation '" + mod + "'");
}

ftr::ReduceTarget parse_target(const std::string& name) {
  if (name == "rayleigh") return ftr::ReduceTarget::kRayleigh;
  if (name == "rician") return ftr::ReduceTarget::kRician;
  if (name == "rician-shadowed") return ftr::ReduceTarget::kRicianShadowed;
  if (name == "hoyt") return ftr::ReduceTarget::kHoyt;
  if (name == "nakagami-m") return ftr::ReduceTarget::kNakagamiM;
  if (name == "twdp") return ftr::ReduceTarget::kTwdp;
  if (name == "one-sided-gaussian")
    return ftr::ReduceTarget::kOneSidedGaussian;
  if (name == "two-wave") return ftr::ReduceTarget::kTwoWave;
  if (name == "fluctuating-two-wave")
    return ftr::ReduceTarget::kFluctuatingTwoWave;
  throw ftr::DomainError("unknown reduction target '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fluctuating two-ray fading model toolkit"};
  app.require_subcommand(1);

  std::string output = "csv";
  app.add_option("--output", output, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  // pdf / cdf ---------------------------------------------------------
  CommonParams dist_common;
  std::string dist_grid = "0:5:501";
  std::string dist_method = "auto";
  int dist_order = 0;
  auto add_dist = [&](const char* name, const char* desc) {
    auto* cmd = app.add_subcommand(name, desc);
    dist_common.add_flags(cmd);
    cmd->add_option("--grid", dist_grid, "x grid start:stop:points");
    cmd->add_option("--method", dist_method, "exact|approx|auto")
        ->check(CLI::IsMember({"exact", "approx", "auto"}));
    cmd->add_option("--M", dist_order,
                    "Mixture order (default ceil(K*Delta)+1)");
    return cmd;
  };
  auto* cmd_pdf = add_dist("pdf", "SNR density on a grid");
  auto* cmd_cdf = add_dist("cdf", "SNR distribution function on a grid");

  // mgf ---------------------------------------------------------------
  CommonParams mgf_common;
  std::string mgf_grid = "-5:0:51";
  bool mgf_independent_flag = false;
  auto* cmd_mgf = app.add_subcommand("mgf", "MGF of the SNR on an s grid");
  mgf_common.add_flags(cmd_mgf);
  cmd_mgf->add_option("--grid", mgf_grid, "s grid start:stop:points, s <= 0");
  cmd_mgf->add_flag("--independent", mgf_independent_flag,
                    "Independent-fluctuation variant");

  // envelope-pdf ------------------------------------------------------
  CommonParams env_common;
  std::string env_grid = "0:3:301";
  std::string env_method = "auto";
  int env_order = 0;
  double env_omega = 1.0;
  auto* cmd_env = app.add_subcommand("envelope-pdf",
                                     "Signal envelope density on a grid");
  env_common.add_flags(cmd_env, /*with_gamma=*/false);
  cmd_env->add_option("--omega", env_omega, "Mean square envelope")
      ->capture_default_str();
  cmd_env->add_option("--grid", env_grid, "r grid start:stop:points");
  cmd_env->add_option("--method", env_method, "exact|approx|auto")
      ->check(CLI::IsMember({"exact", "approx", "auto"}));
  cmd_env->add_option("--M", env_order,
                      "Mixture order (default ceil(K*Delta)+1)");

  // sample ------------------------------------------------------------
  CommonParams sample_common;
  std::int64_t sample_n = 1000;
  std::uint64_t sample_seed = 1;
  double sample_es = 1.0;
  bool sample_independent_flag = false;
  std::string sample_format = "csv";
  std::string sample_out;
  auto* cmd_sample =
      app.add_subcommand("sample", "Monte Carlo channel realizations");
  sample_common.add_flags(cmd_sample);
  cmd_sample->add_option("--n", sample_n, "Number of realizations")
      ->capture_default_str();
  cmd_sample->add_option("--seed", sample_seed, "RNG seed")
      ->capture_default_str();
  cmd_sample->add_option("--es-over-n0", sample_es,
                         "Extra linear SNR scaling (default 1)");
  cmd_sample->add_flag("--independent", sample_independent_flag,
                       "Independent-fluctuation variant");
  cmd_sample->add_option("--format", sample_format, "csv|binary")
      ->check(CLI::IsMember({"csv", "binary"}));
  cmd_sample->add_option("--out", sample_out,
                         "Output file (required for binary)");

  // ber ---------------------------------------------------------------
  CommonParams ber_common;
  std::string ber_gamma_db, ber_gamma_lin;
  std::string ber_mod = "bpsk";
  std::vector<std::string> ber_cep;
  bool ber_with_asym = false, ber_with_mc = false;
  std::int64_t ber_mc_n = 1000000;
  std::uint64_t ber_seed = 1;
  auto* cmd_ber = app.add_subcommand("ber", "Average BER sweep");
  ber_common.add_flags(cmd_ber, /*with_gamma=*/false);
  auto* opt_db = cmd_ber->add_option("--gamma-db", ber_gamma_db,
                                     "Average SNR grid in dB start:stop:points");
  auto* opt_lin = cmd_ber->add_option("--gamma-bar", ber_gamma_lin,
                                      "Average SNR grid (linear)");
  opt_db->excludes(opt_lin);
  opt_lin->excludes(opt_db);
  cmd_ber->add_option("--mod", ber_mod, "Modulation (bpsk)")
      ->capture_default_str();
  cmd_ber->add_option("--cep", ber_cep,
                      "Custom CEP terms alpha:beta (repeatable)");
  cmd_ber->add_flag("--with-asymptote", ber_with_asym,
                    "Include the high-SNR asymptote");
  cmd_ber->add_flag("--with-mc", ber_with_mc,
                    "Include semi-analytic Monte Carlo");
  cmd_ber->add_option("--mc-n", ber_mc_n, "Monte Carlo draws")
      ->capture_default_str();
  cmd_ber->add_option("--seed", ber_seed, "RNG seed")->capture_default_str();

  // outage ------------------------------------------------------------
  CommonParams out_common;
  std::string out_gamma_db, out_gamma_lin;
  double out_rs = 2.0;
  bool out_with_asym = false, out_with_mc = false;
  std::int64_t out_mc_n = 1000000;
  std::uint64_t out_seed = 1;
  auto* cmd_out = app.add_subcommand("outage", "Outage capacity probability");
  out_common.add_flags(cmd_out, /*with_gamma=*/false);
  auto* o_db = cmd_out->add_option("--gamma-db", out_gamma_db,
                                   "Average SNR grid in dB start:stop:points");
  auto* o_lin = cmd_out->add_option("--gamma-bar", out_gamma_lin,
                                    "Average SNR grid (linear)");
  o_db->excludes(o_lin);
  o_lin->excludes(o_db);
  cmd_out->add_option("--rs", out_rs, "Rate threshold R_S (bits/s/Hz)")
      ->capture_default_str();
  cmd_out->add_flag("--with-asymptote", out_with_asym,
                    "Include the high-SNR asymptote");
  cmd_out->add_flag("--with-mc", out_with_mc,
                    "Include Monte Carlo exceedance counting");
  cmd_out->add_option("--mc-n", out_mc_n, "Monte Carlo draws")
      ->capture_default_str();
  cmd_out->add_option("--seed", out_seed, "RNG seed")->capture_default_str();

  // fit ----------------------------------------------------------------
  std::string fit_input;
  std::string fit_model = "ftr";
  std::string fit_m_list;
  auto* cmd_fit = app.add_subcommand(
      "fit", "Fit parameters to an empirical amplitude CDF (epsilon is "
             "maximized over the empirical support points)");
  cmd_fit->add_option("--input", fit_input,
                      "CSV file with header amplitude,cdf ('-' for stdin)")
      ->required();
  cmd_fit->add_option("--model", fit_model, "ftr|rician")
      ->check(CLI::IsMember({"ftr", "rician"}));
  cmd_fit->add_option("--m-candidates", fit_m_list,
                      "Comma-separated integer m candidates");

  // reduce-check --------------------------------------------------------
  CommonParams red_common;
  std::string red_target;
  std::string red_grid = "-20:0:81";
  auto* cmd_red = app.add_subcommand(
      "reduce-check", "Compare the FTR MGF against a special-case reference");
  red_common.add_flags(cmd_red);
  cmd_red->add_option("--target", red_target, "Reference model")->required();
  cmd_red->add_option("--s-grid", red_grid, "s grid start:stop:points");

  // coeffs --------------------------------------------------------------
  CommonParams coeff_common;
  int coeff_order = 0;
  auto* cmd_coeffs =
      app.add_subcommand("coeffs", "Mixture approximation coefficients");
  coeff_common.add_flags(cmd_coeffs, /*with_gamma=*/false);
  cmd_coeffs->add_option("--M", coeff_order,
                         "Mixture order (default ceil(K*Delta)+1)");

  try {
    app.parse(argc, argv);

    if (*cmd_pdf || *cmd_cdf)
      return run_distribution(dist_common, dist_grid, dist_method, dist_order,
                              output, cmd_cdf->parsed());

    if (*cmd_mgf) {
      const ftr::FtrParams p = mgf_common.params();
      const Grid grid = parse_grid(mgf_grid);
      std::vector<std::vector<double>> rows;
      for (double s : grid.values()) {
        const double v =
            mgf_independent_flag ? ftr::mgf_independent(p, s) : ftr::mgf(p, s);
        rows.push_back({s, v});
      }
      emit_table(output, {"s", "mgf"}, rows);
      return 0;
    }

    if (*cmd_env) {
      const ftr::FtrParams p = env_common.params(env_omega);
      const Grid grid = parse_grid(env_grid);
      std::string chosen = env_method;
      ftr::MixtureCoeffs mc;
      if (env_method != "exact") {
        const int order =
            env_order > 0 ? env_order : default_mixture_order(p);
        mc = ftr::mixture_coeffs(p, order);
        if (mc.precision_warning)
          std::cerr << "warning: mixture order " << mc.M
                    << " > 25 loses double precision\n";
        if (env_method == "auto") {
          const ftr::FtrParams psq = p.with_gamma_bar(env_omega);
          chosen = auto_prefers_approx(psq, mc, grid.start * grid.start,
                                       grid.stop * grid.stop, false)
                       ? "approx"
                       : "exact";
        }
      }
      std::vector<std::vector<double>> rows;
      for (double r : grid.values()) {
        const double v = chosen == "approx"
                             ? ftr::envelope_pdf_approx(p, r, env_omega, mc)
                             : ftr::envelope_pdf(p, r, env_omega);
        rows.push_back({r, v});
      }
      emit_table(output, {"r", "pdf"}, rows);
      return 0;
    }

    if (*cmd_sample) {
      const ftr::FtrParams p = sample_common.params();
      ftr::SampleConfig cfg;
      cfg.seed = sample_seed;
      cfg.n_samples = sample_n;
      cfg.es_over_n0 = sample_es;
      const ftr::SampleBatch batch = sample_independent_flag
                                         ? ftr::sample_independent(p, cfg)
                                         : ftr::sample_ftr(p, cfg);
      if (sample_format == "binary") {
        if (sample_out.empty())
          throw ftr::DomainError("--format binary requires --out FILE");
        std::ofstream os(sample_out, std::ios::binary);
        if (!os) throw ftr::DomainError("cannot open " + sample_out);
        ftr::write_binary(batch, cfg.seed, os);
      } else if (!sample_out.empty()) {
        std::ofstream os(sample_out);
        if (!os) throw ftr::DomainError("cannot open " + sample_out);
        ftr::write_csv(batch, os);
      } else {
        ftr::write_csv(batch, std::cout);
      }
      return 0;
    }

    auto sweep_grid = [](const std::string& db, const std::string& lin) {
      std::vector<double> grid_db;
      if (!db.empty()) {
        for (double v : parse_grid(db).values()) grid_db.push_back(v);
      } else if (!lin.empty()) {
        for (double v : parse_grid(lin).values())
          grid_db.push_back(ftr::linear_to_db(v));
      } else {
        for (double v : parse_grid("0:40:41").values()) grid_db.push_back(v);
      }
      return grid_db;
    };

    if (*cmd_ber) {
      const ftr::CepFamily cep = parse_cep(ber_mod, ber_cep);
      const std::vector<double> grid_db =
          sweep_grid(ber_gamma_db, ber_gamma_lin);
      const ftr::FtrParams base(ber_common.K, ber_common.Delta, ber_common.m,
                                1.0);
      std::vector<std::vector<double>> rows;
      std::vector<ftr::McEstimate> mc;
      if (ber_with_mc)
        mc = ftr::ber_mc_sweep(base, cep, grid_db, ber_mc_n, ber_seed);
      // method codes: rows carry (gamma_bar_db, value, method) with
      // method 0=exact, 1=asymptote, 2=mc, 3=mc_stderr in CSV order.
      for (std::size_t i = 0; i < grid_db.size(); ++i) {
        const ftr::FtrParams p =
            base.with_gamma_bar(ftr::db_to_linear(grid_db[i]));
        rows.push_back({grid_db[i], ftr::ber_exact(p, cep), 0});
        if (ber_with_asym)
          rows.push_back({grid_db[i], ftr::ber_asymptotic(p, cep), 1});
        if (ber_with_mc) {
          rows.push_back({grid_db[i], mc[i].estimate, 2});
          rows.push_back({grid_db[i], mc[i].std_error, 3});
        }
      }
      emit_table(output, {"gamma_bar_db", "value", "method"}, rows);
      return 0;
    }

    if (*cmd_out) {
      const ftr::OutageSpec spec{out_rs};
      const std::vector<double> grid_db =
          sweep_grid(out_gamma_db, out_gamma_lin);
      const ftr::FtrParams base(out_common.K, out_common.Delta, out_common.m,
                                1.0);
      std::vector<ftr::McEstimate> mc;
      if (out_with_mc)
        mc = ftr::outage_mc_sweep(base, spec, grid_db, out_mc_n, out_seed);
      std::vector<std::vector<double>> rows;
      for (std::size_t i = 0; i < grid_db.size(); ++i) {
        const ftr::FtrParams p =
            base.with_gamma_bar(ftr::db_to_linear(grid_db[i]));
        rows.push_back({grid_db[i], ftr::outage_probability(p, spec), 0});
        if (out_with_asym)
          rows.push_back({grid_db[i], ftr::outage_asymptotic(p, spec), 1});
        if (out_with_mc) {
          rows.push_back({grid_db[i], mc[i].estimate, 2});
          rows.push_back({grid_db[i], mc[i].std_error, 3});
        }
      }
      emit_table(output, {"gamma_bar_db", "value", "method"}, rows);
      return 0;
    }

    if (*cmd_fit) {
      ftr::EmpiricalCdf emp;
      if (fit_input == "-") {
        emp = ftr::EmpiricalCdf::read_csv(std::cin);
      } else {
        std::ifstream is(fit_input);
        if (!is) throw ftr::DomainError("cannot open " + fit_input);
        emp = ftr::EmpiricalCdf::read_csv(is);
      }
      ftr::FitResult result;
      if (fit_model == "rician") {
        result = ftr::fit_rician(emp);
      } else {
        std::vector<int> candidates;
        if (!fit_m_list.empty()) {
          std::istringstream ss(fit_m_list);
          std::string tok;
          while (std::getline(ss, tok, ','))
            candidates.push_back(std::stoi(tok));
        } else {
          candidates = ftr::default_m_candidates();
        }
        result = ftr::fit_ftr(emp, candidates);
      }
      json j;
      j["K"] = result.K;
      j["Delta"] = result.Delta;
      if (std::isfinite(result.m))
        j["m"] = result.m;
      else
        j["m"] = nullptr;  // Rician baseline: the m -> inf cell
      j["Omega"] = result.omega;
      j["epsilon"] = result.epsilon;
      j["evaluations"] = result.evaluations;
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (*cmd_red) {
      const ftr::FtrParams p = red_common.params();
      const ftr::ReduceResult ref = ftr::reduce(p, parse_target(red_target));
      const Grid grid = parse_grid(red_grid);
      double worst = 0.0;
      std::vector<std::vector<double>> rows;
      for (double s : grid.values()) {
        const double lhs = ftr::mgf(p, s);
        const double rhs = ref.mgf(s);
        const double rel = std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-300);
        worst = std::max(worst, rel);
        rows.push_back({s, lhs, rhs, rel});
      }
      if (output == "json") {
        json j;
        j["target"] = red_target;
        j["tolerance"] = ref.tolerance;
        j["max_rel_error"] = worst;
        j["pass"] = worst <= ref.tolerance;
        std::cout << j.dump() << "\n";
      } else {
        emit_table(output, {"s", "mgf", "reference", "rel_error"}, rows);
      }
      return worst <= ref.tolerance ? 0 : 1;
    }

    if (*cmd_coeffs) {
      const ftr::FtrParams p(coeff_common.K, coeff_common.Delta,
                             coeff_common.m, 1.0);
      const int order =
          coeff_order > 0 ? coeff_order : default_mixture_order(p);
      const ftr::MixtureCoeffs mc = ftr::mixture_coeffs(p, order);
      if (mc.precision_warning)
        std::cerr << "warning: mixture order " << mc.M
                  << " > 25 loses double precision\n";
      std::vector<std::vector<double>> rows;
      for (int i = 0; i < mc.M; ++i)
        rows.push_back({static_cast<double>(i + 1),
                        mc.alpha[static_cast<std::size_t>(i)],
                        mc.delta[static_cast<std::size_t>(i)]});
      emit_table(output, {"i", "alpha", "delta"}, rows);
      return 0;
    }

    throw ftr::DomainError("no subcommand given");
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ftr::NonConvergence& e) {
    std::cerr << "error: " << e.what()
              << " (value=" << g17(e.value())
              << ", error_estimate=" << g17(e.error_estimate()) << ")\n";
    return 3;
  } catch (const ftr::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
