//------------------------------------------------------------------------------
//
//   Copyright 2026 The esq Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

// esq - escort entropies, (a,lambda) divergences and the generalized
// Gaussian maxent family, as a batch CLI.
//
// Exit codes: 0 success, 1 domain error (message on stderr as
// {"error":"..."}), 2 usage error. Numbers are rendered with 17 significant
// digits in JSON and 12 in CSV, so identical invocations are byte-identical.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "esq/dist.hpp"
#include "esq/dist_io.hpp"
#include "esq/escort.hpp"
#include "esq/measures.hpp"
#include "esq/oracle.hpp"
#include "esq/qgaussian.hpp"
#include "esq/twolevel.hpp"

namespace {

using namespace esq;

std::string num17(double v) { return format_number(v, 17); }
std::string num12(double v) { return format_number(v, 12); }

std::string value_json(double v) {
  if (std::isfinite(v))
    return "{\"value\":" + num17(v) + ",\"finite\":true}\n";
  return "{\"value\":null,\"finite\":false}\n";
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file " + out_path);
  out << text;
}

// Inclusive uniform grid; the last point is pinned to `to`.
std::vector<double> sweep_grid(double from, double to, double step) {
  if (!(step > 0.0) || !(to >= from))
    throw std::invalid_argument("bad sweep range");
  const long count = std::lround((to - from) / step);
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(count) + 1);
  for (long i = 0; i <= count; ++i) xs.push_back(from + static_cast<double>(i) * step);
  if (std::abs(xs.back() - to) <= 0.5 * step) xs.back() = to;
  return xs;
}

std::string support_json(const GenGaussian& g) {
  if (g.support.compact)
    return "{\"kind\":\"compact\",\"halfwidth\":" +
           num17(g.support.halfwidth) + "}";
  return "{\"kind\":\"full_line\"}";
}

std::string maxent_json(const GenGaussian& g) {
  return "{\"a\":" + num17(g.params.a) + ",\"lambda\":" +
         num17(g.params.lambda) + ",\"p\":" + num17(g.p) + ",\"beta\":" +
         num17(g.beta) + ",\"z\":" + num17(g.z) + ",\"moment\":" +
         num17(closed_form_moment(g.params.a, g.params.lambda, g.p, g.beta)) +
         ",\"support\":" + support_json(g) + "}\n";
}

std::string sweep_report_json(const oracle::SweepReport& r) {
  std::string s = "{";
  s += "\"generator\":\"" + r.generator + "\"";
  s += ",\"seed\":" + std::to_string(r.config.seed);
  s += ",\"trials\":" + std::to_string(r.evaluated);
  s += ",\"injected\":" + std::to_string(r.injected);
  s += ",\"violations\":" + std::to_string(r.violations);
  s += ",\"min_renyi\":" + num17(r.min_renyi);
  s += ",\"min_tsallis\":" + num17(r.min_tsallis);
  s += ",\"argmin_trial\":" + std::to_string(r.argmin_trial);
  s += ",\"argmin_a\":" + num17(r.argmin_a);
  s += ",\"argmin_lambda\":" + num17(r.argmin_lambda);
  s += ",\"argmin_size\":" + std::to_string(r.argmin_size);
  s += ",\"max_injected_abs\":" + num17(r.max_injected_abs);
  s += ",\"min_separated\":" + num17(r.min_separated);
  s += std::string(",\"pass\":") + (r.pass ? "true" : "false");
  s += "}";
  return s;
}

std::string dominance_report_json(const oracle::DominanceReport& r) {
  std::string s = "{";
  s += "\"a\":" + num17(r.a) + ",\"lambda\":" + num17(r.lambda);
  s += ",\"p\":" + num17(r.p) + ",\"m\":" + num17(r.m);
  s += ",\"beta\":" + num17(r.beta);
  s += ",\"maxent_entropy\":" + num17(r.maxent_entropy);
  s += ",\"feasible\":" + std::to_string(r.feasible);
  s += ",\"max_margin\":" + num17(r.max_margin);
  s += ",\"tol\":" + num17(r.tol);
  s += std::string(",\"pass\":") + (r.pass ? "true" : "false");
  s += "}";
  return s;
}

std::string proof_chain_report_json(const oracle::ProofChainSweepReport& r) {
  std::string s = "{";
  s += "\"a\":" + num17(r.a) + ",\"lambda\":" + num17(r.lambda);
  s += ",\"p\":" + num17(r.p) + ",\"beta\":" + num17(r.beta);
  s += ",\"trials\":" + std::to_string(r.trials);
  s += ",\"inequality_failures\":" + std::to_string(r.inequality_failures);
  s += ",\"min_slack\":" + num17(r.min_slack);
  s += ",\"equality_gap_at_g\":" + num17(r.equality_gap_at_g);
  s += std::string(",\"pass\":") + (r.pass ? "true" : "false");
  s += "}";
  return s;
}

struct CommonDistArgs {
  std::string path;
  bool gridded_csv = false;
};

int run(CLI::App& app, int argc, char** argv) {
  app.require_subcommand(1);

  // ---- entropy ------------------------------------------------------------
  auto* entropy = app.add_subcommand("entropy", "(a,lambda) entropy of a distribution");
  CommonDistArgs e_dist;
  double e_a = 1.0, e_lambda = 1.0;
  std::string e_family = "renyi", e_out;
  entropy->add_option("--dist", e_dist.path, "distribution file (json or csv)")->required();
  entropy->add_flag("--gridded", e_dist.gridded_csv, "read csv as a gridded density");
  entropy->add_option("--a", e_a, "entropic order a");
  entropy->add_option("--lambda", e_lambda, "escort order lambda");
  entropy->add_option("--family", e_family, "renyi or tsallis")
      ->check(CLI::IsMember({"renyi", "tsallis"}));
  entropy->add_option("--out", e_out, "write to file instead of stdout");
  entropy->callback([&] {
    const AnyDist d = read_dist_file(e_dist.path, e_dist.gridded_csv);
    const ParamPair pp{e_a, e_lambda};
    const MeasureKind kind{
        e_family == "renyi" ? Family::Renyi : Family::Tsallis,
        Flavor::Entropy};
    const double v = std::visit(
        [&](const auto& f) {
          return al_measure(kind, f, static_cast<decltype(&f)>(nullptr), pp);
        },
        d);
    emit(e_out, value_json(v));
  });

  // ---- divergence ---------------------------------------------------------
  auto* divergence = app.add_subcommand("divergence", "(a,lambda) divergence between two distributions");
  std::string d_f, d_g, d_family = "renyi", d_route = "escort", d_out;
  bool d_gridded = false;
  double d_a = 1.0, d_lambda = 1.0;
  divergence->add_option("--f", d_f, "first distribution file")->required();
  divergence->add_option("--g", d_g, "second distribution file")->required();
  divergence->add_flag("--gridded", d_gridded, "read csv as gridded densities");
  divergence->add_option("--a", d_a, "entropic order a");
  divergence->add_option("--lambda", d_lambda, "escort order lambda");
  divergence->add_option("--family", d_family, "renyi or tsallis")
      ->check(CLI::IsMember({"renyi", "tsallis"}));
  divergence->add_option("--route", d_route, "escort or developed (renyi only)")
      ->check(CLI::IsMember({"escort", "developed"}));
  divergence->add_option("--out", d_out, "write to file instead of stdout");
  divergence->callback([&] {
    const AnyDist f = read_dist_file(d_f, d_gridded);
    const AnyDist g = read_dist_file(d_g, d_gridded);
    if (f.index() != g.index())
      throw std::invalid_argument("incompatible supports");
    const ParamPair pp{d_a, d_lambda};
    const MeasureKind kind{
        d_family == "renyi" ? Family::Renyi : Family::Tsallis,
        Flavor::Divergence};
    const double v = std::visit(
        [&](const auto& fd) {
          const auto& gd = std::get<std::decay_t<decltype(fd)>>(g);
          if (kind.family == Family::Renyi && d_route == "developed")
            return al_renyi_divergence_developed(fd, gd, pp);
          return al_measure(kind, fd, &gd, pp);
        },
        f);
    emit(d_out, value_json(v));
  });

  // ---- escort ---------------------------------------------------------------
  auto* escort_cmd = app.add_subcommand("escort", "escort transform of a distribution");
  CommonDistArgs s_dist;
  double s_a = 1.0;
  std::string s_emit = "json", s_out;
  escort_cmd->add_option("--dist", s_dist.path, "distribution file")->required();
  escort_cmd->add_flag("--gridded", s_dist.gridded_csv, "read csv as a gridded density");
  escort_cmd->add_option("--a", s_a, "escort order")->required();
  escort_cmd->add_option("--emit", s_emit, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  escort_cmd->add_option("--out", s_out, "write to file instead of stdout");
  escort_cmd->callback([&] {
    const AnyDist d = read_dist_file(s_dist.path, s_dist.gridded_csv);
    const std::string text = std::visit(
        [&](const auto& f) {
          const auto e = escort(f, s_a);
          return s_emit == "json" ? to_json(e) + "\n" : to_csv(e);
        },
        d);
    emit(s_out, text);
  });

  // ---- maxent ---------------------------------------------------------------
  auto* maxent = app.add_subcommand("maxent", "maximum-entropy generalized Gaussian");
  double x_a = 1.0, x_lambda = 1.0, x_p = 2.0, x_moment = 0.0, x_beta = 0.0;
  int x_grid_n = 1001;
  double x_tail = 1e-8;
  std::string x_emit = "json", x_out;
  maxent->add_option("--a", x_a, "entropic order a")->required();
  maxent->add_option("--lambda", x_lambda, "escort order lambda")->required();
  maxent->add_option("--p", x_p, "moment order p")->required();
  auto* opt_moment = maxent->add_option("--moment", x_moment, "target a-moment");
  auto* opt_beta = maxent->add_option("--beta", x_beta, "inverse-temperature parameter");
  maxent->add_option("--grid-n", x_grid_n, "grid points for csv output");
  maxent->add_option("--tail-bound", x_tail, "truncated tail mass bound");
  maxent->add_option("--emit", x_emit, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  maxent->add_option("--out", x_out, "write to file instead of stdout");
  maxent->callback([&] {
    if ((opt_moment->count() == 0) == (opt_beta->count() == 0))
      throw CLI::ValidationError("maxent", "give exactly one of --moment or --beta");
    const GenGaussian g = opt_moment->count()
                              ? solve_beta(x_a, x_lambda, x_p, x_moment)
                              : make_gen_gaussian(x_a, x_lambda, x_p, x_beta);
    if (x_emit == "json") {
      emit(x_out, maxent_json(g));
    } else {
      emit(x_out, to_csv(to_gridded(g, x_grid_n, x_tail)));
    }
  });

  // ---- two-level ------------------------------------------------------------
  auto* twolevel = app.add_subcommand("two-level", "exactly solvable two-level system");
  double t_a = 1.0, t_lambda = 1.0, t_beta = 0.0, t_p = 0.5, t_m = 0.5;
  std::string t_curve, t_out;
  double t_from = 0.01, t_to = 0.99, t_step = 0.01;
  twolevel->add_option("--a", t_a, "entropic order a")->required();
  twolevel->add_option("--lambda", t_lambda, "escort order lambda")->required();
  auto* opt_tb = twolevel->add_option("--beta", t_beta, "inverse temperature");
  auto* opt_tp = twolevel->add_option("--p", t_p, "excited-state probability");
  auto* opt_tm = twolevel->add_option("--m", t_m, "internal energy");
  twolevel->add_option("--curve", t_curve, "emit a csv curve over m")
      ->check(CLI::IsMember({"m"}));
  twolevel->add_option("--from", t_from, "curve start");
  twolevel->add_option("--to", t_to, "curve end");
  twolevel->add_option("--step", t_step, "curve step");
  twolevel->add_option("--out", t_out, "write to file instead of stdout");
  twolevel->callback([&] {
    const ParamPair pp{t_a, t_lambda};
    if (!t_curve.empty()) {
      std::string text = "m,entropy,inverse_temperature\n";
      for (double m : sweep_grid(t_from, t_to, t_step))
        text += num12(m) + "," + num12(entropy_of_m(pp, m)) + "," +
                num12(inverse_temperature(pp, m)) + "\n";
      emit(t_out, text);
      return;
    }
    const int given = static_cast<int>(opt_tb->count() > 0) +
                      static_cast<int>(opt_tp->count() > 0) +
                      static_cast<int>(opt_tm->count() > 0);
    if (given != 1)
      throw CLI::ValidationError("two-level", "give exactly one of --beta, --p or --m");
    TwoLevelState st;
    if (opt_tb->count())
      st = two_level_from_beta(pp, t_beta);
    else if (opt_tp->count())
      st = two_level_from_p(pp, t_p);
    else
      st = two_level_from_m(pp, t_m);
    std::string s = "{";
    s += "\"p_exc\":" + num17(st.p_exc);
    s += ",\"m\":" + num17(st.m);
    s += ",\"entropy\":" + num17(entropy_of_state(pp, st.p_exc));
    s += ",\"inverse_temperature\":" + num17(inverse_temperature(pp, st.m));
    s += ",\"heat_capacity\":" + num17(heat_capacity(pp, st.m));
    s += "}\n";
    emit(t_out, s);
  });

  // ---- sweep ----------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "csv curves over one parameter");
  std::string w_over, w_dist, w_out;
  bool w_gridded = false;
  double w_a = 1.0, w_lambda = 1.0, w_p = 2.0;
  double w_from = 0.0, w_to = 1.0, w_step = 0.1;
  int w_grid_n = 20001;
  double w_tail = 1e-8;
  sweep->add_option("--over", w_over, "m, lambda or beta")
      ->required()
      ->check(CLI::IsMember({"m", "lambda", "beta"}));
  sweep->add_option("--from", w_from, "range start")->required();
  sweep->add_option("--to", w_to, "range end")->required();
  sweep->add_option("--step", w_step, "range step")->required();
  sweep->add_option("--dist", w_dist, "distribution file (--over lambda)");
  sweep->add_flag("--gridded", w_gridded, "read csv as a gridded density");
  sweep->add_option("--a", w_a, "entropic order a");
  sweep->add_option("--lambda", w_lambda, "escort order lambda (--over m/beta)");
  sweep->add_option("--p", w_p, "moment order p (--over beta)");
  sweep->add_option("--grid-n", w_grid_n, "grid points (--over beta)");
  sweep->add_option("--tail-bound", w_tail, "tail mass bound (--over beta)");
  sweep->add_option("--out", w_out, "write to file instead of stdout");
  sweep->callback([&] {
    const auto xs = sweep_grid(w_from, w_to, w_step);
    std::string text;
    if (w_over == "m") {
      const ParamPair pp{w_a, w_lambda};
      text = "m,entropy,inverse_temperature\n";
      for (double m : xs)
        text += num12(m) + "," + num12(entropy_of_m(pp, m)) + "," +
                num12(inverse_temperature(pp, m)) + "\n";
    } else if (w_over == "lambda") {
      if (w_dist.empty())
        throw CLI::ValidationError("sweep", "--over lambda needs --dist");
      const AnyDist d = read_dist_file(w_dist, w_gridded);
      text = "lambda,renyi_entropy,tsallis_entropy\n";
      for (double l : xs) {
        const ParamPair pp{w_a, l};
        std::visit(
            [&](const auto& f) {
              text += num12(l) + "," + num12(al_renyi_entropy(f, pp)) + "," +
                      num12(al_tsallis_entropy(f, pp)) + "\n";
            },
            d);
      }
    } else {  // beta
      text = "beta,z,mass\n";
      for (double b : xs) {
        const GenGaussian g = make_gen_gaussian(w_a, w_lambda, w_p, b);
        const GriddedDensity grid = to_gridded(g, w_grid_n, w_tail);
        // report the raw quadrature mass of the sampled density, before the
        // final renormalization that to_gridded applies
        GriddedDensity raw = grid;
        for (int i = 0; i < raw.n(); ++i)
          raw.values[static_cast<std::size_t>(i)] = density(g, raw.x(i));
        text += num12(b) + "," + num12(g.z) + "," +
                num12(quadrature(raw, raw.values)) + "\n";
      }
    }
    emit(w_out, text);
  });

  // ---- verify ---------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run the brute-force verification suite");
  long v_trials = 1000;
  std::uint64_t v_seed = 42;
  double v_grid_step = 1e-3;
  std::string v_out;
  verify->add_option("--trials", v_trials, "nonnegativity sweep trials");
  verify->add_option("--seed", v_seed, "random seed");
  verify->add_option("--grid-step", v_grid_step, "dominance simplex resolution");
  verify->add_option("--out", v_out, "write to file instead of stdout");
  verify->callback([&] {
    bool all_pass = true;
    oracle::SweepConfig cfg;
    cfg.trials = v_trials;
    cfg.seed = v_seed;
    const oracle::SweepReport sw = oracle::nonnegativity_sweep(cfg);
    all_pass &= sw.pass;

    std::string dom = "[";
    const double pair_list[4][2] = {{1.0, 1.0}, {2.0, 1.0}, {1.0, 2.0}, {1.5, 0.8}};
    bool first = true;
    for (const auto& al : pair_list) {
      for (double p : {1.0, 2.0}) {
        const double m_uniform = (std::pow(1.0, p) + std::pow(2.0, p)) / 3.0;
        const oracle::DominanceReport r = oracle::maxent_dominance(
            al[0], al[1], p, 0.8 * m_uniform, {0.0, 1.0, 2.0},
            {v_grid_step, 10.0, true});
        all_pass &= r.pass;
        if (!first) dom += ",";
        dom += dominance_report_json(r);
        first = false;
      }
    }
    dom += "]";

    std::string chain = "[";
    const double chain_params[3][4] = {
        {1.0, 2.0, 2.0, 1.0}, {2.0, 1.0, 2.0, 1.0}, {1.5, 1.5, 2.0, 1.0}};
    first = true;
    for (const auto& cp : chain_params) {
      const oracle::ProofChainSweepReport r = oracle::proof_chain_sweep(
          cp[0], cp[1], cp[2], cp[3], {0.0, 0.6, 1.3}, 100, v_seed);
      all_pass &= r.pass;
      if (!first) chain += ",";
      chain += proof_chain_report_json(r);
      first = false;
    }
    chain += "]";

    std::string s = "{";
    s += "\"nonnegativity\":" + sweep_report_json(sw);
    s += ",\"dominance\":" + dom;
    s += ",\"proof_chain\":" + chain;
    s += std::string(",\"pass\":") + (all_pass ? "true" : "false");
    s += "}\n";
    emit(v_out, s);
    if (!all_pass) throw std::runtime_error("verification failed");
  });

  app.parse(argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"escort entropies, (a,lambda) divergences and maxent generalized Gaussians"};
  try {
    return run(app, argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "{\"error\":\"%s\"}\n", e.what());
    return 1;
  }
}
