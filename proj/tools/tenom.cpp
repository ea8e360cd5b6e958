// Command-line front end: run a benchmark case, sweep the ADR, or measure
// convergence order.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tenom/adr.hpp"
#include "tenom/error.hpp"
#include "tenom/runner.hpp"

namespace {

using namespace tenom;

struct SchemeOverrides {
  std::string scheme = "teno6m-mp";
  std::optional<std::string> limiter;
  std::optional<std::string> ct;
  std::optional<double> mp_beta;
  std::optional<std::string> mp_curv;
  bool linear = false;
};

void add_scheme_options(CLI::App* app, SchemeOverrides& s) {
  app->add_option("--scheme", s.scheme, "Scheme name")
      ->check(CLI::IsMember(scheme_names()))
      ->required();
  app->add_option("--limiter", s.limiter, "Limiter of a TENO-M scheme")
      ->check(CLI::IsMember({"va", "tvd5", "mp"}));
  app->add_option("--ct", s.ct, "Cut-off: a positive value or 'adaptive'");
  app->add_option("--mp-beta", s.mp_beta, "MP beta parameter");
  app->add_option("--mp-curv", s.mp_curv, "MP curvature measure")
      ->check(CLI::IsMember({"m4", "mm"}));
  app->add_flag("--linear", s.linear, "Disable the cut-off (linear path)");
}

SchemeConfig build_scheme(const SchemeOverrides& s) {
  auto cfg = SchemeConfig::from_name(s.scheme);
  if (s.limiter) {
    if (!cfg.is_teno_m()) throw Error("--limiter applies to TENO-M schemes only");
    using limiter::LimiterKind;
    cfg.limiter = *s.limiter == "va"     ? LimiterKind::VanAlbada
                  : *s.limiter == "tvd5" ? LimiterKind::Tvd5
                                         : LimiterKind::MonotonicityPreserving;
  }
  if (s.ct) {
    if (*s.ct == "adaptive") {
      cfg.teno.cutoff.adaptive = true;
    } else {
      cfg.teno.cutoff.adaptive = false;
      try {
        cfg.teno.cutoff.fixed = std::stod(*s.ct);
      } catch (const std::exception&) {
        throw Error("--ct expects a number or 'adaptive'");
      }
    }
  }
  if (s.mp_beta) cfg.mp.beta = *s.mp_beta;
  if (s.mp_curv) cfg.mp.curvature = *s.mp_curv == "mm" ? limiter::Curvature::MM : limiter::Curvature::M4;
  cfg.linear = s.linear;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-order TENO/TENO-M shock-capturing solver and benchmarks"};
  app.require_subcommand(1);

  SchemeOverrides run_scheme;
  std::string case_name;
  bench::RunOptions run_opts;
  std::string out_dir;
  bool no_errors = false;
  auto* run = app.add_subcommand("run", "Run one benchmark case");
  run->add_option("--case", case_name, "Case name")
      ->check(CLI::IsMember(bench::case_names()))
      ->required();
  add_scheme_options(run, run_scheme);
  run->add_option("--nx", run_opts.nx, "Cells along x");
  run->add_option("--ny", run_opts.ny, "Cells along y");
  run->add_option("--t-end", run_opts.t_end, "End time");
  run->add_option("--cfl", run_opts.cfl, "CFL number");
  run->add_option("--dt-override", run_opts.dt_override, "Fixed time step");
  run->add_option("--out", out_dir, "Output directory");
  run->add_flag("--no-errors", no_errors, "Skip the reference comparison");

  SchemeOverrides adr_scheme;
  adr::AdrConfig adr_cfg;
  std::string adr_out;
  auto* adr_cmd = app.add_subcommand("adr", "Approximate dispersion relation sweep");
  add_scheme_options(adr_cmd, adr_scheme);
  adr_cmd->add_option("--amplitude", adr_cfg.amplitude, "Probe amplitude");
  adr_cmd->add_option("--cfl", adr_cfg.cfl, "Probe CFL number");
  adr_cmd->add_option("--n", adr_cfg.n, "Probe grid size");
  adr_cmd->add_option("--out", adr_out, "CSV output file")->required();

  SchemeOverrides conv_scheme;
  std::string conv_case = "gauss";
  int levels = 5;
  int n0 = 32;
  auto* conv = app.add_subcommand("converge", "Grid convergence study");
  conv->add_option("--case", conv_case, "Case with an exact solution");
  add_scheme_options(conv, conv_scheme);
  conv->add_option("--levels", levels, "Number of resolutions")->check(CLI::Range(2, 12));
  conv->add_option("--n0", n0, "Coarsest resolution")->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("cases", "Print a case description as JSON");
  std::string list_case;
  list->add_option("name", list_case, "Case name")->check(CLI::IsMember(bench::case_names()));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      run_opts.out_dir = out_dir;
      run_opts.compute_errors = !no_errors;
      const auto res = bench::run_case(bench::make_case(case_name), build_scheme(run_scheme), run_opts);
      std::cout << bench::report_to_json(res.report) << '\n';
    } else if (*adr_cmd) {
      const auto rows = adr::adr_sweep(build_scheme(adr_scheme), adr_cfg);
      bench::write_adr_csv(adr_out, rows);
      std::cout << "wrote " << rows.size() << " rows to " << adr_out << " (amplitude "
                << adr_cfg.amplitude << ", cfl " << adr_cfg.cfl << ")\n";
    } else if (*conv) {
      std::vector<int> sizes;
      for (int k = 0, n = n0; k < levels; ++k, n *= 2) sizes.push_back(n);
      const auto rows =
          bench::convergence_table(bench::make_case(conv_case), build_scheme(conv_scheme), sizes);
      std::printf("%8s %24s %24s %10s %10s\n", "N", "L1", "Linf", "order", "seconds");
      for (const auto& r : rows) {
        const std::string order = r.order ? std::to_string(*r.order) : "n/a";
        std::printf("%8d %24.17g %24.17g %10s %10.3f\n", r.n, r.errors.l1, r.errors.linf,
                    order.c_str(), r.seconds);
      }
    } else if (*list) {
      if (list_case.empty()) {
        for (const auto& n : bench::case_names()) std::cout << n << '\n';
      } else {
        std::cout << bench::case_to_json(bench::make_case(list_case)) << '\n';
      }
    }
  } catch (const InstabilityError& e) {
    std::cerr << bench::error_to_json(e) << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << bench::error_to_json(e) << '\n';
    return 1;
  }
  return 0;
}
