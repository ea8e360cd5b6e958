#include "tenom/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "json.hpp"

#include "tenom/error.hpp"

namespace tenom::bench {

namespace {

using nlohmann::json;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Error("output: cannot open " + path.string());
  return out;
}

double total_mass(const Field& u) {
  const auto& g = u.grid();
  double m = 0.0;
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) m += u(i, j, 0);
  }
  return m * g.dx[0] * g.dx[1];
}

int scheme_order(const SchemeConfig& s) {
  return s.family == Family::WenoJs5 ? 5 : s.window_width();
}

}  // namespace

Profile primitive_profile(const Field& u, const Model& model) {
  const auto& g = u.grid();
  Profile p;
  if (model.equations == Equations::Advection) {
    p.names = {"u"};
    p.columns = {u.interior(0)};
    return p;
  }
  p.names = g.dims == 1 ? std::vector<std::string>{"rho", "u", "p"}
                        : std::vector<std::string>{"rho", "u", "v", "p"};
  p.columns.assign(p.names.size(), {});
  const int m = u.components();
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      const double* c = u.cell(i, j);
      euler::ConsState s{c[0], {c[1], m == 4 ? c[2] : 0.0}, c[m - 1]};
      const double rho = s.rho;
      const double vx = s.mom[0] / rho;
      const double vy = s.mom[1] / rho;
      const double pr = (model.gamma - 1.0) * (s.energy - 0.5 * rho * (vx * vx + vy * vy));
      p.columns[0].push_back(rho);
      p.columns[1].push_back(vx);
      if (m == 4) p.columns[2].push_back(vy);
      p.columns.back().push_back(pr);
    }
  }
  return p;
}

void write_profile_csv(const std::filesystem::path& path, const Field& u, const Model& model) {
  const auto& g = u.grid();
  if (g.dims != 1) throw Error("write_profile_csv: one-dimensional fields only");
  const auto prof = primitive_profile(u, model);
  auto out = open_out(path);
  out << "x";
  for (const auto& n : prof.names) out << ',' << n;
  out << '\n';
  for (int i = 0; i < g.n[0]; ++i) {
    out << num(g.center(0, i));
    for (const auto& c : prof.columns) out << ',' << num(c[static_cast<std::size_t>(i)]);
    out << '\n';
  }
}

void write_field_csv(const std::filesystem::path& path, const Field& u, const Model& model) {
  const auto& g = u.grid();
  if (g.dims != 2) throw Error("write_field_csv: two-dimensional fields only");
  const auto prof = primitive_profile(u, model);
  auto out = open_out(path);
  out << "x,y";
  for (const auto& n : prof.names) out << ',' << n;
  out << '\n';
  std::size_t k = 0;
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i, ++k) {
      out << num(g.center(0, i)) << ',' << num(g.center(1, j));
      for (const auto& c : prof.columns) out << ',' << num(c[k]);
      out << '\n';
    }
  }
}

void write_density_matrix(const std::filesystem::path& path, const Field& u) {
  const auto& g = u.grid();
  auto out = open_out(path);
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      if (i > 0) out << ' ';
      out << num(u(i, j, 0));
    }
    out << '\n';
  }
}

void write_adr_csv(const std::filesystem::path& path, const std::vector<adr::AdrPoint>& rows) {
  auto out = open_out(path);
  out << "phi,re_phi,im_phi\n";
  for (const auto& r : rows) out << num(r.phi) << ',' << num(r.re) << ',' << num(r.im) << '\n';
}

RunResult run_case(const CaseSpec& base, const SchemeConfig& scheme, const RunOptions& opts) {
  CaseSpec spec = base;
  if (opts.t_end) spec.t_end = *opts.t_end;
  const int nx = opts.nx.value_or(spec.resolution[0]);
  const int ny = spec.dims == 2 ? opts.ny.value_or(spec.resolution[1]) : 1;
  const auto problem = make_problem(spec, scheme, nx, ny);
  Field u0 = initial_field(spec, problem.grid);

  RunReport rep;
  rep.case_name = spec.name;
  rep.scheme = scheme.name();
  rep.nx = nx;
  rep.ny = ny;
  rep.t_end = spec.t_end;
  rep.mass_initial = total_mass(u0);

  Solver solver(problem, std::move(u0));
  TimeConfig tc;
  tc.cfl = opts.cfl;
  tc.t_end = spec.t_end;
  tc.dt_override = opts.dt_override;
  const auto start = std::chrono::steady_clock::now();
  try {
    solver.advance(tc);
  } catch (const PositivityError& e) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    throw InstabilityError(e.what(), solver.steps() + 1, nan, nan);
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep.steps = solver.steps();
  rep.fallback_activations = solver.fallback_activations();
  rep.boundary_outflow = solver.boundary_mass_outflow();
  const auto& u = solver.state();
  rep.mass_final = total_mass(u);
  const auto rho = u.interior(0);
  rep.rho_min = *std::min_element(rho.begin(), rho.end());
  rep.rho_max = *std::max_element(rho.begin(), rho.end());

  if (opts.compute_errors) {
    if (spec.reference.kind == ReferenceKind::Exact) {
      rep.errors = error_norms(rho, exact_solution(spec, problem.grid, spec.t_end));
    } else if (spec.reference.kind == ReferenceKind::FineGrid && spec.dims == 1) {
      const auto ref = make_reference(spec, opts.cache_dir.empty() ? default_cache_dir()
                                                                    : opts.cache_dir);
      rep.errors = error_norms(rho, restrict_to(ref.rho, ref.grid, problem.grid));
    }
  }

  if (!opts.out_dir.empty()) {
    const auto stem = opts.out_dir / (spec.name + "-" + rep.scheme);
    if (spec.dims == 1) {
      write_profile_csv(stem.string() + ".csv", u, problem.model);
      rep.files.push_back(stem.string() + ".csv");
    } else {
      write_field_csv(stem.string() + ".csv", u, problem.model);
      write_density_matrix(stem.string() + "-rho.dat", u);
      rep.files.push_back(stem.string() + ".csv");
      rep.files.push_back(stem.string() + "-rho.dat");
    }
    rep.files.push_back(stem.string() + ".json");
    auto out = open_out(stem.string() + ".json");
    out << report_to_json(rep) << '\n';
  }
  return {std::move(rep), u};
}

std::string report_to_json(const RunReport& r) {
  json j{{"case", r.case_name},
         {"scheme", r.scheme},
         {"nx", r.nx},
         {"ny", r.ny},
         {"t_end", r.t_end},
         {"wall_seconds", r.wall_seconds},
         {"steps", r.steps},
         {"fallback_activations", r.fallback_activations},
         {"rho_min", r.rho_min},
         {"rho_max", r.rho_max},
         {"mass_initial", r.mass_initial},
         {"mass_final", r.mass_final},
         {"boundary_outflow", r.boundary_outflow},
         {"files", r.files}};
  if (r.errors) {
    j["errors"] = {{"l1", r.errors->l1}, {"l2", r.errors->l2}, {"linf", r.errors->linf}};
  } else {
    j["errors"] = nullptr;
  }
  return j.dump(2);
}

std::string error_to_json(const std::exception& e) {
  json j{{"status", "error"}, {"message", e.what()}};
  if (const auto* inst = dynamic_cast<const InstabilityError*>(&e)) {
    j["kind"] = "instability";
    j["step"] = inst->step();
    j["x"] = std::isfinite(inst->x()) ? json(inst->x()) : json(nullptr);
    j["y"] = std::isfinite(inst->y()) ? json(inst->y()) : json(nullptr);
  } else if (dynamic_cast<const PositivityError*>(&e) != nullptr) {
    j["kind"] = "positivity";
  } else {
    j["kind"] = "error";
  }
  return j.dump();
}

double convergence_dt(int order, double dx, double dx0, double cfl) {
  if (!(dx > 0.0) || !(dx0 > 0.0)) throw Error("convergence_dt: cell widths must be positive");
  return cfl * dx * std::pow(dx / dx0, order / 3.0 - 1.0);
}

std::vector<ConvergenceRow> convergence_table(const CaseSpec& spec, const SchemeConfig& scheme,
                                              const std::vector<int>& sizes) {
  if (sizes.size() < 2) throw Error("convergence_table: need at least two resolutions");
  if (spec.reference.kind != ReferenceKind::Exact) {
    throw Error("convergence_table: case '" + spec.name + "' has no exact solution");
  }
  const double len = spec.domain[1] - spec.domain[0];
  const double dx0 = len / sizes.front();
  std::vector<ConvergenceRow> rows;
  for (const int n : sizes) {
    RunOptions opts;
    opts.nx = n;
    opts.dt_override = convergence_dt(scheme_order(scheme), len / n, dx0);
    const auto res = run_case(spec, scheme, opts);
    ConvergenceRow row;
    row.n = n;
    row.errors = *res.report.errors;
    row.seconds = res.report.wall_seconds;
    if (!rows.empty()) {
      row.order = observed_order(rows.back().errors.linf, row.errors.linf,
                                 static_cast<double>(n) / rows.back().n);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tenom::bench
