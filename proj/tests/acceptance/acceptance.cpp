// Acceptance checks. Prints indented detail lines and exactly one
// "criterion N ...: PASS|FAIL" line per criterion.
//
// Usage: tenom_acceptance [--criterion N]...   (default: all)
// Exit status: 0 all selected criteria pass, 1 some fail, 2 a check threw.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "oracles.hpp"
#include "tenom/adr.hpp"
#include "tenom/limiters.hpp"
#include "tenom/runner.hpp"

namespace bench = tenom::bench;
using tenom::Field;
using tenom::SchemeConfig;

namespace {

const std::vector<std::string> kTenoM6{"teno6m-va", "teno6m-tvd5", "teno6m-mp"};
const std::vector<std::string> kTenoM8{"teno8am-va", "teno8am-tvd5", "teno8am-mp"};

std::vector<std::string> all_teno_m() {
  auto v = kTenoM6;
  v.insert(v.end(), kTenoM8.begin(), kTenoM8.end());
  return v;
}

void detail(const char* fmt, ...) {
  std::va_list args;
  va_start(args, fmt);
  std::fputs("  ", stdout);
  std::vprintf(fmt, args);
  std::fputc('\n', stdout);
  va_end(args);
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Density and velocity of a 1D Euler state.
struct Line {
  std::vector<double> x;
  std::vector<double> rho;
  std::vector<double> u;
};

Line line_of(const Field& f) {
  Line l;
  const auto& g = f.grid();
  for (int i = 0; i < g.n[0]; ++i) {
    l.x.push_back(g.center(0, i));
    l.rho.push_back(f(i, 0, 0));
    l.u.push_back(f(i, 0, 1) / f(i, 0, 0));
  }
  return l;
}

bool all_finite(const Field& f) { return f.interior_finite(); }

// --------------------------------------------------------------------------

bool order_of_accuracy() {
  const auto spec = bench::make_case("gauss");
  const std::vector<int> sizes{32, 64, 128, 256, 512};
  bool pass = true;
  for (const auto& name : all_teno_m()) {
    const double need = name.rfind("teno6m", 0) == 0 ? 5.5 : 7.5;
    const auto rows = bench::convergence_table(spec, SchemeConfig::from_name(name), sizes);
    for (const auto& r : rows) {
      detail("%-13s N=%4d Linf=%.3e order=%s seconds=%.2f", name.c_str(), r.n, r.errors.linf,
             r.order ? std::to_string(*r.order).c_str() : "n/a", r.seconds);
    }
    // The two finest successive pairs: 128/256 and 256/512.
    for (std::size_t k = rows.size() - 2; k < rows.size(); ++k) {
      if (!rows[k].order || *rows[k].order < need) pass = false;
    }
  }
  return pass;
}

bool smooth_equivalence() {
  const int n = 64;
  bool pass = true;
  for (const auto& name : all_teno_m()) {
    const auto t0 = std::chrono::steady_clock::now();
    auto cfg = SchemeConfig::from_name(name);
    auto lin = cfg;
    lin.linear = true;
    tenom::Problem p;
    p.grid = tenom::UniformGrid::line(0.0, 1.0, n, cfg.ghost_cells());
    p.model = {tenom::Equations::Advection, 1.4, 1.0};
    p.bc = tenom::BoundarySpec::uniform(tenom::BoundaryKind::Periodic);
    p.scheme = cfg;
    Field u(p.grid, 1);
    for (int i = 0; i < n; ++i) u(i, 0, 0) = std::sin(2.0 * M_PI * p.grid.center(0, i));
    auto pl = p;
    pl.scheme = lin;
    tenom::Solver s(p, u);
    tenom::Solver sl(pl, u);
    const double dt = 0.4 / n;
    const long steps = std::lround(10.0 / dt);
    const int width = cfg.window_width();
    double worst = 0.0;
    std::vector<double> w(width);
    for (long k = 0; k < steps; ++k) {
      const Field& cur = s.state();
      for (int f = 0; f <= n; ++f) {
        for (int j = 0; j < width; ++j) {
          const int c = ((f - width / 2 + j) % n + n) % n;
          w[j] = cur(c, 0, 0);
        }
        worst = std::max(worst, std::abs(tenom::reconstruct_interface(w.data(), cfg) -
                                         tenom::reconstruct_interface(w.data(), lin)));
      }
      s.step(dt);
      sl.step(dt);
    }
    double state_diff = 0.0;
    for (int i = 0; i < n; ++i) {
      state_diff = std::max(state_diff, std::abs(s.state()(i, 0, 0) - sl.state()(i, 0, 0)));
    }
    const double secs = seconds_since(t0);
    detail("%-13s steps=%ld max interface diff=%g final state diff=%g seconds=%.3f", name.c_str(),
           steps, worst, state_diff, secs);
    if (worst != 0.0 || state_diff != 0.0 || secs >= 1.0) pass = false;
  }
  return pass;
}

bool adr_fidelity() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  for (const auto& name : all_teno_m()) {
    const auto cfg = SchemeConfig::from_name(name);
    auto lin = cfg;
    lin.linear = true;
    const auto rows = tenom::adr::adr_sweep(cfg);
    const auto lrows = tenom::adr::adr_sweep(lin);
    double dev = 0.0;
    double sym = 0.0;
    double onset = NAN;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto s = tenom::adr::analytic_symbol(lin, lrows[k].phi);
      sym = std::max({sym, std::abs(lrows[k].re - s.real()), std::abs(lrows[k].im - s.imag())});
      if (rows[k].phi <= 1.5) {
        dev = std::max({dev, std::abs(rows[k].re - lrows[k].re), std::abs(rows[k].im - lrows[k].im)});
      }
      const bool departs = std::abs(rows[k].re - lrows[k].re) >= 5e-3 ||
                           std::abs(rows[k].im - lrows[k].im) >= 5e-3;
      if (departs && std::isnan(onset)) onset = rows[k].phi;
    }
    detail("%-13s max |Phi - Phi_linear| (phi<=1.5)=%.3e first departing phi=%.4f "
           "linear vs analytic=%.3e",
           name.c_str(), dev, onset, sym);
    if (!(dev < 5e-3) || !(sym < 1e-8)) pass = false;
  }
  const double secs = seconds_since(t0);
  detail("total seconds=%.2f", secs);
  return pass && secs < 10.0;
}

bool shock_tubes() {
  bool pass = true;
  for (const auto& [case_name, limit] : {std::pair{"sod", 0.01}, std::pair{"lax", 0.02}}) {
    const auto spec = bench::make_case(case_name);
    const auto ref = bench::make_reference(spec);
    const auto init = bench::initial_field(spec, bench::case_grid(spec, 3)).interior(0);
    double lo = std::min(*std::min_element(ref.rho.begin(), ref.rho.end()),
                         *std::min_element(init.begin(), init.end()));
    double hi = std::max(*std::max_element(ref.rho.begin(), ref.rho.end()),
                         *std::max_element(init.begin(), init.end()));
    lo *= 0.99;
    hi *= 1.01;
    detail("%s admissible density band [%.5f, %.5f]", case_name, lo, hi);
    for (const auto& name : all_teno_m()) {
      const auto r = bench::run_case(spec, SchemeConfig::from_name(name));
      const bool finite = all_finite(r.state);
      const double l1 = r.report.errors ? r.report.errors->l1 : NAN;
      const bool ok = finite && l1 < limit && r.report.rho_min >= lo && r.report.rho_max <= hi &&
                      r.report.wall_seconds < 5.0;
      detail("%-4s %-13s L1=%.5f rho=[%.5f, %.5f] seconds=%.2f %s", case_name, name.c_str(), l1,
             r.report.rho_min, r.report.rho_max, r.report.wall_seconds, ok ? "ok" : "VIOLATION");
      if (!ok) pass = false;
    }
  }
  return pass;
}

double region_l1(const Line& l, const std::vector<double>& ref, double a, double b) {
  double s = 0.0;
  int n = 0;
  for (std::size_t i = 0; i < l.x.size(); ++i) {
    if (l.x[i] >= a && l.x[i] <= b) {
      s += std::abs(l.rho[i] - ref[i]);
      ++n;
    }
  }
  return s / n;
}

bool shu_osher() {
  const auto spec = bench::make_case("shu-osher");
  const auto ref = bench::make_reference(spec);
  const auto grid = bench::case_grid(spec, 3);
  const auto ref_rho = bench::restrict_to(ref.rho, ref.grid, grid);
  bool pass = true;
  std::vector<double> region(6);
  const auto names = all_teno_m();
  for (std::size_t k = 0; k < names.size(); ++k) {
    const auto r = bench::run_case(spec, SchemeConfig::from_name(names[k]));
    region[k] = region_l1(line_of(r.state), ref_rho, 4.5, 7.5);
    const double l1 = r.report.errors->l1;
    detail("%-13s L1=%.5f L1[4.5,7.5]=%.5f seconds=%.2f", names[k].c_str(), l1, region[k],
           r.report.wall_seconds);
    if (!all_finite(r.state) || !(l1 < 0.05)) pass = false;
  }
  // Index 1 is TVD5 and 2 is MP in each family of three.
  for (int fam = 0; fam < 2; ++fam) {
    const double tvd5 = region[3 * fam + 1];
    const double mp = region[3 * fam + 2];
    const bool ok = mp <= 1.05 * tvd5;
    detail("%s: MP %.5f vs TVD5 %.5f (5%% slack) %s", fam == 0 ? "TENO6-M" : "TENO8A-M", mp, tvd5,
           ok ? "ok" : "VIOLATION");
    if (!ok) pass = false;
  }
  return pass;
}

/// Largest density and its position among cells with centres in [a, b].
std::pair<double, double> peak(const std::vector<double>& x, const std::vector<double>& rho,
                               double a, double b) {
  std::pair<double, double> best{-1.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= a && x[i] <= b && rho[i] > best.first) best = {rho[i], x[i]};
  }
  return best;
}

bool blast_waves() {
  const auto spec = bench::make_case("blast");
  const auto ref = bench::make_reference(spec);
  std::vector<double> rx;
  for (int i = 0; i < ref.grid.n[0]; ++i) rx.push_back(ref.grid.center(0, i));
  const auto [ref_peak, ref_at] = peak(rx, ref.rho, 0.73, 0.83);
  detail("reference peak %.4f at x=%.4f", ref_peak, ref_at);
  bool pass = true;
  for (const auto& name : all_teno_m()) {
    const auto r = bench::run_case(spec, SchemeConfig::from_name(name));
    const auto l = line_of(r.state);
    const auto [pk, at] = peak(l.x, l.rho, 0.73, 0.83);
    const double rel = std::abs(pk - ref_peak) / ref_peak;
    const bool ok = all_finite(r.state) && rel <= 0.1;
    detail("%-13s peak %.4f at x=%.4f rel.diff=%.4f fallbacks=%ld seconds=%.2f %s", name.c_str(),
           pk, at, rel, r.report.fallback_activations, r.report.wall_seconds,
           ok ? "ok" : "VIOLATION");
    if (!ok) pass = false;
  }
  return pass;
}

bool double_mach() {
  const auto spec = bench::make_case("dmr");
  bench::RunOptions opts;
  opts.nx = 400;
  opts.ny = 100;
  bool pass = true;
  for (const auto& name : all_teno_m()) {
    try {
      const auto r = bench::run_case(spec, SchemeConfig::from_name(name), opts);
      const bool ok = all_finite(r.state) && r.report.fallback_activations == 0 &&
                      r.report.rho_min >= 1.3 && r.report.rho_max <= 23.0;
      detail("%-13s steps=%ld fallbacks=%ld rho=[%.4f, %.4f] seconds=%.1f %s", name.c_str(),
             r.report.steps, r.report.fallback_activations, r.report.rho_min, r.report.rho_max,
             r.report.wall_seconds, ok ? "ok" : "VIOLATION");
      if (!ok) pass = false;
    } catch (const tenom::InstabilityError& e) {
      detail("%-13s unstable: %s", name.c_str(), e.what());
      pass = false;
    }
  }
  return pass;
}

double mirror_error(const Field& f) {
  const auto& g = f.grid();
  double worst = 0.0;
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0] / 2; ++i) {
      worst = std::max(worst, std::abs(f(i, j, 0) - f(g.n[0] - 1 - i, j, 0)));
    }
  }
  return worst;
}

bool rayleigh_taylor() {
  const auto spec = bench::make_case("rt");
  bool pass = true;
  std::vector<double> sym;
  for (const auto& name : {std::string("teno6m-va"), std::string("teno6m-mp")}) {
    const auto r = bench::run_case(spec, SchemeConfig::from_name(name));
    const auto& rep = r.report;
    const double drift =
        std::abs(rep.mass_final + rep.boundary_outflow - rep.mass_initial) / rep.mass_initial;
    sym.push_back(mirror_error(r.state));
    const bool ok = all_finite(r.state) && drift <= 1e-10;
    detail("%-13s mass budget drift=%.3e (boundary outflow %.3e) mirror error=%.3e "
           "fallbacks=%ld seconds=%.1f %s",
           name.c_str(), drift, rep.boundary_outflow, sym.back(), rep.fallback_activations,
           rep.wall_seconds, ok ? "ok" : "VIOLATION");
    if (!ok) pass = false;
  }
  const bool order = sym[0] < sym[1];
  detail("symmetry: VA %.3e %s MP %.3e", sym[0], order ? "<" : ">=", sym[1]);
  return pass && order;
}

/// Rightmost cell centre whose density exceeds `level`.
double front(const Line& l, double level) {
  for (std::size_t i = l.x.size(); i-- > 0;) {
    if (l.rho[i] > level) return l.x[i];
  }
  return l.x.front();
}

bool le_blanc() {
  const auto spec = bench::make_case("leblanc");
  auto cfg = SchemeConfig::from_name("teno8am-mp");
  cfg.mp.curvature = tenom::limiter::Curvature::MM;
  cfg.mp.beta = 1.0;
  const auto ref = bench::make_reference(spec);
  Line rl;
  for (int i = 0; i < ref.grid.n[0]; ++i) {
    rl.x.push_back(ref.grid.center(0, i));
    rl.rho.push_back(ref.rho[i]);
    rl.u.push_back(ref.u[i]);
  }
  // Pre-shock density is 1e-3 and the strong-shock compression is 4.
  const double shock_level = 2.5e-3;
  const double contact_level = 2e-2;
  const double diaphragm = 3.0;
  const double ref_shock = front(rl, shock_level);

  const auto r = bench::run_case(spec, cfg);
  const auto l = line_of(r.state);
  const double shock = front(l, shock_level);
  const double contact = front(l, contact_level);
  const double shift = std::abs(shock - ref_shock) / (ref_shock - diaphragm);

  // Monotonicity defect: largest drop below the running maximum of u between
  // the contact and the shock, skipping three cells at either end.
  const double dx = l.x[1] - l.x[0];
  const int ic = static_cast<int>(std::lround((contact - l.x[0]) / dx));
  const int is = static_cast<int>(std::lround((shock - l.x[0]) / dx));
  const double peak_u = *std::max_element(l.u.begin(), l.u.end());
  double run = -1e300;
  double drop = 0.0;
  for (int i = ic + 3; i <= is - 3; ++i) {
    run = std::max(run, l.u[i]);
    drop = std::max(drop, run - l.u[i]);
  }
  const double defect = drop / peak_u;
  detail("teno8am-mp (MM, beta=1) seconds=%.1f fallbacks=%ld", r.report.wall_seconds,
         r.report.fallback_activations);
  detail("shock x=%.4f reference x=%.4f relative shift=%.4f (limit 0.02 of distance travelled)",
         shock, ref_shock, shift);
  detail("contact x=%.4f peak u=%.5f monotonicity defect=%.3e (limit 1e-3)", contact, peak_u,
         defect);
  return all_finite(r.state) && shift <= 0.02 && defect < 1e-3;
}

// Property suites ----------------------------------------------------------

bool property(const char* name, bool ok) {
  detail("%-34s %s", name, ok ? "ok" : "VIOLATION");
  return ok;
}

bool table_rows() {
  for (const auto& c : tenom::stencil::kCandidates) {
    double s = 0.0;
    for (int m = 0; m < c.width; ++m) s += c.coeff[m];
    if (std::abs(s - 1.0) > 1e-15) return false;
  }
  return true;
}

bool beta_oracle_agreement() {
  namespace st = tenom::stencil;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    for (int order : {6, 8}) {
      std::vector<double> w(order);
      for (auto& x : w) x = dist(rng);
      for (int k = 0; k < st::num_candidates(order); ++k) {
        const auto& c = st::kCandidates[k];
        const int first = st::upwind_index(order) + c.offset;
        const double o = tenom_test::beta_oracle(
            c.offset, std::vector<double>(w.begin() + first, w.begin() + first + c.width));
        if (std::abs(st::beta_candidate(order, k, w) - o) > 1e-12 * std::max(1.0, o)) return false;
      }
      const double o = tenom_test::beta_oracle(-st::upwind_index(order), w);
      if (std::abs(st::beta_global(w) - o) > 1e-12 * std::max(1.0, o)) return false;
    }
  }
  return true;
}

bool order_statistics() {
  namespace lim = tenom::limiter;
  const double v[] = {-3, -1, 0, 0.5, 2};
  for (double a : v) {
    for (double b : v) {
      for (double c : v) {
        double s[] = {a, b, c};
        std::sort(s, s + 3);
        if (lim::median(a, b, c) != s[1]) return false;
        for (double d : v) {
          const bool pos = a > 0 && b > 0 && c > 0 && d > 0;
          const bool neg = a < 0 && b < 0 && c < 0 && d < 0;
          const double small = std::min({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
          const double want = pos ? small : (neg ? -small : 0.0);
          if (lim::minmod4(a, b, c, d) != want) return false;
        }
      }
      const double want2 = a * b > 0 ? std::copysign(std::min(std::abs(a), std::abs(b)), a) : 0.0;
      if (lim::minmod2(a, b) != want2) return false;
    }
  }
  return true;
}

bool mp_clamp() {
  namespace lim = tenom::limiter;
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int t = 0; t < 20000; ++t) {
    double f[5];
    for (auto& x : f) x = dist(rng);
    const double fhat = 2.0 * dist(rng);
    const auto b = lim::mp_bounds(f, {});
    const double out = lim::mp_filter(fhat, b);
    if (out < b.lo - 1e-15 || out > b.hi + 1e-15) return false;
    if (fhat >= b.lo && fhat <= b.hi && out != fhat) return false;
  }
  return true;
}

template <int M>
bool eigen_inverse() {
  namespace eu = tenom::euler;
  std::mt19937 rng(M);
  std::uniform_real_distribution<double> pos(0.2, 3.0);
  std::uniform_real_distribution<double> vel(-2.0, 2.0);
  for (int t = 0; t < 500; ++t) {
    auto state = [&] {
      return eu::pack<M>(eu::prim_to_cons({pos(rng), {vel(rng), vel(rng)}, pos(rng)}, 1.4));
    };
    const auto e = eu::eigensystem<M>(eu::roe_average<M>(state(), state(), 1.4), 1.4);
    for (int p = 0; p < M; ++p) {
      for (int q = 0; q < M; ++q) {
        double s = 0.0;
        for (int k = 0; k < M; ++k) s += e.left[p][k] * e.right[k][q];
        if (std::abs(s - (p == q ? 1.0 : 0.0)) > 1e-12) return false;
      }
    }
  }
  return true;
}

bool flux_split_sum() {
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int t = 0; t < 1000; ++t) {
    const tenom::euler::Vec<4> f{dist(rng), dist(rng), dist(rng), dist(rng)};
    const tenom::euler::Vec<4> u{dist(rng), dist(rng), dist(rng), dist(rng)};
    const auto [fp, fm] = tenom::euler::rusanov_split<4>(f, u, std::abs(dist(rng)));
    for (int s = 0; s < 4; ++s) {
      if (std::abs(fp[s] + fm[s] - f[s]) > 1e-14 * (1.0 + std::abs(f[s]))) return false;
    }
  }
  return true;
}

bool rk3_polynomial() {
  using C = std::complex<double>;
  for (const C lambda : {C(-1.0, 0.0), C(-0.2, 1.7), C(0.0, -2.0)}) {
    const double dt = 0.4;
    const auto out = tenom::ssp_rk3_step(std::vector<C>{1.0}, dt, [&](const std::vector<C>& v) {
      return std::vector<C>{lambda * v[0]};
    });
    const C z = lambda * dt;
    if (std::abs(out[0] - (1.0 + z + z * z / 2.0 + z * z * z / 6.0)) > 1e-15) return false;
  }
  return true;
}

bool periodic_conservation() {
  for (const auto& name : tenom::scheme_names()) {
    tenom::Problem p;
    p.grid = tenom::UniformGrid::line(0.0, 1.0, 64, 4);
    p.model = {tenom::Equations::Euler, 1.4, 1.0};
    p.bc = tenom::BoundarySpec::uniform(tenom::BoundaryKind::Periodic);
    p.scheme = SchemeConfig::from_name(name);
    Field u(p.grid, 3);
    for (int i = 0; i < 64; ++i) {
      const double x = p.grid.center(0, i);
      const auto c = tenom::euler::prim_to_cons(
          {x > 0.25 && x < 0.6 ? 2.0 : 1.0, {0.8, 0.0}, x > 0.5 ? 1.5 : 1.0}, 1.4);
      u(i, 0, 0) = c.rho;
      u(i, 0, 1) = c.mom[0];
      u(i, 0, 2) = c.energy;
    }
    tenom::Solver s(p, u);
    auto sum = [](const Field& f, int c) {
      double t = 0.0;
      for (int i = 0; i < f.grid().n[0]; ++i) t += f(i, 0, c);
      return t;
    };
    for (int k = 0; k < 20; ++k) {
      double before[3];
      for (int c = 0; c < 3; ++c) before[c] = sum(s.state(), c);
      s.step(s.compute_dt(0.4));
      for (int c = 0; c < 3; ++c) {
        if (std::abs(sum(s.state(), c) - before[c]) > 1e-13 * std::abs(before[c])) return false;
      }
    }
  }
  return true;
}

bool mirror_equivariance() {
  const auto spec = bench::make_case("sod");
  for (const auto& name : {"teno6m-mp", "teno8am-tvd5"}) {
    const auto problem = bench::make_problem(spec, SchemeConfig::from_name(name), 100, 1);
    const auto u = bench::initial_field(spec, problem.grid);
    Field m(problem.grid, 3);
    for (int i = 0; i < 100; ++i) {
      m(i, 0, 0) = u(99 - i, 0, 0);
      m(i, 0, 1) = -u(99 - i, 0, 1);
      m(i, 0, 2) = u(99 - i, 0, 2);
    }
    tenom::TimeConfig tc;
    tc.t_end = spec.t_end;
    tenom::Solver a(problem, u);
    tenom::Solver b(problem, m);
    a.advance(tc);
    b.advance(tc);
    for (int i = 0; i < 100; ++i) {
      if (std::abs(b.state()(i, 0, 0) - a.state()(99 - i, 0, 0)) > 1e-10) return false;
      if (std::abs(b.state()(i, 0, 1) + a.state()(99 - i, 0, 1)) > 1e-10) return false;
      if (std::abs(b.state()(i, 0, 2) - a.state()(99 - i, 0, 2)) > 1e-10) return false;
    }
  }
  return true;
}

bool property_suites() {
  bool pass = true;
  pass &= property("candidate table rows sum to one", table_rows());
  pass &= property("beta vs quadrature oracle 1e-12", beta_oracle_agreement());
  pass &= property("minmod/median order statistics", order_statistics());
  pass &= property("MP clamp", mp_clamp());
  pass &= property("L R = I to 1e-12 (1D and 2D)", eigen_inverse<3>() && eigen_inverse<4>());
  pass &= property("flux-split sum identity", flux_split_sum());
  pass &= property("SSP-RK3 amplification polynomial", rk3_polynomial());
  pass &= property("periodic conservation 1e-13", periodic_conservation());
  pass &= property("mirror equivariance 1e-10", mirror_equivariance());
  return pass;
}

struct Criterion {
  int id;
  const char* title;
  std::function<bool()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "order of accuracy", order_of_accuracy},
      {2, "smooth-field equivalence", smooth_equivalence},
      {3, "ADR fidelity", adr_fidelity},
      {4, "shock tubes", shock_tubes},
      {5, "Shu-Osher", shu_osher},
      {6, "blast waves", blast_waves},
      {7, "double Mach reflection", double_mach},
      {8, "Rayleigh-Taylor", rayleigh_taylor},
      {9, "Le Blanc", le_blanc},
      {10, "property suites", property_suites},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int a = 1; a < argc; ++a) {
    const std::string_view arg = argv[a];
    if (arg == "--criterion" && a + 1 < argc) {
      selected.push_back(std::atoi(argv[++a]));
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]...\n", argv[0]);
      return 2;
    }
  }
  int status = 0;
  for (const auto& c : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
      continue;
    }
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = c.run();
    } catch (const std::exception& e) {
      detail("error: %s", e.what());
      status = 2;
    }
    std::printf("criterion %d %s: %s (%.1f s)\n", c.id, c.title, pass ? "PASS" : "FAIL",
                seconds_since(t0));
    std::fflush(stdout);
    if (!pass && status == 0) status = 1;
  }
  return status;
}
