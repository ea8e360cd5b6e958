#include "tenom/cases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"

#include "tenom/error.hpp"

namespace tenom::bench {

namespace {

using euler::PrimState;
using nlohmann::json;

PrimState prim(double rho, double u, double v, double p) { return {rho, {u, v}, p}; }

constexpr double kDmrSlope = 1.732;
constexpr double kDmrFoot = 0.1667;

PrimState dmr_post() { return prim(8.0, 7.145, -4.125, 116.8333); }
PrimState dmr_pre() { return prim(1.4, 0.0, 0.0, 1.0); }

CaseSpec tube(std::string name, double x0, double x1, int n, double t_end, BoundaryKind kind) {
  CaseSpec s;
  s.name = std::move(name);
  s.domain = {x0, x1, 0.0, 1.0};
  s.resolution = {n, 1};
  s.bc = BoundarySpec::uniform(kind);
  s.t_end = t_end;
  return s;
}

CaseSpec advection(std::string name, double x1, int n, double t_end) {
  CaseSpec s = tube(std::move(name), 0.0, x1, n, t_end, BoundaryKind::Periodic);
  s.equations = Equations::Advection;
  s.reference.kind = ReferenceKind::Exact;
  return s;
}

double gauss_g(double x, double beta, double z) { return std::exp(-beta * (x - z) * (x - z)); }

double ellipse_f(double x, double alpha, double a) {
  return std::sqrt(std::max(1.0 - alpha * alpha * (x - a) * (x - a), 0.0));
}

double multiwave(double x) {
  constexpr double a = 0.5;
  constexpr double z = -0.7;
  constexpr double theta = 0.005;
  constexpr double alpha = 10.0;
  const double beta = std::log(2.0) / (36.0 * theta * theta);
  if (x >= 0.2 && x < 0.4) {
    return (gauss_g(x - 1.0, beta, z - theta) + gauss_g(x - 1.0, beta, z + theta) +
            4.0 * gauss_g(x - 1.0, beta, z)) /
           6.0;
  }
  if (x >= 0.6 && x <= 0.8) return 1.0;
  if (x >= 1.0 && x <= 1.2) return 1.0 - std::abs(10.0 * (x - 1.1));
  if (x >= 1.4 && x < 1.6) {
    return (ellipse_f(x - 1.0, alpha, a - theta) + ellipse_f(x - 1.0, alpha, a + theta) +
            4.0 * ellipse_f(x - 1.0, alpha, a)) /
           6.0;
  }
  return 0.0;
}

PrimState euler_initial(const CaseSpec& s, double x, double y) {
  const auto& n = s.name;
  if (n == "sod") return x < 0.5 ? prim(1.0, 0.0, 0.0, 1.0) : prim(0.125, 0.0, 0.0, 0.1);
  if (n == "lax") return x < 0.5 ? prim(0.445, 0.698, 0.0, 3.528) : prim(0.5, 0.0, 0.0, 0.5710);
  if (n == "shu-osher") {
    if (x < 1.0) return prim(3.857, 2.629, 0.0, 10.333);
    return prim(1.0 + 0.2 * std::sin(5.0 * (x - 5.0)), 0.0, 0.0, 1.0);
  }
  if (n == "blast") {
    if (x < 0.1) return prim(1.0, 0.0, 0.0, 1000.0);
    if (x < 0.9) return prim(1.0, 0.0, 0.0, 0.01);
    return prim(1.0, 0.0, 0.0, 100.0);
  }
  if (n == "leblanc") {
    return x < 3.0 ? prim(1.0, 0.0, 0.0, 2.0 / 3.0 * 1e-1) : prim(1e-3, 0.0, 0.0, 2.0 / 3.0 * 1e-10);
  }
  if (n == "rt") {
    const bool lower = y < 0.5;
    const double rho = lower ? 2.0 : 1.0;
    const double p = lower ? 1.0 + 2.0 * y : y + 1.5;
    const double c = std::sqrt(s.gamma * p / rho);
    return prim(rho, 0.0, -0.025 * c * std::cos(8.0 * std::numbers::pi * x), p);
  }
  if (n == "dmr") return y < kDmrSlope * (x - kDmrFoot) ? dmr_pre() : dmr_post();
  throw Error("cases: no initial condition for '" + n + "'");
}

json prim_json(const PrimState& q) { return json::array({q.rho, q.vel[0], q.vel[1], q.p}); }

PrimState prim_from(const json& j) {
  return prim(j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>(),
              j.at(3).get<double>());
}

template <class E, std::size_t N>
std::string enum_name(E e, const std::array<const char*, N>& names) {
  return names.at(static_cast<std::size_t>(e));
}

template <class E, std::size_t N>
E enum_from(const std::string& s, const std::array<const char*, N>& names, const char* what) {
  for (std::size_t i = 0; i < N; ++i) {
    if (s == names[i]) return static_cast<E>(i);
  }
  throw Error(std::string("cases: unknown ") + what + " '" + s + "'");
}

constexpr std::array<const char*, 2> kEquations{"advection", "euler"};
constexpr std::array<const char*, 2> kFlux{"rusanov", "roe-ef"};
constexpr std::array<const char*, 3> kReference{"none", "exact", "fine-grid"};

}  // namespace

const std::vector<std::string>& case_names() {
  static const std::vector<std::string> names{"gauss", "multiwave", "uniform", "sod",
                                              "lax",   "shu-osher", "blast",   "rt",
                                              "dmr",   "leblanc"};
  return names;
}

CaseSpec make_case(std::string_view name) {
  if (name == "gauss") return advection("gauss", 1.0, 64, 1.0);
  if (name == "multiwave") return advection("multiwave", 2.0, 200, 2.0);
  if (name == "uniform") return advection("uniform", 1.0, 64, 1.0);
  if (name == "sod" || name == "lax") {
    auto s = tube(std::string(name), 0.0, 1.0, 100, name == "sod" ? 0.2 : 0.14,
                  BoundaryKind::ZeroGradient);
    s.reference = {ReferenceKind::FineGrid, 2000, euler::FluxKind::Rusanov};
    return s;
  }
  if (name == "shu-osher") {
    auto s = tube("shu-osher", 0.0, 10.0, 200, 1.8, BoundaryKind::ZeroGradient);
    s.reference = {ReferenceKind::FineGrid, 2000, euler::FluxKind::Rusanov};
    return s;
  }
  if (name == "blast") {
    auto s = tube("blast", 0.0, 1.0, 400, 0.038, BoundaryKind::Reflective);
    s.flux = euler::FluxKind::RoeEntropyFix;
    s.reference = {ReferenceKind::FineGrid, 2500, euler::FluxKind::RoeEntropyFix};
    return s;
  }
  if (name == "leblanc") {
    auto s = tube("leblanc", 0.0, 9.0, 900, 6.0, BoundaryKind::ZeroGradient);
    s.gamma = 5.0 / 3.0;
    s.reference = {ReferenceKind::FineGrid, 2500, euler::FluxKind::Rusanov};
    return s;
  }
  if (name == "rt") {
    CaseSpec s;
    s.name = "rt";
    s.dims = 2;
    s.domain = {0.0, 0.25, 0.0, 1.0};
    s.resolution = {64, 256};
    s.gamma = 5.0 / 3.0;
    s.bc[Side::XLo].kind = BoundaryKind::Reflective;
    s.bc[Side::XHi].kind = BoundaryKind::Reflective;
    s.bc[Side::YLo] = {BoundaryKind::Fixed, prim(2.0, 0.0, 0.0, 1.0)};
    s.bc[Side::YHi] = {BoundaryKind::Fixed, prim(1.0, 0.0, 0.0, 2.5)};
    s.source = {true, 1.0, 1};
    s.t_end = 1.95;
    return s;
  }
  if (name == "dmr") {
    CaseSpec s;
    s.name = "dmr";
    s.dims = 2;
    s.domain = {0.0, 4.0, 0.0, 1.0};
    s.resolution = {800, 200};
    s.bc[Side::XLo] = {BoundaryKind::Fixed, dmr_post()};
    s.bc[Side::XHi].kind = BoundaryKind::ZeroGradient;
    s.bc[Side::YLo] = {BoundaryKind::DmrBottom, dmr_post()};
    s.bc[Side::YHi] = {BoundaryKind::DmrTop, dmr_post(), dmr_pre()};
    s.t_end = 0.2;
    return s;
  }
  throw Error("cases: unknown case '" + std::string(name) + "'");
}

std::string case_to_json(const CaseSpec& s) {
  json sides = json::array();
  for (const auto& sc : s.bc.sides) {
    sides.push_back({{"kind", std::string(to_string(sc.kind))},
                     {"state", prim_json(sc.state)},
                     {"alt", prim_json(sc.alt)},
                     {"split", sc.split}});
  }
  const json j{
      {"name", s.name},
      {"dims", s.dims},
      {"domain", s.domain},
      {"resolution", s.resolution},
      {"equations", enum_name(s.equations, kEquations)},
      {"gamma", s.gamma},
      {"speed", s.speed},
      {"boundaries", sides},
      {"source", {{"gravity", s.source.gravity}, {"g", s.source.g}, {"axis", s.source.axis}}},
      {"flux", enum_name(s.flux, kFlux)},
      {"t_end", s.t_end},
      {"reference",
       {{"kind", enum_name(s.reference.kind, kReference)},
        {"n", s.reference.n},
        {"flux", enum_name(s.reference.flux, kFlux)}}},
  };
  return j.dump(2);
}

CaseSpec case_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    CaseSpec s;
    s.name = j.at("name").get<std::string>();
    s.dims = j.at("dims").get<int>();
    s.domain = j.at("domain").get<std::array<double, 4>>();
    s.resolution = j.at("resolution").get<std::array<int, 2>>();
    s.equations = enum_from<Equations>(j.at("equations").get<std::string>(), kEquations, "equations");
    s.gamma = j.at("gamma").get<double>();
    s.speed = j.at("speed").get<double>();
    const auto& sides = j.at("boundaries");
    if (sides.size() != 4) throw Error("cases: expected four boundary sides");
    for (std::size_t k = 0; k < 4; ++k) {
      auto& sc = s.bc.sides[k];
      sc.kind = boundary_kind_from_string(sides[k].at("kind").get<std::string>());
      sc.state = prim_from(sides[k].at("state"));
      sc.alt = prim_from(sides[k].at("alt"));
      sc.split = sides[k].at("split").get<double>();
    }
    const auto& src = j.at("source");
    s.source = {src.at("gravity").get<bool>(), src.at("g").get<double>(), src.at("axis").get<int>()};
    s.flux = enum_from<euler::FluxKind>(j.at("flux").get<std::string>(), kFlux, "flux");
    s.t_end = j.at("t_end").get<double>();
    const auto& ref = j.at("reference");
    s.reference.kind =
        enum_from<ReferenceKind>(ref.at("kind").get<std::string>(), kReference, "reference");
    s.reference.n = ref.at("n").get<int>();
    s.reference.flux = enum_from<euler::FluxKind>(ref.at("flux").get<std::string>(), kFlux, "flux");
    return s;
  } catch (const json::exception& e) {
    throw Error(std::string("cases: malformed case description: ") + e.what());
  }
}

UniformGrid case_grid(const CaseSpec& s, int n_ghost) {
  return case_grid(s, s.resolution[0], s.resolution[1], n_ghost);
}

UniformGrid case_grid(const CaseSpec& s, int nx, int ny, int n_ghost) {
  if (s.dims == 1) return UniformGrid::line(s.domain[0], s.domain[1], nx, n_ghost);
  return UniformGrid::rect(s.domain[0], s.domain[1], s.domain[2], s.domain[3], nx, ny, n_ghost);
}

double advection_profile(std::string_view name, double x) {
  if (name == "gauss") return std::exp(-300.0 * (x - 0.5) * (x - 0.5));
  if (name == "multiwave") return multiwave(x);
  if (name == "uniform") return 1.0;
  throw Error("cases: '" + std::string(name) + "' is not an advection case");
}

Field initial_field(const CaseSpec& s, const UniformGrid& g) {
  const int m = s.model().components(s.dims);
  Field f(g, m);
  for (int j = 0; j < g.n[1]; ++j) {
    for (int i = 0; i < g.n[0]; ++i) {
      const double x = g.center(0, i);
      if (s.equations == Equations::Advection) {
        f(i, j, 0) = advection_profile(s.name, x);
        continue;
      }
      const double y = s.dims == 2 ? g.center(1, j) : 0.0;
      const auto u = euler::prim_to_cons(euler_initial(s, x, y), s.gamma);
      double* c = f.cell(i, j);
      if (m == 3) {
        c[0] = u.rho;
        c[1] = u.mom[0];
        c[2] = u.energy;
      } else {
        c[0] = u.rho;
        c[1] = u.mom[0];
        c[2] = u.mom[1];
        c[3] = u.energy;
      }
    }
  }
  return f;
}

std::vector<double> exact_solution(const CaseSpec& s, const UniformGrid& g, double t) {
  if (s.reference.kind != ReferenceKind::Exact) {
    throw Error("cases: '" + s.name + "' has no exact solution");
  }
  const double x0 = s.domain[0];
  const double len = s.domain[1] - s.domain[0];
  std::vector<double> out(static_cast<std::size_t>(g.n[0]));
  for (int i = 0; i < g.n[0]; ++i) {
    double xi = std::fmod(g.center(0, i) - x0 - s.speed * t, len);
    if (xi < 0.0) xi += len;
    out[static_cast<std::size_t>(i)] = advection_profile(s.name, x0 + xi);
  }
  return out;
}

Problem make_problem(const CaseSpec& s, const SchemeConfig& scheme, int nx, int ny) {
  Problem p;
  p.grid = case_grid(s, nx, ny, scheme.ghost_cells());
  p.model = s.model();
  p.bc = s.bc;
  p.scheme = scheme;
  p.flux = s.flux;
  p.source = s.source;
  p.validate();
  return p;
}

}  // namespace tenom::bench
