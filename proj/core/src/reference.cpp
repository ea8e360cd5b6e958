#include "tenom/reference.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <unistd.h>

#include "tenom/error.hpp"

namespace tenom::bench {

namespace {

constexpr const char* kMagic = "tenom-reference";
constexpr int kFormat = 1;

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::optional<ReferenceProfile> read_cache(const std::filesystem::path& path,
                                           const std::string& key, const UniformGrid& grid) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string magic;
  std::string file_key;
  int format = 0;
  int n = 0;
  if (!(in >> magic >> format >> file_key >> n)) return std::nullopt;
  if (magic != kMagic || format != kFormat || file_key != key || n != grid.n[0]) {
    return std::nullopt;
  }
  ReferenceProfile r;
  r.grid = grid;
  r.rho.resize(n);
  r.u.resize(n);
  r.p.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = 0.0;
    if (!(in >> x >> r.rho[i] >> r.u[i] >> r.p[i])) return std::nullopt;
    if (std::abs(x - grid.center(0, i)) > 1e-9 * (1.0 + std::abs(x))) return std::nullopt;
  }
  std::string end;
  int count = 0;
  if (!(in >> end >> count) || end != "end" || count != n) return std::nullopt;
  return r;
}

void write_cache(const std::filesystem::path& path, const std::string& key,
                 const ReferenceProfile& r) {
  std::filesystem::create_directories(path.parent_path());
  std::random_device rd;
  const auto tmp = path.string() + ".tmp." + std::to_string(::getpid()) + "." +
                   std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) throw Error("reference: cannot write cache file " + tmp);
    out.precision(17);
    const int n = r.grid.n[0];
    out << kMagic << ' ' << kFormat << ' ' << key << ' ' << n << '\n';
    for (int i = 0; i < n; ++i) {
      out << r.grid.center(0, i) << ' ' << r.rho[i] << ' ' << r.u[i] << ' ' << r.p[i] << '\n';
    }
    out << "end " << n << '\n';
    if (!out) throw Error("reference: failed while writing " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("TENOM_CACHE_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return std::filesystem::temp_directory_path() / "tenom-cache";
}

std::string reference_key(const CaseSpec& spec) {
  std::ostringstream recipe;
  recipe << case_to_json(spec) << "|weno-js5|format=" << kFormat;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(recipe.str())));
  return buf;
}

ReferenceProfile compute_reference(const CaseSpec& spec) {
  if (spec.reference.kind != ReferenceKind::FineGrid || spec.dims != 1) {
    throw Error("reference: '" + spec.name + "' has no fine-grid recipe");
  }
  auto fine = spec;
  fine.flux = spec.reference.flux;
  const auto scheme = SchemeConfig::from_name("weno-js5");
  const auto problem = make_problem(fine, scheme, spec.reference.n, 1);
  Solver solver(problem, initial_field(fine, problem.grid));
  TimeConfig tc;
  tc.t_end = spec.t_end;
  solver.advance(tc);
  ReferenceProfile r;
  r.grid = problem.grid;
  const auto& u = solver.state();
  for (int i = 0; i < r.grid.n[0]; ++i) {
    const auto q = euler::cons_to_prim({u(i, 0, 0), {u(i, 0, 1), 0.0}, u(i, 0, 2)}, spec.gamma);
    r.rho.push_back(q.rho);
    r.u.push_back(q.vel[0]);
    r.p.push_back(q.p);
  }
  return r;
}

ReferenceProfile make_reference(const CaseSpec& spec, const std::filesystem::path& cache_dir) {
  if (spec.reference.kind != ReferenceKind::FineGrid || spec.dims != 1) {
    throw Error("reference: '" + spec.name + "' has no fine-grid recipe");
  }
  const auto key = reference_key(spec);
  const auto path = cache_dir / (spec.name + "-" + key + ".ref");
  const auto grid = case_grid(spec, spec.reference.n, 1, 3);
  if (auto cached = read_cache(path, key, grid)) return *cached;
  auto r = compute_reference(spec);
  write_cache(path, key, r);
  return r;
}

}  // namespace tenom::bench
