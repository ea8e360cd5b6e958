#pragma once

// Solver runs, convergence studies and their on-disk outputs.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tenom/adr.hpp"
#include "tenom/cases.hpp"
#include "tenom/norms.hpp"
#include "tenom/reference.hpp"

namespace tenom::bench {

struct RunOptions {
  std::optional<int> nx{};
  std::optional<int> ny{};
  std::optional<double> t_end{};
  double cfl = 0.4;
  std::optional<double> dt_override{};
  /// Output directory; nothing is written when empty.
  std::filesystem::path out_dir{};
  /// Compare against the case's reference recipe when it has one.
  bool compute_errors = true;
  /// Reference cache; empty means default_cache_dir().
  std::filesystem::path cache_dir{};
};

struct RunReport {
  std::string case_name;
  std::string scheme;
  int nx = 0;
  int ny = 1;
  double t_end = 0.0;
  double wall_seconds = 0.0;
  long steps = 0;
  long fallback_activations = 0;
  std::optional<ErrorNorms> errors{};
  double rho_min = 0.0;
  double rho_max = 0.0;
  double mass_initial = 0.0;
  double mass_final = 0.0;
  double boundary_outflow = 0.0;
  std::vector<std::string> files;
};

struct RunResult {
  RunReport report;
  Field state;
};

/// Runs one case to its end time. Throws tenom::InstabilityError with the
/// failing step and location when the solution breaks down.
RunResult run_case(const CaseSpec& spec, const SchemeConfig& scheme, const RunOptions& opts = {});

std::string report_to_json(const RunReport& report);

/// One-line machine-readable error record.
std::string error_to_json(const std::exception& e);

/// Interior primitive variables (rho, u[, v], p) of an Euler field, or the
/// scalar for advection, as named columns.
struct Profile {
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;
};
Profile primitive_profile(const Field& u, const Model& model);

void write_profile_csv(const std::filesystem::path& path, const Field& u, const Model& model);
void write_field_csv(const std::filesystem::path& path, const Field& u, const Model& model);
void write_density_matrix(const std::filesystem::path& path, const Field& u);
void write_adr_csv(const std::filesystem::path& path, const std::vector<adr::AdrPoint>& rows);

/// Time step used by convergence studies: the CFL step shrunk by
/// (dx/dx0)^(order/3 - 1) so the third-order time error falls like dx^order.
double convergence_dt(int order, double dx, double dx0, double cfl = 0.4);

struct ConvergenceRow {
  int n = 0;
  ErrorNorms errors{};
  std::optional<double> order{};  ///< Linf order against the previous row
  double seconds = 0.0;
};

/// Resolution study of an exact-reference case; needs at least two sizes.
std::vector<ConvergenceRow> convergence_table(const CaseSpec& spec, const SchemeConfig& scheme,
                                              const std::vector<int>& sizes);

}  // namespace tenom::bench
