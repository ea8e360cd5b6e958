#pragma once

#include <complex>
#include <vector>

#include "tenom/scheme.hpp"

namespace tenom::adr {

/// Probe setup. The wavenumber grid is phi_k = 2 pi k / n for k = 1..n/2.
struct AdrConfig {
  int n = 64;
  double amplitude = 1.0;
  double cfl = 1e-3;
  double speed = 1.0;

  bool operator==(const AdrConfig&) const = default;
};

struct AdrPoint {
  double phi = 0.0;
  double re = 0.0;
  double im = 0.0;
};

/// Interface coefficients c_m of the linear path, f_{i+1/2} = sum c_m f_{i+m}
/// for m = 1 - K/2 .. K/2. Empty for families without a linear path.
std::vector<double> linear_coefficients(const SchemeConfig& scheme);

/// Analytic modified wavenumber of the linear path:
/// -i (1 - e^{-i phi}) sum_m c_m e^{i phi m}.
std::complex<double> analytic_symbol(const SchemeConfig& scheme, double phi);

/// Modified wavenumber from one SSP-RK3 step of the full semi-discretisation
/// applied to a single cosine mode. phi must be a bin of the probe grid.
AdrPoint modified_wavenumber(const SchemeConfig& scheme, double phi, const AdrConfig& cfg = {});

/// Every bin of the probe grid in increasing phi, ending at pi.
std::vector<AdrPoint> adr_sweep(const SchemeConfig& scheme, const AdrConfig& cfg = {});

}  // namespace tenom::adr
