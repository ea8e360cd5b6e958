#include "tenom/norms.hpp"

#include <algorithm>
#include <cmath>

#include "tenom/error.hpp"

namespace tenom::bench {

namespace {
constexpr double kRoundOff = 1e-13;
}

ErrorNorms error_norms(std::span<const double> numerical, std::span<const double> reference) {
  if (numerical.size() != reference.size() || numerical.empty()) {
    throw Error("error_norms: shape mismatch");
  }
  ErrorNorms e;
  for (std::size_t i = 0; i < numerical.size(); ++i) {
    const double d = std::abs(numerical[i] - reference[i]);
    e.l1 += d;
    e.l2 += d * d;
    e.linf = std::max(e.linf, d);
  }
  const auto n = static_cast<double>(numerical.size());
  e.l1 /= n;
  e.l2 = std::sqrt(e.l2 / n);
  return e;
}

std::vector<double> restrict_to(std::span<const double> fine, const UniformGrid& fg,
                                const UniformGrid& cg) {
  if (fg.dims != 1 || cg.dims != 1) throw Error("restrict_to: one-dimensional grids only");
  if (static_cast<int>(fine.size()) != fg.n[0]) throw Error("restrict_to: fine profile length");
  if (fg == cg) return {fine.begin(), fine.end()};
  std::vector<double> out(static_cast<std::size_t>(cg.n[0]));
  const int last = fg.n[0] - 1;
  for (int i = 0; i < cg.n[0]; ++i) {
    const double s = (cg.center(0, i) - fg.origin[0]) / fg.dx[0] - 0.5;
    if (s <= 0.0) {
      out[i] = fine[0];
    } else if (s >= last) {
      out[i] = fine[static_cast<std::size_t>(last)];
    } else {
      const int k = static_cast<int>(std::floor(s));
      const double w = s - k;
      out[i] = (1.0 - w) * fine[k] + w * fine[k + 1];
    }
  }
  return out;
}

std::optional<double> observed_order(double e_coarse, double e_fine, double ratio) {
  if (!(e_coarse > kRoundOff) || !(e_fine > kRoundOff)) return std::nullopt;
  return std::log(e_coarse / e_fine) / std::log(ratio);
}

}  // namespace tenom::bench
