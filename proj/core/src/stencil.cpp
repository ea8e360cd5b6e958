#include "tenom/stencil.hpp"

#include <numeric>
#include <string>

#include "tenom/error.hpp"

namespace tenom::stencil {

namespace {

void require_order(int order) {
  if (order != 6 && order != 8) {
    throw Error("stencil: unsupported order " + std::to_string(order));
  }
}

void require_window(int order, std::span<const double> w) {
  require_order(order);
  if (static_cast<int>(w.size()) != order) {
    throw Error("stencil: window length " + std::to_string(w.size()) +
                " does not match order " + std::to_string(order));
  }
}

void require_candidate(int order, int k) {
  if (k < 0 || k >= num_candidates(order)) {
    throw Error("stencil: candidate " + std::to_string(k) + " out of range for order " +
                std::to_string(order));
  }
}

}  // namespace

double candidate_flux(int order, int k, std::span<const double> window) {
  require_window(order, window);
  require_candidate(order, k);
  const double* fi = window.data() + upwind_index(order);
  return order == 6 ? detail::candidate_at<6>(k, fi) : detail::candidate_at<8>(k, fi);
}

double beta_candidate(int order, int k, std::span<const double> window) {
  require_window(order, window);
  require_candidate(order, k);
  return detail::beta_at(k, window.data() + upwind_index(order));
}

double beta_global(std::span<const double> window) {
  const int order = static_cast<int>(window.size());
  require_order(order);
  return order == 6 ? detail::beta_full<6>(window.data()) : detail::beta_full<8>(window.data());
}

double tau(std::span<const double> window) {
  const int order = static_cast<int>(window.size());
  require_order(order);
  const double* fi = window.data() + upwind_index(order);
  const double b0 = detail::beta_at(0, fi);
  const double b1 = detail::beta_at(1, fi);
  const double b2 = detail::beta_at(2, fi);
  return std::abs(beta_global(window) - (b1 + b2 + 4.0 * b0) / 6.0);
}

double gamma(double beta_k, double tau, const SmoothnessParams& p) {
  return detail::ipow(p.c + tau / (beta_k + p.epsilon), p.q);
}

std::vector<double> normalize_chi(std::span<const double> gamma) {
  const double sum = std::accumulate(gamma.begin(), gamma.end(), 0.0);
  std::vector<double> chi(gamma.size());
  for (std::size_t k = 0; k < gamma.size(); ++k) chi[k] = gamma[k] / sum;
  return chi;
}

std::vector<std::uint8_t> cutoff_delta(std::span<const double> chi, double ct) {
  std::vector<std::uint8_t> delta(chi.size());
  for (std::size_t k = 0; k < chi.size(); ++k) delta[k] = chi[k] < ct ? 0 : 1;
  return delta;
}

double adapt_ct(std::span<const double> f, const AdaptParams& p) {
  if (f.size() != 6) throw Error("adapt_ct: expects the six values f_{i-2..i+3}");
  return detail::adapt_ct_ptr(f.data(), p);
}

OptimalWeights optimal_weights(int order) {
  require_order(order);
  OptimalWeights w;
  w.order = order;
  if (order == 6) {
    w.d = {0.45, 0.3, 0.05, 0.2, 0.0, 0.0};
  } else {
    w.d = {3.0 / 7.0, 9.0 / 35.0, 2.0 / 35.0, 6.0 / 35.0, 1.0 / 70.0, 1.0 / 14.0};
  }
  return w;
}

double teno_flux(std::span<const double> window, const TenoParams& p) {
  const int order = static_cast<int>(window.size());
  require_order(order);
  if (p.weights.order != order) throw Error("teno_flux: weights built for another order");
  return order == 6 ? detail::teno<6>(window.data(), p) : detail::teno<8>(window.data(), p);
}

}  // namespace tenom::stencil
