#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tenom/cases.hpp"

namespace tenom::bench {

/// Fine-grid primitive profile of a 1D case at its end time.
struct ReferenceProfile {
  UniformGrid grid{};
  std::vector<double> rho;
  std::vector<double> u;
  std::vector<double> p;
};

/// Directory named by TENOM_CACHE_DIR, else <temp>/tenom-cache.
std::filesystem::path default_cache_dir();

/// Stable hex key of the case definition plus the reference recipe.
std::string reference_key(const CaseSpec& spec);

/// Runs the recipe without touching any cache.
ReferenceProfile compute_reference(const CaseSpec& spec);

/// Returns the cached profile, recomputing and atomically rewriting the
/// cache entry when it is missing or unreadable.
ReferenceProfile make_reference(const CaseSpec& spec,
                                const std::filesystem::path& cache_dir = default_cache_dir());

}  // namespace tenom::bench
