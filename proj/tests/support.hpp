#pragma once

// Shared fixtures for the unit suites: seeded generators and the list of
// catalog ids exercised by the property tests.

#include <random>
#include <string>
#include <vector>

#include "fuselab/fuselab.hpp"

namespace testing {

using namespace fuselab;

inline std::vector<std::string> all_catalog_ids() {
  std::vector<std::string> ids;
  for (int l = 0; l <= kMaxCatalogLevel; ++l) ids.push_back("su2:" + std::to_string(l));
  ids.push_back("fibonacci");
  ids.push_back("ising");
  for (int n = 1; n <= 8; ++n) ids.push_back("zn:" + std::to_string(n));
  return ids;
}

/// Smaller set for checks whose cost grows like rank^4.
inline std::vector<std::string> light_catalog_ids() {
  return {"su2:0", "su2:1", "su2:2", "su2:3", "su2:5", "su2:8", "fibonacci", "ising", "zn:1", "zn:3", "zn:4", "zn:6"};
}

/// Random element of Q(zeta_n) with a few small rational coefficients.
inline CycloNumber random_cyclo(std::mt19937_64& rng, int n, int terms = 4) {
  std::uniform_int_distribution<int> exp(0, n - 1), num(-9, 9), den(1, 5);
  std::vector<mpq_class> c(n);
  for (int t = 0; t < terms; ++t) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    c[exp(rng)] += q;
  }
  return CycloNumber::from_coeffs(n, c);
}

inline CycloNumber random_nonzero_cyclo(std::mt19937_64& rng, int n, int terms = 4) {
  for (;;)
    if (auto x = random_cyclo(rng, n, terms); !x.is_zero()) return x;
}

struct AdeCase {
  char family;
  int rank;
  int level;
  std::string name() const { return std::string(1, family) + ":" + std::to_string(rank) + "@" + std::to_string(level); }
};

/// Every connected ADE graph whose Coxeter number h = level + 2 has a
/// catalog level.
inline std::vector<AdeCase> ade_cases(int max_level = kMaxCatalogLevel) {
  std::vector<AdeCase> out;
  for (int l = 1; l <= max_level; ++l) out.push_back({'A', l + 1, l});
  for (int n = 4; 2 * n - 4 <= max_level; ++n) out.push_back({'D', n, 2 * n - 4});
  for (auto [n, l] : {std::pair{6, 10}, {7, 16}, {8, 28}})
    if (l <= max_level) out.push_back({'E', n, l});
  return out;
}

}  // namespace testing
