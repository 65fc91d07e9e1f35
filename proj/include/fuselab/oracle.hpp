#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "fuselab/matrix.hpp"

namespace fuselab {

/// Floating-point cross-check of a su(2) multiplicity profile: counts the
/// adjacency eigenvalues within `tol` of 2cos(pi (I+1) / h) for I = 0..h-2.
struct EigenOracle {
  std::vector<std::int64_t> counts;
  int unmatched = 0;  // eigenvalues matching no label
};

inline EigenOracle adjacency_eigen_oracle(const IntMatrix& adjacency, int h, double tol = 1e-9) {
  const auto n = static_cast<Eigen::Index>(adjacency.rows());
  Eigen::MatrixXd A(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) A(i, j) = static_cast<double>(adjacency(i, j));
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);

  EigenOracle out{std::vector<std::int64_t>(h - 1, 0), 0};
  for (Eigen::Index k = 0; k < n; ++k) {
    const double ev = es.eigenvalues()[k];
    bool hit = false;
    for (int I = 0; I + 1 < h; ++I)
      if (std::abs(ev - 2 * std::cos(std::numbers::pi * (I + 1) / h)) < tol) {
        ++out.counts[I];
        hit = true;
        break;
      }
    if (!hit) ++out.unmatched;
  }
  return out;
}

}  // namespace fuselab
