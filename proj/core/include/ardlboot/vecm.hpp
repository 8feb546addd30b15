#pragma once

// Marginal error-correction system for the regressors,
//
//   dx_t = a0x - A_xx x_{t-1} [- A_xy y_{t-1}] + sum_{j<p} G_j dz_{t-j} + e_xt,
//
// estimated equation by equation. Its residuals and recursion regenerate x*
// in the bootstrap.

#include "ardlboot/ardl.hpp"
#include "ardlboot/frame.hpp"
#include "ardlboot/regression.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace ardlboot {

struct VecmFit {
  int p = 1;
  bool include_y_level = false;
  Eigen::Index first_row = 0;

  Eigen::VectorXd alpha0x;               // K
  Eigen::MatrixXd A_xx;                  // K x K, negated level block
  Eigen::VectorXd A_xy;                  // K, zero unless include_y_level
  std::vector<Eigen::MatrixXd> gamma_x;  // p-1 blocks, K x (K+1), columns (y, x_1..x_K)
  Eigen::MatrixXd residuals;             // n x K

  std::vector<Term> terms;
  Eigen::MatrixXd coefficients;  // terms x K
  std::vector<OlsFit> equations;

  /// Deterministic part of dx_t at row t of `values`.
  Eigen::VectorXd predict(const Eigen::MatrixXd& values, Eigen::Index t) const;
};

std::vector<Term> vecm_terms(const TimeSeriesFrame& frame, int p, bool include_y_level);

/// first_row defaults to p. include_y_level = false imposes weak exogeneity
/// (a_xy = 0).
VecmFit estimate_vecm_marginal(const TimeSeriesFrame& frame, int p, bool include_y_level = false,
                               std::optional<Eigen::Index> first_row = std::nullopt);

}  // namespace ardlboot
