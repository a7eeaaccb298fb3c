#ifndef CAYLEYREP_NUMERIC_HPP
#define CAYLEYREP_NUMERIC_HPP

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "cayleyrep/matrix_rep.hpp"

namespace cayley {

/// Floating shadow of ExactMatrix.
using NumMatrix = Eigen::MatrixXcd;

NumMatrix float_matrix(const ExactMatrix& m);
std::vector<NumMatrix> float_basis(const MatrixRep& r);

/// Operator 2-norm estimate by power iteration (deterministic start vector).
double op_norm_estimate(const NumMatrix& m, int iterations = 20);

/// (I + u)(I - u)^{-1}. Throws std::domain_error when I - u is singular or
/// its condition estimate exceeds the 1/eps-based guard.
NumMatrix cayley_transform(const NumMatrix& u);

/// Matrix logarithm by the Mercator series; requires ||a - I|| < 1 (operator
/// norm estimate), truncates at a 1e-16 relative term or 200 terms.
/// Throws std::domain_error outside the disk.
NumMatrix log_series(const NumMatrix& a, int* terms_used = nullptr);

/// Scaling-and-squaring Taylor exponential (test-oracle quality).
NumMatrix matrix_exp(const NumMatrix& a);

struct ResidualReport {
  double input_norm = 0.0;   ///< operator-norm estimate of u actually used
  double residual = 0.0;     ///< ||v - P_span v|| / ||v||, Frobenius
  int series_terms = 0;
  double rescale = 1.0;      ///< applied when the 1/3 domain bound required it
  bool condition_warning = false;
};

/// Lemma-style log-membership check: u = sum u_coeffs[i] * basis[i] (floated),
/// v = log(I+u) - log(I-u), residual = least-squares distance of v to the
/// complex span of the floated algebra basis, normalized by ||v||. Inputs with
/// ||u|| beyond 0.95 * 1/3 are rescaled into the domain (recorded in rescale).
ResidualReport log_membership_residual(const std::vector<double>& u_coeffs,
                                       const MatrixRep& r);

/// Pairs (t, ||C(t u / 2) - exp(t u)||) for the given scales; the direction is
/// normalized to unit operator norm (zero directions stay zero). The caller
/// fits the log-log slope.
std::vector<std::pair<double, double>> pade_order_probe(
    const MatrixRep& r, const std::vector<double>& direction_coeffs,
    const std::vector<double>& scales);

/// Least-squares slope of log(err) against log(t), ignoring nonpositive
/// errors; NaN when fewer than two usable points remain.
double fit_loglog_slope(const std::vector<std::pair<double, double>>& points);

}  // namespace cayley

#endif
