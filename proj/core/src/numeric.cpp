#include "cayleyrep/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cayley {

namespace {
constexpr double kConditionGuard = 0.01 / std::numeric_limits<double>::epsilon();
constexpr double kLogDomainBound = 0.95 / 3.0;  // Lemma-style 1/3 with safety factor
}  // namespace

NumMatrix float_matrix(const ExactMatrix& m) {
  NumMatrix out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) {
      const GaussRat& e = m.at(i, j);
      out(i, j) = std::complex<double>(e.re.get_d(), e.im.get_d());
    }
  }
  return out;
}

std::vector<NumMatrix> float_basis(const MatrixRep& r) {
  std::vector<NumMatrix> out;
  out.reserve(r.algebra_basis.size());
  for (const auto& b : r.algebra_basis) out.push_back(float_matrix(b));
  return out;
}

double op_norm_estimate(const NumMatrix& m, int iterations) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::VectorXcd v(m.cols());
  for (int i = 0; i < m.cols(); ++i) v(i) = std::complex<double>(1.0 + i * 0.1, 0.0);
  v.normalize();
  double sigma = 0.0;
  for (int it = 0; it < iterations; ++it) {
    Eigen::VectorXcd w = m * v;
    sigma = w.norm();
    if (sigma == 0.0) return 0.0;
    v = m.adjoint() * w;
    double n = v.norm();
    if (n == 0.0) return sigma;
    v /= n;
  }
  return sigma;
}

NumMatrix cayley_transform(const NumMatrix& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("cayley_transform: non-square");
  const NumMatrix eye = NumMatrix::Identity(u.rows(), u.cols());
  const NumMatrix denom = eye - u;
  Eigen::FullPivLU<NumMatrix> lu(denom);
  if (!lu.isInvertible()) {
    throw std::domain_error("cayley_transform: I - u is singular");
  }
  NumMatrix inv = lu.inverse();
  if (!inv.allFinite() ||
      op_norm_estimate(denom) * op_norm_estimate(inv) > kConditionGuard) {
    throw std::domain_error("cayley_transform: I - u is numerically singular");
  }
  return (eye + u) * inv;
}

NumMatrix log_series(const NumMatrix& a, int* terms_used) {
  if (a.rows() != a.cols()) throw std::invalid_argument("log_series: non-square");
  const NumMatrix x = a - NumMatrix::Identity(a.rows(), a.cols());
  if (op_norm_estimate(x) >= 1.0) {
    throw std::domain_error("log_series: ||a - I|| >= 1, series diverges");
  }
  NumMatrix term = x;
  NumMatrix result = x;
  int terms = 1;
  for (int k = 2; k <= 200; ++k) {
    term = term * x;
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    result += (sign / k) * term;
    ++terms;
    if (term.norm() / k < 1e-16 * result.norm()) break;
  }
  if (terms_used) *terms_used = terms;
  return result;
}

NumMatrix matrix_exp(const NumMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix_exp: non-square");
  double norm = op_norm_estimate(a);
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const NumMatrix x = a * scale;
  NumMatrix term = NumMatrix::Identity(a.rows(), a.cols());
  NumMatrix result = term;
  for (int k = 1; k <= 60; ++k) {
    term = term * x / static_cast<double>(k);
    result += term;
    if (term.norm() < 1e-15 * result.norm()) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

ResidualReport log_membership_residual(const std::vector<double>& u_coeffs,
                                       const MatrixRep& r) {
  const auto basis = float_basis(r);
  if (u_coeffs.size() != basis.size()) {
    throw std::invalid_argument("log_membership_residual: expected " +
                                std::to_string(basis.size()) + " coefficients");
  }
  NumMatrix u = NumMatrix::Zero(r.dim_v, r.dim_v);
  for (size_t i = 0; i < basis.size(); ++i) u += u_coeffs[i] * basis[i];

  ResidualReport report;
  double norm = op_norm_estimate(u);
  if (norm > kLogDomainBound && norm > 0.0) {
    report.rescale = kLogDomainBound / norm;
    u *= report.rescale;
    norm = kLogDomainBound;
  }
  report.input_norm = norm;

  const NumMatrix eye = NumMatrix::Identity(r.dim_v, r.dim_v);
  int terms_plus = 0, terms_minus = 0;
  NumMatrix v = log_series(eye + u, &terms_plus) - log_series(eye - u, &terms_minus);
  report.series_terms = std::max(terms_plus, terms_minus);

  const Eigen::Index len = static_cast<Eigen::Index>(r.dim_v) * r.dim_v;
  Eigen::MatrixXcd stacked(len, static_cast<Eigen::Index>(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i) {
    stacked.col(static_cast<Eigen::Index>(i)) = basis[i].reshaped();
  }
  Eigen::VectorXcd target = v.reshaped();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(stacked);
  report.condition_warning = qr.rank() < static_cast<Eigen::Index>(basis.size());
  Eigen::VectorXcd coeffs = qr.solve(target);
  const double vnorm = target.norm();
  report.residual = vnorm == 0.0 ? 0.0 : (stacked * coeffs - target).norm() / vnorm;
  return report;
}

std::vector<std::pair<double, double>> pade_order_probe(
    const MatrixRep& r, const std::vector<double>& direction_coeffs,
    const std::vector<double>& scales) {
  const auto basis = float_basis(r);
  if (direction_coeffs.size() != basis.size()) {
    throw std::invalid_argument("pade_order_probe: expected " +
                                std::to_string(basis.size()) + " coefficients");
  }
  NumMatrix u = NumMatrix::Zero(r.dim_v, r.dim_v);
  for (size_t i = 0; i < basis.size(); ++i) u += direction_coeffs[i] * basis[i];
  const double norm = op_norm_estimate(u);
  if (norm > 0.0) u /= norm;

  std::vector<std::pair<double, double>> out;
  out.reserve(scales.size());
  for (double t : scales) {
    NumMatrix diff = cayley_transform(0.5 * t * u) - matrix_exp(t * u);
    out.emplace_back(t, op_norm_estimate(diff));
  }
  return out;
}

double fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& [t, err] : points) {
    if (t <= 0.0 || err <= 0.0) continue;
    const double x = std::log(t);
    const double y = std::log(err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace cayley
