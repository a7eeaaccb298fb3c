#include "cayleyrep/applicability.hpp"

#include <algorithm>
#include <stdexcept>

#include "cayleyrep/detail/rng.hpp"

namespace cayley {

std::vector<double> seeded_residuals(const MatrixRep& rep, int count,
                                     double target_norm, std::uint64_t seed_base) {
  if (count < 1) throw std::invalid_argument("seeded_residuals: count must be >= 1");
  const auto basis = float_basis(rep);
  std::vector<double> out;
  out.reserve(count);
  for (int s = 1; s <= count; ++s) {
    detail::SplitMix64 rng(seed_base + static_cast<std::uint64_t>(s));
    std::vector<double> coeffs(basis.size());
    for (auto& c : coeffs) c = rng.gaussian();
    NumMatrix u = NumMatrix::Zero(rep.dim_v, rep.dim_v);
    for (size_t i = 0; i < basis.size(); ++i) u += coeffs[i] * basis[i];
    const double norm = op_norm_estimate(u);
    if (norm > 0.0) {
      const double factor = target_norm / norm;
      for (auto& c : coeffs) c *= factor;
    }
    out.push_back(log_membership_residual(coeffs, rep).residual);
  }
  return out;
}

double median_of(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median_of: empty");
  std::sort(values.begin(), values.end());
  const size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

ApplicabilityReport build_applicability_report(const MatrixRep& rep,
                                               const std::set<std::string>& criteria,
                                               std::uint64_t seed, int residual_seeds,
                                               double residual_norm) {
  for (const auto& c : criteria) {
    if (c != "config" && c != "triple" && c != "cartan" && c != "odd" &&
        c != "residual") {
      throw std::invalid_argument("unknown criterion '" + c +
                                  "'; expected config, triple, cartan, odd, residual");
    }
  }
  ApplicabilityReport report;
  report.label = rep.label;
  report.family = rep.family;
  report.rank = rep.rank;
  report.highest = rep.highest;

  std::vector<bool> verdicts;
  if (criteria.count("config") && rep.family && rep.rank && rep.highest) {
    RootSystemData rs = build_root_system(*rep.family, *rep.rank);
    report.geometric = is_cayley_configuration(*rep.highest, rs);
    report.criteria_run.push_back("config");
    verdicts.push_back(report.geometric->verdict);
  }
  if (criteria.count("triple")) {
    report.exact = check_power_span(rep);
    report.criteria_run.push_back("triple");
    verdicts.push_back(report.exact->verdict);
  }
  if (criteria.count("cartan")) {
    report.cartan_s3 = check_cartan_s3(rep);
    report.criteria_run.push_back("cartan");
    verdicts.push_back(*report.cartan_s3);
  }
  if (criteria.count("odd")) {
    report.odd_powers = check_odd_powers(rep, 3, 8, seed);
    report.criteria_run.push_back("odd");
    verdicts.push_back(*report.odd_powers);
  }
  if (criteria.count("residual")) {
    ApplicabilityReport::ResidualSummary summary;
    summary.seeds = residual_seeds;
    summary.target_norm = residual_norm;
    summary.values = seeded_residuals(rep, residual_seeds, residual_norm, seed);
    summary.median = median_of(summary.values);
    report.numeric = std::move(summary);
    report.criteria_run.push_back("residual");
  }

  if (verdicts.empty()) {
    throw std::invalid_argument("no decidable criterion was run");
  }
  report.agreement =
      std::all_of(verdicts.begin(), verdicts.end(), [&](bool v) { return v == verdicts[0]; });
  // The exact triple-product criterion is authoritative when present.
  report.final_verdict = report.exact ? report.exact->verdict : verdicts[0];
  return report;
}

}  // namespace cayley
