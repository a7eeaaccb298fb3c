#ifndef CAYLEYREP_APPLICABILITY_HPP
#define CAYLEYREP_APPLICABILITY_HPP

#include <set>
#include <string>

#include "cayleyrep/cayley_config.hpp"
#include "cayleyrep/numeric.hpp"
#include "cayleyrep/power_span.hpp"

namespace cayley {

/// Joint verdict across the criteria actually run on one realization. The
/// boolean criteria (geometric configuration, triple products, Cartan cubes,
/// odd powers) feed agreement and final_verdict; the residual summary is
/// evidence only, since its thresholds live in test configuration.
struct ApplicabilityReport {
  std::string label;
  std::optional<Family> family;
  std::optional<int> rank;
  std::optional<Weight> highest;

  std::optional<ConfigReport> geometric;
  std::optional<SpanVerdict> exact;
  std::optional<bool> cartan_s3;
  std::optional<bool> odd_powers;

  struct ResidualSummary {
    int seeds = 0;
    double target_norm = 0.0;
    double median = 0.0;
    std::vector<double> values;
  };
  std::optional<ResidualSummary> numeric;

  bool final_verdict = false;
  bool agreement = true;
  std::vector<std::string> criteria_run;
};

/// Criterion selectors: "config", "triple", "cartan", "odd", "residual".
/// "config" is skipped (not failed) for realizations without a root-system
/// identity. Unknown selectors throw std::invalid_argument.
ApplicabilityReport build_applicability_report(const MatrixRep& rep,
                                               const std::set<std::string>& criteria,
                                               std::uint64_t seed = 1,
                                               int residual_seeds = 20,
                                               double residual_norm = 0.2);

/// Per-seed log-membership residuals for gaussian directions scaled to the
/// target operator norm; seeds are seed_base+1 .. seed_base+count.
std::vector<double> seeded_residuals(const MatrixRep& rep, int count,
                                     double target_norm, std::uint64_t seed_base);

double median_of(std::vector<double> values);

}  // namespace cayley

#endif
