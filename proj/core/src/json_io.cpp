#include "cayleyrep/json_io.hpp"

#include "cayleyrep/version.hpp"

namespace cayley {

using nlohmann::json;

void to_json(json& j, const Weight& w) {
  j = json::array();
  for (const auto& c : w.coords) j.push_back(rat_to_string(c));
}

void to_json(json& j, const ExactMatrix& m) {
  j = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(gauss_to_string(m.at(i, c)));
    j.push_back(std::move(row));
  }
}

void to_json(json& j, const WeylOrbit& orbit) {
  j = json{{"seed", orbit.seed}, {"elements", json::array()}};
  for (const auto& w : orbit.elements) j["elements"].push_back(w);
}

void to_json(json& j, const WeightDiagram& diagram) {
  j = json{{"highest", diagram.highest}, {"entries", json::array()}};
  for (const auto& [w, m] : diagram.mult) {
    j["entries"].push_back(json{{"weight", w}, {"mult", m}});
  }
}

void to_json(json& j, const ConfigReport& report) {
  j = json{
      {"highest", report.highest},
      {"orbit_size", report.orbit_size},
      {"orbit_rank", report.orbit_rank},
      {"rank_needed", report.rank_needed},
      {"symmetric_about_origin", report.symmetric_about_origin},
      {"verdict", report.verdict},
  };
  if (report.support_minus_orbit) {
    json extra = json::array();
    for (const auto& w : *report.support_minus_orbit) extra.push_back(w);
    j["support_minus_orbit"] = std::move(extra);
  } else {
    j["support_minus_orbit"] = nullptr;
  }
  j["witness"] = report.witness ? json(*report.witness) : json(nullptr);
}

void to_json(json& j, const SpanVerdict& verdict) {
  j = json{{"verdict", verdict.verdict}};
  j["failing_triple"] =
      verdict.failing_triple
          ? json{(*verdict.failing_triple)[0], (*verdict.failing_triple)[1],
                 (*verdict.failing_triple)[2]}
          : json(nullptr);
  j["residual_witness"] =
      verdict.residual_witness ? json(*verdict.residual_witness) : json(nullptr);
}

void to_json(json& j, const ResidualReport& report) {
  j = json{
      {"input_norm", report.input_norm},   {"residual", report.residual},
      {"series_terms", report.series_terms}, {"rescale", report.rescale},
      {"condition_warning", report.condition_warning},
  };
}

void to_json(json& j, const ClassificationRow& row) {
  j = json{
      {"family", std::string(1, family_letter(row.family))},
      {"rank", row.rank},
      {"coeffs", row.coeffs},
      {"highest", row.highest},
      {"verdict", row.verdict},
  };
  j["identification"] = row.identification ? json(*row.identification) : json(nullptr);
}

void to_json(json& j, const ApplicabilityReport& report) {
  j = json{
      {"version", kVersion},
      {"label", report.label},
      {"criteria", report.criteria_run},
      {"final_verdict", report.final_verdict},
      {"agreement", report.agreement},
  };
  if (report.family) j["family"] = std::string(1, family_letter(*report.family));
  if (report.rank) j["rank"] = *report.rank;
  if (report.highest) j["highest"] = *report.highest;
  j["geometric"] = report.geometric ? json(*report.geometric) : json(nullptr);
  j["exact"] = report.exact ? json(*report.exact) : json(nullptr);
  j["cartan_s3"] = report.cartan_s3 ? json(*report.cartan_s3) : json(nullptr);
  j["odd_powers"] = report.odd_powers ? json(*report.odd_powers) : json(nullptr);
  if (report.numeric) {
    j["numeric"] = json{
        {"seeds", report.numeric->seeds},
        {"target_norm", report.numeric->target_norm},
        {"median_residual", report.numeric->median},
        {"residuals", report.numeric->values},
    };
  } else {
    j["numeric"] = nullptr;
  }
}

json rep_dump_json(const MatrixRep& rep) {
  json j{
      {"version", kVersion},
      {"label", rep.label},
      {"dim", rep.dim_v},
      {"algebra_dim", rep.algebra_dim()},
      {"cartan_indices", rep.cartan_indices},
  };
  json basis = json::array();
  for (const auto& m : rep.algebra_basis) basis.push_back(m);
  j["basis"] = std::move(basis);
  json labels = json::array();
  for (const auto& w : rep.weight_labels) labels.push_back(w);
  j["weight_labels"] = std::move(labels);
  json coords = json::array();
  for (const auto& w : rep.cartan_coords) coords.push_back(w);
  j["cartan_coords"] = std::move(coords);
  if (rep.family) j["family"] = std::string(1, family_letter(*rep.family));
  if (rep.rank) j["rank"] = *rep.rank;
  if (rep.highest) j["highest"] = *rep.highest;
  return j;
}

Weight weight_from_json(const json& j) {
  std::vector<Rat> coords;
  for (const auto& entry : j) coords.push_back(parse_rat(entry.get<std::string>()));
  return Weight(std::move(coords));
}

}  // namespace cayley
