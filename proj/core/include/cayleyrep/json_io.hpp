#ifndef CAYLEYREP_JSON_IO_HPP
#define CAYLEYREP_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "cayleyrep/applicability.hpp"
#include "cayleyrep/classification.hpp"

namespace cayley {

// Weights serialize as arrays of exact fraction strings, e.g.
// ["1/2","1/2","1/2","-1/2"]; matrix entries as "a/b+c/d*i" strings.

void to_json(nlohmann::json& j, const Weight& w);
void to_json(nlohmann::json& j, const ExactMatrix& m);
void to_json(nlohmann::json& j, const WeylOrbit& orbit);
void to_json(nlohmann::json& j, const WeightDiagram& diagram);
void to_json(nlohmann::json& j, const ConfigReport& report);
void to_json(nlohmann::json& j, const SpanVerdict& verdict);
void to_json(nlohmann::json& j, const ResidualReport& report);
void to_json(nlohmann::json& j, const ClassificationRow& row);
void to_json(nlohmann::json& j, const ApplicabilityReport& report);

nlohmann::json rep_dump_json(const MatrixRep& rep);

Weight weight_from_json(const nlohmann::json& j);

}  // namespace cayley

#endif
