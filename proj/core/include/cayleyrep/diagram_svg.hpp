#ifndef CAYLEYREP_DIAGRAM_SVG_HPP
#define CAYLEYREP_DIAGRAM_SVG_HPP

#include <string>

#include "cayleyrep/weight_diagram.hpp"

namespace cayley {

/// Scatter plot of a rank-2 weight diagram with multiplicity labels, one
/// <circle> per support point. Type A2 is drawn in an orthonormal basis of
/// its zero-sum plane. Throws std::invalid_argument for rank != 2.
std::string diagram_svg(const WeightDiagram& diagram, const RootSystemData& rs);

}  // namespace cayley

#endif
