#include "cayleyrep/diagram_svg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cayley {

std::string diagram_svg(const WeightDiagram& diagram, const RootSystemData& rs) {
  if (rs.rank != 2) {
    throw std::invalid_argument("diagram_svg: only rank-2 systems are plottable");
  }
  auto plane = [&](const Weight& w) -> std::pair<double, double> {
    if (rs.family == Family::A) {
      const double c0 = w.coords[0].get_d();
      const double c1 = w.coords[1].get_d();
      const double c2 = w.coords[2].get_d();
      return {(c0 - c1) / std::sqrt(2.0), (c0 + c1 - 2.0 * c2) / std::sqrt(6.0)};
    }
    return {w.coords[0].get_d(), w.coords[1].get_d()};
  };

  double extent = 1.0;
  for (const auto& [w, m] : diagram.mult) {
    auto [x, y] = plane(w);
    extent = std::max({extent, std::abs(x), std::abs(y)});
  }
  const double view = 420.0;
  const double scale = (view / 2.0 - 40.0) / extent;
  auto px = [&](double x) { return view / 2.0 + scale * x; };
  auto py = [&](double y) { return view / 2.0 - scale * y; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << view
      << "\" height=\"" << view << "\" viewBox=\"0 0 " << view << " " << view
      << "\">\n";
  svg << "  <line x1=\"0\" y1=\"" << view / 2 << "\" x2=\"" << view << "\" y2=\""
      << view / 2 << "\" stroke=\"#ccc\"/>\n";
  svg << "  <line x1=\"" << view / 2 << "\" y1=\"0\" x2=\"" << view / 2
      << "\" y2=\"" << view << "\" stroke=\"#ccc\"/>\n";
  for (const auto& [w, m] : diagram.mult) {
    auto [x, y] = plane(w);
    svg << "  <circle cx=\"" << px(x) << "\" cy=\"" << py(y)
        << "\" r=\"6\" fill=\"#2a6fb0\"/>\n";
    svg << "  <text x=\"" << px(x) + 9 << "\" y=\"" << py(y) - 9
        << "\" font-size=\"13\" font-family=\"sans-serif\">" << m << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cayley
