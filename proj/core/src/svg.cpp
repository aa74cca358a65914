#include "darboux/svg.hpp"

#include <algorithm>
#include <sstream>

namespace darboux {

std::string emit_svg(const IntPolytope& p, bool lattice_overlay) {
    if (p.ambient_dimension() != 2)
        throw UnsupportedDimension("SVG output needs a planar polytope, got dimension " +
                                   std::to_string(p.ambient_dimension()));
    if (p.is_empty()) throw std::invalid_argument("SVG output of the empty polytope");

    std::int64_t xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (const auto& v : p.vertices()) {
        xmin = std::min(xmin, v[0]);
        xmax = std::max(xmax, v[0]);
        ymin = std::min(ymin, v[1]);
        ymax = std::max(ymax, v[1]);
    }
    --xmin;
    --ymin;
    ++xmax;
    ++ymax;
    const std::int64_t width = (xmax - xmin) * kSvgScale;
    const std::int64_t height = (ymax - ymin) * kSvgScale;
    auto px = [&](std::int64_t x) { return (x - xmin) * kSvgScale; };
    auto py = [&](std::int64_t y) { return (ymax - y) * kSvgScale; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <g class=\"axes\" stroke=\"#888888\" stroke-width=\"1\">\n";
    out << "    <line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << width << "\" y2=\"" << py(0) << "\"/>\n";
    out << "    <line x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0) << "\" y2=\"" << height << "\"/>\n";
    out << "  </g>\n";

    const auto ring = ccw_vertices_2d(p);
    out << "  <path class=\"polytope\" d=\"";
    for (std::size_t i = 0; i < ring.size(); ++i)
        out << (i == 0 ? "M " : " L ") << px(ring[i][0]) << ' ' << py(ring[i][1]);
    out << " Z\" fill=\"#cfe0f0\" stroke=\"#000000\" stroke-width=\"2\" stroke-linejoin=\"round\""
           " stroke-linecap=\"round\"/>\n";

    if (lattice_overlay) {
        out << "  <g class=\"lattice\" fill=\"#000000\">\n";
        for (const auto& m : lattice_points_nonneg(p))
            out << "    <circle cx=\"" << px(m[0]) << "\" cy=\"" << py(m[1]) << "\" r=\"4\"/>\n";
        out << "  </g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace darboux
