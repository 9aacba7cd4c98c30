#include "dehn/svg.hpp"

#include <array>
#include <sstream>
#include <vector>

namespace dehn {

namespace {

struct Pt {
    double x, y;
};

// clip a convex polygon against the half-plane a*x + b*y <= c
std::vector<Pt> clip_half_plane(const std::vector<Pt>& poly, double a, double b, double c) {
    std::vector<Pt> out;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Pt& p = poly[i];
        const Pt& q = poly[(i + 1) % n];
        double fp = a * p.x + b * p.y - c;
        double fq = a * q.x + b * q.y - c;
        if (fp <= 0) out.push_back(p);
        if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
            double t = fp / (fp - fq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

}  // namespace

std::string ball_to_svg(const BallGeometry& ball, double viewport) {
    const double size = 480;
    const double scale = size / (2 * viewport);
    auto px = [&](double x) { return size / 2 + x * scale; };
    auto py = [&](double y) { return size / 2 - y * scale; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    svg << "  <rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
    svg << "  <line x1=\"0\" y1=\"" << size / 2 << "\" x2=\"" << size << "\" y2=\"" << size / 2
        << "\" stroke=\"#bbb\"/>\n";
    svg << "  <line x1=\"" << size / 2 << "\" y1=\"0\" x2=\"" << size / 2 << "\" y2=\"" << size
        << "\" stroke=\"#bbb\"/>\n";

    std::vector<Pt> poly;
    if (const auto* p = std::get_if<PolygonBall>(&ball)) {
        for (const auto& v : p->vertices)
            poly.push_back({v.x.convert_to<double>(), v.y.convert_to<double>()});
    } else {
        // plane, or band clipped to the viewport
        poly = {{-viewport, -viewport}, {viewport, -viewport}, {viewport, viewport},
                {-viewport, viewport}};
        if (const auto* band = std::get_if<BandBall>(&ball)) {
            double a = band->axis_functional.c1.convert_to<double>();
            double b = band->axis_functional.c2.convert_to<double>();
            double w = band->halfwidth.convert_to<double>();
            poly = clip_half_plane(poly, a, b, w);
            poly = clip_half_plane(poly, -a, -b, w);
        }
    }
    if (!poly.empty()) {
        svg << "  <polygon points=\"";
        for (size_t i = 0; i < poly.size(); ++i)
            svg << (i ? " " : "") << px(poly[i].x) << "," << py(poly[i].y);
        svg << "\" fill=\"#9ecbff\" fill-opacity=\"0.6\" stroke=\"#1d4f91\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace dehn
