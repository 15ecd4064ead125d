#include "svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hawkes::cli {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string render_bound_svg(const BoundReport& report) {
    if (report.grid.empty()) throw std::invalid_argument("report grid is empty");

    constexpr int width = 760, height = 480;
    constexpr double ml = 70, mr = 20, mt = 48, mb = 56;  // margins
    const double pw = width - ml - mr, ph = height - mt - mb;

    double x_lo = report.grid.front().u, x_hi = report.grid.front().u;
    double y_lo = 0.0, y_hi = 0.0;
    auto safe_log = [](double v) { return std::log(std::max(v, 1e-300)); };
    for (const auto& p : report.grid) {
        x_lo = std::min(x_lo, p.u);
        x_hi = std::max(x_hi, p.u);
        y_lo = std::min({y_lo, safe_log(p.mgf.ci_lo), safe_log(p.bound)});
        y_hi = std::max({y_hi, safe_log(p.mgf.ci_hi), safe_log(p.bound)});
    }
    if (x_hi == x_lo) x_hi = x_lo + 1.0;
    const double pad = 0.06 * std::max(y_hi - y_lo, 1e-12);
    y_lo -= pad;
    y_hi += pad;

    auto px = [&](double u) { return ml + (u - x_lo) / (x_hi - x_lo) * pw; };
    auto py = [&](double ly) { return mt + (y_hi - ly) / (y_hi - y_lo) * ph; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\">\n"
        << "<rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";

    // axes
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
        << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
        << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double u = x_lo + (x_hi - x_lo) * i / 5.0;
        const double ly = y_lo + (y_hi - y_lo) * i / 5.0;
        svg << "<line x1=\"" << px(u) << "\" y1=\"" << mt + ph << "\" x2=\""
            << px(u) << "\" y2=\"" << mt + ph + 5 << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << px(u) << "\" y=\"" << mt + ph + 20
            << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt(u) << "</text>\n"
            << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(ly) << "\" x2=\"" << ml
            << "\" y2=\"" << py(ly) << "\" stroke=\"black\"/>\n"
            << "<text x=\"" << ml - 8 << "\" y=\"" << py(ly) + 4
            << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(ly) << "</text>\n";
    }

    // confidence band
    svg << "<polygon fill=\"#1f77b4\" fill-opacity=\"0.18\" stroke=\"none\" points=\"";
    for (const auto& p : report.grid)
        svg << fmt(px(p.u)) << "," << fmt(py(safe_log(p.mgf.ci_hi))) << " ";
    for (auto it = report.grid.rbegin(); it != report.grid.rend(); ++it)
        svg << fmt(px(it->u)) << "," << fmt(py(safe_log(it->mgf.ci_lo))) << " ";
    svg << "\"/>\n";

    auto polyline = [&](const char* color, auto&& value_of) {
        svg << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"2\" points=\"";
        for (const auto& p : report.grid)
            svg << fmt(px(p.u)) << "," << fmt(py(value_of(p))) << " ";
        svg << "\"/>\n";
    };
    polyline("#d62728", [&](const BoundReportPoint& p) { return safe_log(p.bound); });
    polyline("#1f77b4", [&](const BoundReportPoint& p) { return safe_log(p.mgf.point); });

    // markers on the empirical curve
    for (const auto& p : report.grid)
        svg << "<circle cx=\"" << fmt(px(p.u)) << "\" cy=\""
            << fmt(py(safe_log(p.mgf.point))) << "\" r=\"3\" fill=\"#1f77b4\"/>\n";

    // labels and legend
    svg << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 14
        << "\" font-size=\"13\" text-anchor=\"middle\">u (fraction of certified "
           "abscissa)</text>\n"
        << "<text x=\"18\" y=\"" << mt + ph / 2
        << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << mt + ph / 2 << ")\">log E[exp(xi N)]</text>\n"
        << "<text x=\"" << ml << "\" y=\"24\" font-size=\"14\">" << "engine="
        << to_string(report.engine) << ", n=" << report.n_reps
        << ", seed=" << report.seed << "</text>\n"
        << "<rect x=\"" << ml + 8 << "\" y=\"" << mt + 8
        << "\" width=\"12\" height=\"3\" fill=\"#d62728\"/>\n"
        << "<text x=\"" << ml + 26 << "\" y=\"" << mt + 13
        << "\" font-size=\"12\">log bound</text>\n"
        << "<rect x=\"" << ml + 8 << "\" y=\"" << mt + 24
        << "\" width=\"12\" height=\"3\" fill=\"#1f77b4\"/>\n"
        << "<text x=\"" << ml + 26 << "\" y=\"" << mt + 29
        << "\" font-size=\"12\">log empirical MGF (CI band)</text>\n";

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace hawkes::cli
