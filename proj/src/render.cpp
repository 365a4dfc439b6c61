#include "brauerdet/render.hpp"

#include <cstdio>
#include <string>

namespace brauerdet {

namespace {

constexpr double kUnit = 40.0;   // horizontal spacing per position
constexpr double kTopY = 40.0;
constexpr double kBottomY = 80.0;
constexpr double kBulge = 0.25;  // control-point offset per unit of span

double xpos(int position_in_row) { return kUnit * position_in_row; }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

void append_line(std::string& svg, double x1, double y1, double x2, double y2) {
    svg += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) + "\" y2=\"" +
           fmt(y2) + "\"/>\n";
}

void append_bow(std::string& svg, double x1, double x2, double y, double control_dy) {
    svg += "<path d=\"M " + fmt(x1) + " " + fmt(y) + " Q " + fmt((x1 + x2) / 2) + " " +
           fmt(y + control_dy) + " " + fmt(x2) + " " + fmt(y) + "\"/>\n";
}

}  // namespace

std::string render_svg(const BrauerDiagram& d, Labeling lab) {
    const int n = static_cast<int>(d.size());
    const double width = kUnit * (n + 1);
    const double height = kBottomY + kTopY;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
           fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
    svg += "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";

    for (int v = 1; v <= 2 * n; ++v) {
        const int w = d.partner(v);
        if (w < v) continue;
        if (w <= n) {  // cup
            append_bow(svg, xpos(v), xpos(w), kTopY, kBulge * (xpos(w) - xpos(v)));
        } else if (v > n) {  // cap
            append_bow(svg, xpos(v - n), xpos(w - n), kBottomY,
                       -kBulge * (xpos(w - n) - xpos(v - n)));
        } else {  // arc
            append_line(svg, xpos(v), kTopY, xpos(w - n), kBottomY);
        }
    }
    svg += "</g>\n<g fill=\"black\">\n";

    for (int p = 1; p <= n; ++p) {
        svg += "<circle cx=\"" + fmt(xpos(p)) + "\" cy=\"" + fmt(kTopY) + "\" r=\"2.5\"/>\n";
        svg += "<circle cx=\"" + fmt(xpos(p)) + "\" cy=\"" + fmt(kBottomY) + "\" r=\"2.5\"/>\n";
    }
    svg += "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
    for (int p = 1; p <= n; ++p) {
        const int bottom_label = lab == Labeling::F ? p : n + 1 - p;
        svg += "<text x=\"" + fmt(xpos(p)) + "\" y=\"" + fmt(kTopY - 10.0) + "\">" +
               std::to_string(p) + "</text>\n";
        svg += "<text x=\"" + fmt(xpos(p)) + "\" y=\"" + fmt(kBottomY + 18.0) + "\">" +
               std::to_string(bottom_label) + "</text>\n";
    }
    svg += "</g>\n</svg>\n";
    return svg;
}

}  // namespace brauerdet
