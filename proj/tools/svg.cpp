#include "svg.hpp"

#include <algorithm>
#include <cstdio>

#include "denominal/util.hpp"

namespace denominal::cli {

const char* to_string(Role role) {
    switch (role) {
    case Role::Noun: return "noun";
    case Role::Denominal: return "denominal";
    case Role::RootVerb: return "root_verb";
    }
    return "?";
}

namespace {

constexpr double kSize = 600;
constexpr double kMargin = 50;

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string glyph(Role role, double x, double y) {
    switch (role) {
    case Role::Noun:
        return "<rect x=\"" + num(x - 6) + "\" y=\"" + num(y - 6) + "\" width=\"12\" height=\"12\" fill=\"#1f77b4\"/>";
    case Role::Denominal:
        return "<polygon points=\"" + num(x) + "," + num(y - 7) + " " + num(x - 7) + "," + num(y + 6) + " " +
               num(x + 7) + "," + num(y + 6) + "\" fill=\"#d62728\"/>";
    case Role::RootVerb:
        return "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"6\" fill=\"#2ca02c\"/>";
    }
    return {};
}

}  // namespace

std::string render_svg(const std::string& title, const std::vector<PlotPoint>& points) {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    if (!points.empty()) {
        xmin = xmax = points[0].x;
        ymin = ymax = points[0].y;
    }
    for (const auto& p : points) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    double span = std::max(xmax - xmin, ymax - ymin);
    if (span <= 0) span = 1;
    const double inner = kSize - 2 * kMargin;
    // center the smaller extent
    const double xoff = (inner - (xmax - xmin) / span * inner) / 2;
    const double yoff = (inner - (ymax - ymin) / span * inner) / 2;
    auto px = [&](double x) { return kMargin + xoff + (x - xmin) / span * inner; };
    auto py = [&](double y) { return kSize - kMargin - yoff - (y - ymin) / span * inner; };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 600 600\" width=\"600\" height=\"600\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\"/>\n";
    out += "<text x=\"300\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" + escape(title) +
           "</text>\n";
    for (const auto& p : points) {
        const double x = px(p.x), y = py(p.y);
        out += glyph(p.role, x, y) + "\n";
        out += "<text x=\"" + num(x + 9) + "\" y=\"" + num(y + 4) + "\" font-family=\"sans-serif\" font-size=\"12\">" +
               escape(p.token) + "</text>\n";
    }
    // legend, one row in the top margin
    out += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    const Role roles[] = {Role::Noun, Role::Denominal, Role::RootVerb};
    const char* labels[] = {"noun", "denominal verb", "root-derived verb"};
    for (int i = 0; i < 3; ++i) {
        const double x = 130 + 140.0 * i;
        out += glyph(roles[i], x, 38) + "\n";
        out += "<text x=\"" + num(x + 12) + "\" y=\"42\">" + labels[i] + "</text>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string render_csv(const std::vector<PlotPoint>& points) {
    std::string out = "token,role,x,y\n";
    for (const auto& p : points) {
        out += p.token + "," + to_string(p.role) + "," + util::format_double(p.x) + "," + util::format_double(p.y) + "\n";
    }
    return out;
}

}  // namespace denominal::cli
