#include "surfdyn/phase_portrait.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "surfdyn/errors.hpp"

namespace surfdyn {

namespace {

constexpr double kPlotSize = 600.0;
constexpr double kMargin = 30.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

double px(double x) { return kMargin + x * kPlotSize; }
double py(double y) { return kMargin + (1.0 - y) * kPlotSize; }

void append_polyline(std::string& out, const std::vector<TorusPoint>& points) {
    // Break the stroke wherever the curve wraps around the torus.
    std::string coords;
    std::size_t run = 0;
    auto flush = [&]() {
        if (run >= 2) {
            out += "    <polyline class=\"wu\" points=\"";
            out += coords;
            out += "\"/>\n";
        }
        coords.clear();
        run = 0;
    };
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) {
            const double dx = std::fabs(points[i].x - points[i - 1].x);
            const double dy = std::fabs(points[i].y - points[i - 1].y);
            if (dx > 0.5 || dy > 0.5) flush();
        }
        if (!coords.empty()) coords += ' ';
        coords += fmt(px(points[i].x)) + "," + fmt(py(points[i].y));
        ++run;
    }
    flush();
}

void append_fixed_point(std::string& out, const FixedPointRecord& record) {
    const double cx = px(record.location.x);
    const double cy = py(record.location.y);
    switch (record.kind) {
        case FixedPointKind::Source:
            out += "    <circle class=\"fp fp-source\" cx=\"" + fmt(cx) + "\" cy=\"" +
                   fmt(cy) + "\" r=\"6\"/>\n";
            break;
        case FixedPointKind::Sink:
            out += "    <circle class=\"fp fp-sink\" cx=\"" + fmt(cx) + "\" cy=\"" +
                   fmt(cy) + "\" r=\"6\"/>\n";
            break;
        case FixedPointKind::Saddle:
            out += "    <path class=\"fp fp-saddle\" d=\"M " + fmt(cx - 5) + " " +
                   fmt(cy - 5) + " L " + fmt(cx + 5) + " " + fmt(cy + 5) + " M " +
                   fmt(cx - 5) + " " + fmt(cy + 5) + " L " + fmt(cx + 5) + " " +
                   fmt(cy - 5) + "\"/>\n";
            break;
        default:
            out += "    <rect class=\"fp fp-unresolved\" x=\"" + fmt(cx - 4) + "\" y=\"" +
                   fmt(cy - 4) + "\" width=\"8\" height=\"8\"/>\n";
            break;
    }
}

} // namespace

std::string render_phase_portrait(const PhasePortrait& portrait) {
    const double size = kPlotSize + 2 * kMargin;
    std::string out;
    out.reserve(64 * 1024);
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt(size) + "\" height=\"" + fmt(size) + "\" viewBox=\"0 0 " + fmt(size) + " " +
           fmt(size) + "\">\n";
    out += "  <style>\n"
           "    .frame { fill: white; stroke: #333333; stroke-width: 1; }\n"
           "    .tick { stroke: #333333; stroke-width: 1; }\n"
           "    .label { font: 12px sans-serif; fill: #333333; }\n"
           "    .cloud { fill: #1f6fb4; }\n"
           "    .wu { fill: none; stroke: #c23b22; stroke-width: 0.8; }\n"
           "    .fp-source { fill: white; stroke: black; stroke-width: 2; }\n"
           "    .fp-sink { fill: black; stroke: black; stroke-width: 2; }\n"
           "    .fp-saddle { fill: none; stroke: black; stroke-width: 2.5; }\n"
           "    .fp-unresolved { fill: #888888; stroke: black; stroke-width: 1; }\n"
           "  </style>\n";
    out += "  <rect class=\"frame\" x=\"" + fmt(kMargin) + "\" y=\"" + fmt(kMargin) +
           "\" width=\"" + fmt(kPlotSize) + "\" height=\"" + fmt(kPlotSize) + "\"/>\n";
    for (double t : {0.0, 0.5, 1.0}) {
        out += "  <line class=\"tick\" x1=\"" + fmt(px(t)) + "\" y1=\"" +
               fmt(kMargin + kPlotSize) + "\" x2=\"" + fmt(px(t)) + "\" y2=\"" +
               fmt(kMargin + kPlotSize + 6) + "\"/>\n";
        out += "  <line class=\"tick\" x1=\"" + fmt(kMargin - 6) + "\" y1=\"" +
               fmt(py(t)) + "\" x2=\"" + fmt(kMargin) + "\" y2=\"" + fmt(py(t)) + "\"/>\n";
        out += "  <text class=\"label\" x=\"" + fmt(px(t) - 8) + "\" y=\"" +
               fmt(kMargin + kPlotSize + 20) + "\">" + fmt(t) + "</text>\n";
        out += "  <text class=\"label\" x=\"" + fmt(kMargin - 28) + "\" y=\"" +
               fmt(py(t) + 4) + "\">" + fmt(t) + "</text>\n";
    }

    out += "  <g class=\"cloud\">\n";
    for (const auto& p : portrait.cloud)
        out += "    <circle cx=\"" + fmt(px(p.x)) + "\" cy=\"" + fmt(py(p.y)) +
               "\" r=\"0.8\"/>\n";
    out += "  </g>\n";

    out += "  <g class=\"manifolds\">\n";
    for (const auto& segment : portrait.segments) append_polyline(out, segment);
    out += "  </g>\n";

    out += "  <g class=\"fixed-points\">\n";
    for (const auto& record : portrait.fixed_points) append_fixed_point(out, record);
    out += "  </g>\n";

    out += "</svg>\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open \"" + path + "\" for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed while writing \"" + path + "\"");
}

} // namespace surfdyn
