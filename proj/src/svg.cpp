#include "qrabi/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "qrabi/csv.hpp"
#include "qrabi/errors.hpp"

namespace qrabi {

namespace {

// viridis anchor points, linearly interpolated
constexpr int kAnchors = 9;
constexpr double kViridis[kAnchors][3] = {
    {0.267004, 0.004874, 0.329415}, {0.281412, 0.155834, 0.469201},
    {0.244972, 0.287675, 0.537260}, {0.190631, 0.407061, 0.556089},
    {0.147607, 0.511733, 0.557049}, {0.119699, 0.618490, 0.536347},
    {0.208030, 0.718701, 0.472873}, {0.565498, 0.841500, 0.262605},
    {0.993248, 0.906157, 0.143936}};

std::string color_hex(double t) {
    t = std::clamp(t, 0.0, 1.0);
    double pos = t * (kAnchors - 1);
    int i = std::min(static_cast<int>(pos), kAnchors - 2);
    double f = pos - i;
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                  static_cast<int>(std::lround(255.0 * (kViridis[i][0] * (1 - f) + kViridis[i + 1][0] * f))),
                  static_cast<int>(std::lround(255.0 * (kViridis[i][1] * (1 - f) + kViridis[i + 1][1] * f))),
                  static_cast<int>(std::lround(255.0 * (kViridis[i][2] * (1 - f) + kViridis[i + 1][2] * f))));
    return buf;
}

std::string num(double v) { return format_double(v); }

}  // namespace

std::string render_heatmap(const std::vector<SweepRecord>& records,
                           std::string_view field) {
    if (records.empty()) throw NonRectangularGrid("render_heatmap: no records");
    // validates the field name up front
    record_field(records.front(), field);

    std::map<double, int> delta_idx, g_idx;
    for (const auto& r : records) {
        delta_idx.emplace(r.delta, 0);
        g_idx.emplace(r.g, 0);
    }
    const int nd = static_cast<int>(delta_idx.size());
    const int ng = static_cast<int>(g_idx.size());
    if (static_cast<int>(records.size()) != nd * ng)
        throw NonRectangularGrid("render_heatmap: " + std::to_string(records.size()) +
                                 " records for a " + std::to_string(nd) + "x" +
                                 std::to_string(ng) + " grid");
    int k = 0;
    for (auto& [key, v] : delta_idx) v = k++;
    k = 0;
    for (auto& [key, v] : g_idx) v = k++;

    std::vector<const SweepRecord*> cells(static_cast<size_t>(nd) * ng, nullptr);
    for (const auto& r : records) {
        auto& slot = cells[static_cast<size_t>(delta_idx[r.delta]) * ng + g_idx[r.g]];
        if (slot) throw NonRectangularGrid("render_heatmap: duplicate grid point");
        slot = &r;
    }

    double vmin = 0.0, vmax = 0.0;
    bool any = false;
    for (const auto* r : cells) {
        if (!r || !r->ok()) continue;
        double v = record_field(*r, field);
        vmin = any ? std::min(vmin, v) : v;
        vmax = any ? std::max(vmax, v) : v;
        any = true;
    }
    const bool flat = !any || vmax == vmin;

    const double plot_w = 640.0, plot_h = 480.0;
    const double mleft = 80.0, mtop = 24.0, mbottom = 56.0, mright = 150.0;
    const double width = mleft + plot_w + mright;
    const double height = mtop + plot_h + mbottom;
    const double cw = plot_w / ng, ch = plot_h / nd;

    std::vector<double> deltas(nd), gs(ng);
    for (const auto& [key, v] : delta_idx) deltas[v] = key;
    for (const auto& [key, v] : g_idx) gs[v] = key;

    std::string svg;
    svg.reserve(cells.size() * 90 + 4096);
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
           "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
           num(height) + "\">\n";
    svg += "<style>text{font-family:monospace;font-size:12px;fill:#222}</style>\n";

    // cells; delta increases upward
    for (int i = 0; i < nd; ++i) {
        double y = mtop + plot_h - (i + 1) * ch;
        for (int j = 0; j < ng; ++j) {
            const SweepRecord* r = cells[static_cast<size_t>(i) * ng + j];
            std::string fill = "#cccccc";
            if (r && r->ok()) {
                double t = flat ? 0.5 : (record_field(*r, field) - vmin) / (vmax - vmin);
                fill = color_hex(t);
            }
            svg += "<rect x=\"" + num(mleft + j * cw) + "\" y=\"" + num(y) +
                   "\" width=\"" + num(cw) + "\" height=\"" + num(ch) + "\" fill=\"" +
                   fill + "\"/>\n";
        }
    }

    // frame and axis labels
    svg += "<rect x=\"" + num(mleft) + "\" y=\"" + num(mtop) + "\" width=\"" +
           num(plot_w) + "\" height=\"" + num(plot_h) +
           "\" fill=\"none\" stroke=\"#222\"/>\n";
    const int nticks = 5;
    for (int t = 0; t < nticks; ++t) {
        double frac = static_cast<double>(t) / (nticks - 1);
        double gv = gs.front() + frac * (gs.back() - gs.front());
        double dv = deltas.front() + frac * (deltas.back() - deltas.front());
        svg += "<text x=\"" + num(mleft + frac * plot_w) + "\" y=\"" +
               num(mtop + plot_h + 18.0) + "\" text-anchor=\"middle\">" + num(gv) +
               "</text>\n";
        svg += "<text x=\"" + num(mleft - 8.0) + "\" y=\"" +
               num(mtop + plot_h - frac * plot_h + 4.0) + "\" text-anchor=\"end\">" +
               num(dv) + "</text>\n";
    }
    svg += "<text x=\"" + num(mleft + plot_w / 2.0) + "\" y=\"" + num(height - 12.0) +
           "\" text-anchor=\"middle\">g</text>\n";
    svg += "<text x=\"16\" y=\"" + num(mtop + plot_h / 2.0) + "\">&#916;</text>\n";

    // legend: vertical gradient bar with min/max
    const double lx = mleft + plot_w + 30.0, lw = 22.0;
    const int strips = 32;
    for (int s = 0; s < strips; ++s) {
        double t = (s + 0.5) / strips;
        double y = mtop + plot_h - (s + 1) * (plot_h / strips);
        svg += "<rect x=\"" + num(lx) + "\" y=\"" + num(y) + "\" width=\"" + num(lw) +
               "\" height=\"" + num(plot_h / strips) + "\" fill=\"" +
               color_hex(flat ? 0.5 : t) + "\"/>\n";
    }
    svg += "<rect x=\"" + num(lx) + "\" y=\"" + num(mtop) + "\" width=\"" + num(lw) +
           "\" height=\"" + num(plot_h) + "\" fill=\"none\" stroke=\"#222\"/>\n";
    svg += "<text x=\"" + num(lx + lw + 6.0) + "\" y=\"" + num(mtop + plot_h) + "\">" +
           num(vmin) + "</text>\n";
    svg += "<text x=\"" + num(lx + lw + 6.0) + "\" y=\"" + num(mtop + 10.0) + "\">" +
           num(vmax) + "</text>\n";
    svg += "<text x=\"" + num(lx) + "\" y=\"" + num(mtop - 8.0) + "\">" +
           std::string(field) + "</text>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace qrabi
