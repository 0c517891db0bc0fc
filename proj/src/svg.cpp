#include "lcmsep/svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>

namespace lcmsep {

namespace {

struct Box {
    double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
    void grow(double x, double y) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
    }
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

void render_svg(std::ostream& os, const Trace& trace, const SvgOptions& opts) {
    Box box;
    bool first = true;
    auto see = [&](const Vec2& p) {
        double x = to_double(p.x), y = to_double(p.y);
        if (first) {
            box = Box{x, y, x, y};
            first = false;
        } else {
            box.grow(x, y);
        }
    };
    for (const auto& r : trace.initial.robots) see(r.position);
    for (const auto& m : trace.moves) {
        see(m.src);
        see(m.dst);
    }
    if (opts.hexagon)
        for (int k = 0; k < 6; ++k) see(opts.hexagon->vertex(k));
    if (opts.circle) {
        double R = opts.circle->radius();
        see(opts.circle->center + Vec2{scalar_from_double(R), scalar_from_double(R)});
        see(opts.circle->center - Vec2{scalar_from_double(R), scalar_from_double(R)});
    }
    double spanx = std::max(box.x1 - box.x0, 1e-9), spany = std::max(box.y1 - box.y0, 1e-9);
    double margin = 0.08 * std::max(spanx, spany);
    box.x0 -= margin;
    box.y0 -= margin;
    box.x1 += margin;
    box.y1 += margin;
    spanx = box.x1 - box.x0;
    spany = box.y1 - box.y0;
    double scale = opts.width / spanx;
    int height = static_cast<int>(std::ceil(spany * scale));
    auto X = [&](const Vec2& p) { return (to_double(p.x) - box.x0) * scale; };
    auto Y = [&](const Vec2& p) { return (box.y1 - to_double(p.y)) * scale; };  // y up

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << opts.width << " " << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (opts.hexagon) {
        os << "<polygon points=\"";
        for (int k = 0; k < 6; ++k)
            os << X(opts.hexagon->vertex(k)) << "," << Y(opts.hexagon->vertex(k)) << " ";
        os << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
    }
    if (opts.circle) {
        os << "<circle cx=\"" << X(opts.circle->center) << "\" cy=\"" << Y(opts.circle->center)
           << "\" r=\"" << opts.circle->radius() * scale
           << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 3\"/>\n";
    }

    // movement strokes, opacity rising with the robot's cycle phase
    std::map<int, int> counts;
    std::map<int, int> done;
    for (const auto& m : trace.moves)
        if (m.src != m.dst) ++counts[m.sim_id];
    for (const auto& m : trace.moves) {
        if (m.src == m.dst) continue;
        int k = done[m.sim_id]++;
        double opacity = counts[m.sim_id] <= 1 ? 1.0 : 0.35 + 0.65 * k / (counts[m.sim_id] - 1);
        const char* color = kPalette[m.sim_id % 6];
        os << "<line x1=\"" << X(m.src) << "\" y1=\"" << Y(m.src) << "\" x2=\"" << X(m.dst)
           << "\" y2=\"" << Y(m.dst) << "\" stroke=\"" << color << "\" stroke-width=\"1.5\""
           << " stroke-opacity=\"" << opacity << "\"/>\n";
    }

    for (const auto& r : trace.initial.robots) {
        const char* color = kPalette[r.sim_id % 6];
        os << "<circle cx=\"" << X(r.position) << "\" cy=\"" << Y(r.position)
           << "\" r=\"4\" fill=\"none\" stroke=\"" << color << "\"/>\n";
        Vec2 fin = trace.position_at(r.sim_id, trace.end_time());
        os << "<circle cx=\"" << X(fin) << "\" cy=\"" << Y(fin) << "\" r=\"4\" fill=\"" << color
           << "\"/>\n";
    }

    // pattern-formation annotations, when present
    for (const auto& e : trace.events) {
        if (e.kind != TraceEvent::Kind::PatternFormed) continue;
        os << "<!-- pattern " << (e.pattern_index ? *e.pattern_index : -1) << " at t="
           << rat_str(e.t) << " -->\n";
    }
    os << "</svg>\n";
}

}  // namespace lcmsep
