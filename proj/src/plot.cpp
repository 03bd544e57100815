#include "hml/plot.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hml/numeric.hpp"

namespace hml {

namespace {

constexpr double kRoot3Half = 0.8660254037844386;

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// screen mapping: equal scale on both axes so circles stay circles, the real
// axis sits pad_bottom above the lower edge, y grows downward
struct Canvas {
    double width, height, re_min, re_max;
    double sx;
    double pad_bottom = 30.0;
    double pad_top = 16.0;
    std::string body;

    Canvas(const PlotOptions& o)
        : width(o.width), height(o.height), re_min(o.re_min), re_max(o.re_max) {
        if (!(re_max > re_min) || width <= 0 || height <= 0)
            throw std::domain_error("render_svg: degenerate canvas");
        sx = width / (re_max - re_min);
    }

    double X(double re) const { return (re - re_min) * sx; }
    double Y(double im) const { return height - pad_bottom - im * sx; }
    double top_im() const { return (height - pad_bottom - pad_top) / sx; }

    void raw_line(double x1, double y1, double x2, double y2,
                  const char* cls) {
        body += "  <line class=\"" + std::string(cls) + "\" x1=\"" + fmt(x1) +
                "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) + "\" y2=\"" +
                fmt(y2) + "\"/>\n";
    }

    // geodesic segment between two points of the closed upper half-plane
    void seg(Cplx p, Cplx q, const char* cls) {
        if (std::abs(p.real() - q.real()) < 1e-12) {
            raw_line(X(p.real()), Y(p.imag()), X(q.real()), Y(q.imag()), cls);
            return;
        }
        double c = (std::norm(q) - std::norm(p)) /
                   (2.0 * (q.real() - p.real()));
        double r = std::abs(p - Cplx{c, 0.0});
        double thp = std::atan2(p.imag(), p.real() - c);
        double thq = std::atan2(q.imag(), q.real() - c);
        int sweep = thp < thq ? 1 : 0;  // orientation flips with the y-axis
        double rr = r * sx;
        body += "  <path class=\"" + std::string(cls) + "\" d=\"M " +
                fmt(X(p.real())) + " " + fmt(Y(p.imag())) + " A " + fmt(rr) +
                " " + fmt(rr) + " 0 0 " + std::to_string(sweep) + " " +
                fmt(X(q.real())) + " " + fmt(Y(q.imag())) + "\"/>\n";
    }

    // vertical geodesic ray from p toward the cusp at i-infinity
    void vray(Cplx p, const char* cls) {
        raw_line(X(p.real()), Y(p.imag()), X(p.real()), pad_top, cls);
    }

    void arrow_up(double re, const char* cls) {
        double x = X(re);
        double y = pad_top;
        body += "  <polygon class=\"" + std::string(cls) + "\" points=\"" +
                fmt(x) + "," + fmt(y - 8.0) + " " + fmt(x - 5.0) + "," +
                fmt(y + 3.0) + " " + fmt(x + 5.0) + "," + fmt(y + 3.0) +
                "\"/>\n";
    }

    void text(double re, double im, const std::string& s,
              const char* cls = "lbl") {
        body += "  <text class=\"" + std::string(cls) + "\" x=\"" +
                fmt(X(re)) + "\" y=\"" + fmt(Y(im)) + "\">" + s + "</text>\n";
    }

    void dot(Cplx p, const char* cls) {
        body += "  <circle class=\"" + std::string(cls) + "\" cx=\"" +
                fmt(X(p.real())) + "\" cy=\"" + fmt(Y(p.imag())) +
                "\" r=\"3\"/>\n";
    }

    std::string finish() const {
        std::string out;
        out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
               "width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
               "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
        out += "  <style>\n"
               "    .axis { stroke: #888; stroke-width: 1; }\n"
               "    .d { stroke: #1f5fbf; stroke-width: 2; fill: none; }\n"
               "    .dt { stroke: #d07a1f; stroke-width: 2; fill: none; "
               "stroke-dasharray: 7 4; }\n"
               "    .tri { stroke: #1f7a3f; stroke-width: 2; fill: none; }\n"
               "    .cell { stroke: #4f81bd; stroke-width: 1; fill: none; }\n"
               "    .base { fill: #cfe0f4; stroke: none; opacity: 0.7; }\n"
               "    .mark { fill: #333; stroke: none; }\n"
               "    .lbl { font: 14px sans-serif; fill: #222; "
               "text-anchor: middle; }\n"
               "  </style>\n";
        out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        out += body;
        out += "</svg>\n";
        return out;
    }
};

// ---------------------------------------------------------------------------
// cells and their Moebius images

struct Pt {
    bool inf = false;
    Cplx z{0.0, 0.0};
};

struct IMat {
    long long a, b, c, d;
    IMat mul(const IMat& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                c * o.b + d * o.d};
    }
};

Pt apply(const IMat& g, const Pt& p) {
    if (p.inf) {
        if (g.c == 0) return {true, {}};
        return {false, {static_cast<double>(g.a) / static_cast<double>(g.c),
                        0.0}};
    }
    Cplx den = static_cast<double>(g.c) * p.z + static_cast<double>(g.d);
    if (std::abs(den) < 1e-14) return {true, {}};
    return {false,
            (static_cast<double>(g.a) * p.z + static_cast<double>(g.b)) / den};
}

using Edge = std::pair<Pt, Pt>;

std::vector<Edge> cell_edges(DomainGroup group) {
    Pt cusp{true, {}};
    if (group == DomainGroup::SL2Z) {
        Pt l{false, {-0.5, kRoot3Half}};
        Pt r{false, {0.5, kRoot3Half}};
        return {{l, cusp}, {r, cusp}, {l, r}};
    }
    Pt a{false, {-1.5, kRoot3Half}};
    Pt b{false, {-0.5, kRoot3Half}};
    Pt c{false, {0.5, kRoot3Half}};
    return {{a, cusp}, {c, cusp}, {a, b}, {b, c}};
}

std::vector<IMat> generators(DomainGroup group) {
    if (group == DomainGroup::SL2Z)
        return {{1, 1, 0, 1}, {1, -1, 0, 1}, {0, 1, -1, 0}};
    // T^2, its inverse, and the two nontrivial powers of the order-3 corner
    // rotation of the wide cell
    return {{1, 2, 0, 1}, {1, -2, 0, 1}, {-1, -1, 1, 0}, {0, 1, -1, -1}};
}

std::array<long long, 4> canon(const IMat& g) {
    std::array<long long, 4> k{g.a, g.b, g.c, g.d};
    for (long long v : k) {
        if (v > 0) break;
        if (v < 0) {
            for (auto& x : k) x = -x;
            break;
        }
    }
    return k;
}

void draw_cell(Canvas& canvas, const IMat& g, DomainGroup group,
               const char* cls) {
    for (const Edge& e : cell_edges(group)) {
        Pt p = apply(g, e.first);
        Pt q = apply(g, e.second);
        if (p.inf && q.inf) continue;
        if (p.inf) {
            canvas.vray(q.z, cls);
            continue;
        }
        if (q.inf) {
            canvas.vray(p.z, cls);
            continue;
        }
        if (p.z.imag() < 1e-9 && q.z.imag() < 1e-9) continue;
        canvas.seg(p.z, q.z, cls);
    }
}

// ---------------------------------------------------------------------------
// the three picture kinds

void draw_axis(Canvas& canvas) {
    canvas.raw_line(0.0, canvas.Y(0.0), canvas.width, canvas.Y(0.0), "axis");
}

std::string plot_fundamental_domains(const PlotOptions& opt) {
    Canvas canvas(opt);
    draw_axis(canvas);
    Cplx l{-0.5, kRoot3Half}, r{0.5, kRoot3Half};
    Cplx a{-1.5, kRoot3Half};
    // wide cell first so the narrow one draws on top
    canvas.vray(a, "dt");
    canvas.vray(r, "dt");
    canvas.seg(a, l, "dt");
    canvas.seg(l, r, "dt");
    canvas.vray(l, "d");
    canvas.vray(r, "d");
    canvas.seg(l, r, "d");
    canvas.arrow_up(0.0, "mark");
    canvas.text(0.12, canvas.top_im() - 0.06, "i∞");
    canvas.text(0.0, 1.45, "D");
    canvas.text(-1.0, 1.45, "D̃");
    canvas.text(-1.5, -0.12, "-3/2");
    canvas.text(-0.5, -0.12, "-1/2");
    canvas.text(0.5, -0.12, "1/2");
    return canvas.finish();
}

std::string plot_schwarz_triangle(const PlotOptions& opt) {
    Canvas canvas(opt);
    draw_axis(canvas);
    VertexLimits v = vertex_limits(opt.triangle);
    Cplx p = v.at_one.tau;
    Cplx q = v.at_infinity.tau;
    canvas.vray(p, "tri");
    canvas.vray(q, "tri");
    canvas.seg(p, q, "tri");
    const char* label_one = "";
    const char* label_inf = "";
    switch (opt.triangle) {
        case SchwarzId::phi0:
            label_one = "0";
            label_inf = "1";
            break;
        case SchwarzId::phi1:
            label_one = "ω";
            label_inf = "-ω²";
            break;
        case SchwarzId::phi2:
            label_one = "i";
            label_inf = "-ω²";
            break;
    }
    canvas.dot(p, "mark");
    canvas.dot(q, "mark");
    canvas.text(p.real() - 0.12, p.imag() - 0.16, label_one);
    canvas.text(q.real() + 0.14, q.imag() - 0.16, label_inf);
    double mid = 0.5 * (p.real() + q.real());
    canvas.arrow_up(mid, "mark");
    canvas.text(mid + 0.12, canvas.top_im() - 0.06, "i∞");
    return canvas.finish();
}

std::string plot_tessellation(const PlotOptions& opt) {
    if (opt.depth < 0 || opt.depth > 8)
        throw std::domain_error("render_svg: depth must lie in [0, 8]");
    Canvas canvas(opt);
    draw_axis(canvas);

    // shade the base cell
    {
        Cplx l = opt.group == DomainGroup::SL2Z ? Cplx{-0.5, kRoot3Half}
                                                : Cplx{-1.5, kRoot3Half};
        Cplx r{0.5, kRoot3Half};
        double top = canvas.pad_top;
        std::string d = "M " + fmt(canvas.X(l.real())) + " " + fmt(top) +
                        " L " + fmt(canvas.X(l.real())) + " " +
                        fmt(canvas.Y(l.imag()));
        auto arc_to = [&](Cplx from, Cplx to) {
            double c = (std::norm(to) - std::norm(from)) /
                       (2.0 * (to.real() - from.real()));
            double rr = std::abs(from - Cplx{c, 0.0}) * canvas.sx;
            int sweep =
                std::atan2(from.imag(), from.real() - c) <
                        std::atan2(to.imag(), to.real() - c)
                    ? 1
                    : 0;
            d += " A " + fmt(rr) + " " + fmt(rr) + " 0 0 " +
                 std::to_string(sweep) + " " + fmt(canvas.X(to.real())) + " " +
                 fmt(canvas.Y(to.imag()));
        };
        if (opt.group == DomainGroup::SL2Z) {
            arc_to(l, r);
        } else {
            Cplx m{-0.5, kRoot3Half};
            arc_to(l, m);
            arc_to(m, r);
        }
        d += " L " + fmt(canvas.X(r.real())) + " " + fmt(top) + " Z";
        canvas.body += "  <path class=\"base\" d=\"" + d + "\"/>\n";
    }

    std::vector<IMat> gens = generators(opt.group);
    std::set<std::array<long long, 4>> seen;
    std::vector<IMat> frontier = {{1, 0, 0, 1}};
    seen.insert(canon(frontier.front()));
    draw_cell(canvas, frontier.front(), opt.group, "cell");
    for (int step = 0; step < opt.depth; ++step) {
        std::vector<IMat> next;
        for (const IMat& g : frontier)
            for (const IMat& h : gens) {
                IMat gh = g.mul(h);
                if (seen.insert(canon(gh)).second) {
                    draw_cell(canvas, gh, opt.group, "cell");
                    next.push_back(gh);
                }
            }
        frontier = std::move(next);
    }
    canvas.arrow_up(0.0, "mark");
    canvas.text(0.12, canvas.top_im() - 0.06, "i∞");
    return canvas.finish();
}

}  // namespace

std::string render_svg(PlotKind kind, const PlotOptions& opt) {
    switch (kind) {
        case PlotKind::fundamental_domains:
            return plot_fundamental_domains(opt);
        case PlotKind::schwarz_triangle:
            return plot_schwarz_triangle(opt);
        case PlotKind::tessellation:
            return plot_tessellation(opt);
    }
    throw std::logic_error("render_svg: unreachable");
}

}  // namespace hml
