#include "eigenfence/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "eigenfence/errors.hpp"

namespace eigenfence {

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
}

struct Transform {
    Box view;
    double scale = 1.0;
    double width_px = 0.0;
    double height_px = 0.0;

    double x(double re) const { return (re - view.x0) * scale; }
    double y(double im) const { return (view.y1 - im) * scale; }
};

Transform make_transform(const Box& view, int size_px) {
    Transform t;
    t.view = view;
    t.scale = size_px / std::max(view.width(), view.height());
    t.width_px = view.width() * t.scale;
    t.height_px = view.height() * t.scale;
    return t;
}

void extend(Box& acc, bool& any, const Box& b) {
    if (b.empty()) return;
    if (!any) {
        acc = b;
        any = true;
        return;
    }
    acc.x0 = std::min(acc.x0, b.x0);
    acc.x1 = std::max(acc.x1, b.x1);
    acc.y0 = std::min(acc.y0, b.y0);
    acc.y1 = std::max(acc.y1, b.y1);
}

void emit_discs(std::string& out, const DiscUnion& u, const Transform& t) {
    for (const auto& d : u.discs)
        out += "<circle cx=\"" + fmt(t.x(d.center)) + "\" cy=\"" + fmt(t.y(0.0)) + "\" r=\"" +
               fmt(d.radius * t.scale) + "\"/>\n";
}

// Marching squares over the whole viewport. Cells entirely inside are merged
// into horizontal runs; boundary cells become polygons through the corners
// inside and the interpolated crossings.
void emit_traced(std::string& out, const Region& r, const Transform& t, int raster) {
    const double cell = std::max(t.width_px, t.height_px) / raster;
    const int nx = std::max(1, static_cast<int>(std::ceil(t.width_px / cell - 1e-9)));
    const int ny = std::max(1, static_cast<int>(std::ceil(t.height_px / cell - 1e-9)));

    const Box bb = bounding_box(r);
    if (bb.empty()) return;

    std::vector<double> m(static_cast<std::size_t>((nx + 1) * (ny + 1)));
    auto at = [&](int i, int j) -> double& { return m[static_cast<std::size_t>(j * (nx + 1) + i)]; };
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i) {
            const double re = t.view.x0 + i * cell / t.scale;
            const double im = t.view.y1 - j * cell / t.scale;
            // Outside the bounding box the score is only needed for its sign.
            const bool far = re < bb.x0 - cell / t.scale || re > bb.x1 + cell / t.scale ||
                             im < bb.y0 - cell / t.scale || im > bb.y1 + cell / t.scale;
            at(i, j) = far ? 1.0 : margin(r, {re, im});
        }

    for (int j = 0; j < ny; ++j) {
        int run_start = -1;
        auto flush = [&](int end) {
            if (run_start < 0) return;
            out += "<rect x=\"" + fmt(run_start * cell) + "\" y=\"" + fmt(j * cell) + "\" width=\"" +
                   fmt((end - run_start) * cell) + "\" height=\"" + fmt(cell) + "\"/>\n";
            run_start = -1;
        };
        for (int i = 0; i < nx; ++i) {
            // corners clockwise from top-left, in pixel units
            const double px[4] = {i * cell, (i + 1) * cell, (i + 1) * cell, i * cell};
            const double py[4] = {j * cell, j * cell, (j + 1) * cell, (j + 1) * cell};
            const double v[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
            int inside = 0;
            for (double x : v) inside += x <= 0.0 ? 1 : 0;
            if (inside == 4) {
                if (run_start < 0) run_start = i;
                continue;
            }
            flush(i);
            if (inside == 0) continue;
            std::string pts;
            auto add = [&](double x, double y) {
                if (!pts.empty()) pts += ' ';
                pts += fmt(x) + "," + fmt(y);
            };
            for (int c = 0; c < 4; ++c) {
                const int d = (c + 1) % 4;
                if (v[c] <= 0.0) add(px[c], py[c]);
                if ((v[c] <= 0.0) != (v[d] <= 0.0)) {
                    const double s = v[c] / (v[c] - v[d]);
                    add(px[c] + s * (px[d] - px[c]), py[c] + s * (py[d] - py[c]));
                }
            }
            out += "<polygon points=\"" + pts + "\"/>\n";
        }
        flush(nx);
    }
}

}  // namespace

Box scene_viewport(const Scene& s) {
    if (s.viewport) {
        const Box& v = *s.viewport;
        if (!(v.width() > 0.0 && v.height() > 0.0) || !std::isfinite(v.width()) || !std::isfinite(v.height()))
            throw ViewportError("viewport must have positive finite width and height");
        return v;
    }
    Box acc;
    bool any = false;
    for (const auto& layer : s.layers) extend(acc, any, bounding_box(layer.region));
    for (const auto& p : s.points) extend(acc, any, Box{p.z.real(), p.z.real(), p.z.imag(), p.z.imag()});
    if (!any) acc = Box{-1.0, 1.0, -1.0, 1.0};

    double w = acc.width(), h = acc.height();
    const double span = std::max({w, h, 1e-9});
    if (w < 1e-3 * span || h < 1e-3 * span) {
        // degenerate extent (a lone point or a segment): give it room
        const double half = std::max(span, 2.0) / 2.0;
        const double cx = 0.5 * (acc.x0 + acc.x1), cy = 0.5 * (acc.y0 + acc.y1);
        if (w < 1e-3 * span) acc.x0 = cx - half, acc.x1 = cx + half;
        if (h < 1e-3 * span) acc.y0 = cy - half, acc.y1 = cy + half;
        w = acc.width();
        h = acc.height();
    }
    const double pad_x = 0.1 * w, pad_y = 0.1 * h;
    return Box{acc.x0 - pad_x, acc.x1 + pad_x, acc.y0 - pad_y, acc.y1 + pad_y};
}

std::string render_svg(const Scene& s) {
    if (s.size_px < 1 || s.raster < 1) throw std::invalid_argument("size_px and raster must be positive");
    const Transform t = make_transform(scene_viewport(s), s.size_px);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(t.width_px) +
           "\" height=\"" + fmt(t.height_px) + "\" viewBox=\"0 0 " + fmt(t.width_px) + " " + fmt(t.height_px) +
           "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + fmt(t.width_px) + "\" height=\"" + fmt(t.height_px) +
           "\" fill=\"#ffffff\"/>\n";

    for (const auto& layer : s.layers) {
        out += "<g fill=\"" + layer.fill + "\" opacity=\"" + fmt(layer.opacity) + "\" stroke=\"none\">\n";
        if (const auto* u = std::get_if<DiscUnion>(&layer.region.shape))
            emit_discs(out, *u, t);
        else
            emit_traced(out, layer.region, t, s.raster);
        out += "</g>\n";
    }

    out += "<g stroke=\"#000000\" stroke-width=\"1\">\n";
    if (t.view.y0 <= 0.0 && 0.0 <= t.view.y1)
        out += "<line x1=\"0.00\" y1=\"" + fmt(t.y(0.0)) + "\" x2=\"" + fmt(t.width_px) + "\" y2=\"" +
               fmt(t.y(0.0)) + "\"/>\n";
    if (t.view.x0 <= 0.0 && 0.0 <= t.view.x1)
        out += "<line x1=\"" + fmt(t.x(0.0)) + "\" y1=\"0.00\" x2=\"" + fmt(t.x(0.0)) + "\" y2=\"" +
               fmt(t.height_px) + "\"/>\n";
    out += "</g>\n";

    out += "<g class=\"points\">\n";
    for (const auto& p : s.points)
        out += "<circle cx=\"" + fmt(t.x(p.z.real())) + "\" cy=\"" + fmt(t.y(p.z.imag())) + "\" r=\"3.00\" fill=\"" +
               p.color + "\"/>\n";
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace eigenfence
