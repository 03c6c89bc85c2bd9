#include "floercx/render.hpp"

#include <algorithm>
#include <sstream>

namespace floercx {

namespace {

struct Bounds {
    Rat xmin, xmax, ymin, ymax;
    bool any = false;
    void add(const Point& p) {
        if (!any) {
            xmin = xmax = p.x;
            ymin = ymax = p.y;
            any = true;
            return;
        }
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
};

// SVG y runs downward; flip y so the picture matches the plane.
std::string coord(const Rat& v) { return rat_decimal(v, 4); }
std::string xy(const Point& p) { return coord(p.x) + "," + coord(-p.y); }

void emit_polyline(std::ostringstream& out, const std::vector<Point>& pts,
                   const std::string& color, const std::string& width, bool closed) {
    out << "<path d=\"M " << xy(pts[0]);
    for (size_t i = 1; i < pts.size(); ++i) out << " L " << xy(pts[i]);
    if (closed) out << " Z";
    out << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << width << "\"/>\n";
}

std::vector<Point> face_polygon(const Arrangement& arr, int face) {
    // Boundary walk of the face: darts whose left face is `face`.
    int start = -1;
    for (int d = 0; d < 2 * static_cast<int>(arr.edges.size()); ++d)
        if (arr.face_left_of(d) == face) {
            start = d;
            break;
        }
    std::vector<Point> poly;
    if (start < 0) return poly;
    int d = start;
    do {
        const auto& pts = arr.edges[arr.dart_edge(d)].pts;
        if (arr.dart_fwd(d)) {
            for (size_t i = 0; i + 1 < pts.size(); ++i) poly.push_back(pts[i]);
        } else {
            for (size_t i = pts.size(); i-- > 1;) poly.push_back(pts[i]);
        }
        d = arr.next_on_face(d);
    } while (d != start);
    return poly;
}

}  // namespace

std::string render_svg(const RenderScene& scene) {
    Bounds b;
    if (scene.curve)
        for (const Point& p : scene.curve->verts) b.add(p);
    if (scene.pushoff)
        for (const Point& p : scene.pushoff->verts) b.add(p);
    if (!b.any) b.add(Point{Rat(0), Rat(0)});
    Rat pad = std::max(Rat(1), (b.xmax - b.xmin) / 10);
    Rat x0 = b.xmin - pad, y0 = -(b.ymax + pad);
    Rat w = b.xmax - b.xmin + 2 * pad, h = b.ymax - b.ymin + 2 * pad;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << coord(x0) << " "
        << coord(y0) << " " << coord(w) << " " << coord(h)
        << "\" width=\"640\" height=\"640\">\n";

    // Shaded discs first, curves above, labels on top.
    for (size_t k = 0; k < scene.highlights.size(); ++k) {
        const Bigon* bg = scene.highlights[k];
        if (!bg || !scene.arr) continue;
        for (int f = 0; f < scene.arr->n_faces; ++f) {
            if (f == scene.arr->outer_face || bg->winding[f] <= 0) continue;
            auto poly = face_polygon(*scene.arr, f);
            if (poly.empty()) continue;
            out << "<path d=\"M " << xy(poly[0]);
            for (size_t i = 1; i < poly.size(); ++i) out << " L " << xy(poly[i]);
            out << " Z\" fill=\"#9ecae1\" fill-opacity=\"0.45\" stroke=\"none\">"
                << "<title>w=" << bg->winding[f] << "</title></path>\n";
        }
    }
    if (scene.curve) {
        std::vector<Point> pts = scene.curve->verts;
        pts.push_back(scene.curve->verts[0]);
        emit_polyline(out, pts, "black", "0.05", false);
    }
    if (scene.pushoff) {
        std::vector<Point> pts = scene.pushoff->verts;
        pts.push_back(scene.pushoff->verts[0]);
        emit_polyline(out, pts, "red", "0.035", false);
    }
    if (scene.complex) {
        for (int i = 0; i < scene.complex->size(); ++i) {
            const Generator& g = scene.complex->gens[i];
            out << "<circle cx=\"" << coord(g.at.x) << "\" cy=\"" << coord(-g.at.y)
                << "\" r=\"0.08\" fill=\"#333333\"/>\n";
            out << "<text x=\"" << coord(g.at.x + Rat(1, 8)) << "\" y=\""
                << coord(-g.at.y - Rat(1, 8)) << "\" font-size=\"0.3\" fill=\"#333333\">"
                << g.label << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace floercx
