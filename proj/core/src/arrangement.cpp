#include "floercx/arrangement.hpp"

#include "floercx/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace floercx {

Vec Arrangement::dart_out_dir(int d) const {
    const Edge& e = edges[d >> 1];
    size_t n = e.pts.size();
    if (dart_fwd(d)) return e.pts[1] - e.pts[0];
    return e.pts[n - 2] - e.pts[n - 1];
}

int Arrangement::dart_slot(int d) const {
    const auto& ds = verts[dart_tail(d)].darts;
    for (size_t i = 0; i < ds.size(); ++i)
        if (ds[i] == d) return static_cast<int>(i);
    throw std::logic_error("dart_slot: dart not registered at its tail");
}

int Arrangement::next_on_face(int d) const {
    int r = dart_rev(d);
    const auto& ds = verts[dart_tail(r)].darts;
    int slot = dart_slot(r);
    int deg = static_cast<int>(ds.size());
    return ds[(slot + deg - 1) % deg];  // clockwise neighbour of the reversal
}

int Arrangement::edge_containing(int curve, const CurveParam& p) const {
    const Curve& c = curves[curve];
    Rat pos = c.linear_pos(p);
    for (int eid : curve_edges[curve]) {
        const Edge& e = edges[eid];
        Rat a = c.linear_pos(e.from), b = c.linear_pos(e.to);
        if (a < b) {
            if (pos > a && pos < b) return eid;
        } else {  // wraps around the origin of the parametrization
            if (pos > a || pos < b) return eid;
        }
    }
    throw std::invalid_argument("edge_containing: param is a cut point or not found");
}

int Arrangement::cut_position(int curve, const CurveParam& p) const {
    const auto& list = curve_edges[curve];
    for (size_t k = 0; k < list.size(); ++k) {
        const Edge& e = edges[list[k]];
        if (curves[curve].mod(e.from.seg) == curves[curve].mod(p.seg) && e.from.t == p.t)
            return static_cast<int>(k);
    }
    throw std::invalid_argument("cut_position: param is not a cut point");
}

namespace {

struct PointCmp {
    bool operator()(const Point& a, const Point& b) const { return point_less(a, b); }
};

struct Cut {
    CurveParam param;
    int vertex;
};

std::vector<Point> whole_curve_loop(const Curve& c) {
    std::vector<Point> pts = c.verts;
    pts.push_back(c.verts[0]);
    return pts;
}

Arrangement build_impl(std::vector<Curve> curves) {
    Arrangement arr;
    arr.curves = std::move(curves);
    int nc = arr.ncurves();
    arr.sis.resize(nc);
    for (int k = 0; k < nc; ++k) arr.sis[k] = self_intersections(arr.curves[k]);
    if (nc == 2) arr.crossings = curve_intersections(arr.curves[0], arr.curves[1]);

    // Vertices, with global location-distinctness check.
    std::map<Point, int, PointCmp> vert_at;
    auto add_vertex = [&](const Point& p, Arrangement::Vertex::Kind kind, int curve,
                          int index) -> int {
        if (vert_at.count(p))
            throw GenericityError("coincident crossing points at " + point_str(p));
        Arrangement::Vertex v;
        v.at = p;
        v.kind = kind;
        v.curve = curve;
        v.index = index;
        int id = static_cast<int>(arr.verts.size());
        arr.verts.push_back(std::move(v));
        vert_at[p] = id;
        return id;
    };

    std::vector<std::vector<Cut>> cuts(nc);
    for (int k = 0; k < nc; ++k) {
        for (size_t i = 0; i < arr.sis[k].size(); ++i) {
            int vid = add_vertex(arr.sis[k][i].at, Arrangement::Vertex::SelfIx, k,
                                 static_cast<int>(i));
            cuts[k].push_back({arr.sis[k][i].p, vid});
            cuts[k].push_back({arr.sis[k][i].q, vid});
        }
    }
    for (size_t i = 0; i < arr.crossings.size(); ++i) {
        int vid = add_vertex(arr.crossings[i].at, Arrangement::Vertex::Crossing, -1,
                             static_cast<int>(i));
        cuts[0].push_back({arr.crossings[i].on_a, vid});
        cuts[1].push_back({arr.crossings[i].on_b, vid});
    }

    // Edges along each curve between consecutive cut params.
    arr.curve_edges.resize(nc);
    for (int k = 0; k < nc; ++k) {
        const Curve& c = arr.curves[k];
        auto& cl = cuts[k];
        if (cl.empty()) {
            // Embedded component: anchor one artificial degree-2 vertex.
            int vid = add_vertex(c.vertex(0), Arrangement::Vertex::Anchor, k, -1);
            Arrangement::Edge e;
            e.curve = k;
            e.from = e.to = CurveParam{0, Rat(0)};
            e.pts = whole_curve_loop(c);
            e.v_from = e.v_to = vid;
            arr.curve_edges[k].push_back(static_cast<int>(arr.edges.size()));
            arr.edges.push_back(std::move(e));
            continue;
        }
        std::sort(cl.begin(), cl.end(),
                  [](const Cut& x, const Cut& y) { return param_less(x.param, y.param); });
        for (size_t i = 0; i + 1 < cl.size(); ++i)
            if (cl[i].param == cl[i + 1].param)
                throw GenericityError("coincident cut parameters on curve " + std::to_string(k));
        for (size_t i = 0; i < cl.size(); ++i) {
            const Cut& from = cl[i];
            const Cut& to = cl[(i + 1) % cl.size()];
            Arrangement::Edge e;
            e.curve = k;
            e.from = from.param;
            e.to = to.param;
            e.pts = arc_between(c, from.param, to.param, Direction::Forward);
            e.v_from = from.vertex;
            e.v_to = to.vertex;
            arr.curve_edges[k].push_back(static_cast<int>(arr.edges.size()));
            arr.edges.push_back(std::move(e));
        }
    }

    // Darts at vertices, sorted counterclockwise; equal directions mean a
    // tangency the genericity preconditions exclude.
    for (int e = 0; e < static_cast<int>(arr.edges.size()); ++e) {
        arr.verts[arr.edges[e].v_from].darts.push_back(2 * e);
        arr.verts[arr.edges[e].v_to].darts.push_back(2 * e + 1);
    }
    for (auto& v : arr.verts) {
        std::sort(v.darts.begin(), v.darts.end(), [&](int d1, int d2) {
            return dir_ccw_less(arr.dart_out_dir(d1), arr.dart_out_dir(d2));
        });
        for (size_t i = 0; i + 1 < v.darts.size(); ++i) {
            Vec a = arr.dart_out_dir(v.darts[i]), b = arr.dart_out_dir(v.darts[i + 1]);
            if (cross(a, b) == 0 && dot(a, b) > 0)
                throw GenericityError("tangential darts at " + point_str(v.at));
        }
    }

    // Faces: orbits of next_on_face; each orbit is the ccw boundary of the
    // face on the left of its darts, and the unique orbit with negative
    // signed area is the unbounded face.
    int ndarts = 2 * static_cast<int>(arr.edges.size());
    std::vector<int> face_of(ndarts, -1);
    std::vector<Rat> area;
    for (int d0 = 0; d0 < ndarts; ++d0) {
        if (face_of[d0] != -1) continue;
        int f = arr.n_faces++;
        Rat a(0);
        int d = d0;
        do {
            face_of[d] = f;
            const auto& pts = arr.edges[arr.dart_edge(d)].pts;
            if (arr.dart_fwd(d)) {
                for (size_t i = 0; i + 1 < pts.size(); ++i) a += cross(pts[i], pts[i + 1]);
            } else {
                for (size_t i = pts.size(); i-- > 1;) a += cross(pts[i], pts[i - 1]);
            }
            d = arr.next_on_face(d);
        } while (d != d0);
        area.push_back(a);
    }
    for (int e = 0; e < static_cast<int>(arr.edges.size()); ++e) {
        arr.edges[e].face_left = face_of[2 * e];
        arr.edges[e].face_right = face_of[2 * e + 1];
    }
    for (int f = 0; f < arr.n_faces; ++f) {
        if (area[f] < 0) {
            if (arr.outer_face != -1)
                throw GenericityError("arrangement is not connected (two outer cycles)");
            arr.outer_face = f;
        } else if (area[f] == 0) {
            throw std::logic_error("face with zero signed area");
        }
    }
    if (arr.outer_face == -1) throw std::logic_error("no outer face found");

    // Euler check V - E + F = 2 for the connected subdivision.
    {
        int V = static_cast<int>(arr.verts.size());
        int E = static_cast<int>(arr.edges.size());
        int F = arr.n_faces;
        if (V - E + F != 2)
            throw GenericityError("Euler check failed: V-E+F = " + std::to_string(V - E + F));
    }

    // Winding numbers per curve via breadth-first jump propagation.
    arr.winding.assign(arr.n_faces, {0, 0});
    std::vector<bool> seen(arr.n_faces, false);
    std::vector<int> queue = {arr.outer_face};
    seen[arr.outer_face] = true;
    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        for (int e = 0; e < static_cast<int>(arr.edges.size()); ++e) {
            const auto& ed = arr.edges[e];
            int l = ed.face_left, r = ed.face_right;
            for (int other : {l, r}) {
                int self = (other == l) ? r : l;
                if (self != f || seen[other]) continue;
                arr.winding[other] = arr.winding[f];
                arr.winding[other][ed.curve] += (other == l) ? 1 : -1;
                seen[other] = true;
                queue.push_back(other);
            }
        }
    }
    for (int e = 0; e < static_cast<int>(arr.edges.size()); ++e) {
        const auto& ed = arr.edges[e];
        for (int k = 0; k < 2; ++k) {
            int expect = (k == ed.curve) ? 1 : 0;
            if (arr.winding[ed.face_left][k] - arr.winding[ed.face_right][k] != expect)
                throw std::logic_error("winding propagation inconsistent");
        }
    }

    // Sector faces: sector i at a vertex is the face left of darts[i].
    for (auto& v : arr.verts) {
        int deg = static_cast<int>(v.darts.size());
        v.sector_face.resize(deg);
        for (int i = 0; i < deg; ++i) {
            v.sector_face[i] = face_of[v.darts[i]];
            int nxt = v.darts[(i + 1) % deg];
            if (arr.face_right_of(nxt) != v.sector_face[i])
                throw std::logic_error("sector face mismatch at " + point_str(v.at));
        }
    }
    return arr;
}

}  // namespace

Arrangement build_arrangement(const Curve& c) { return build_impl({c}); }

Arrangement build_arrangement(const Curve& black, const Curve& red) {
    return build_impl({black, red});
}

std::string Arrangement::dump() const {
    std::ostringstream out;
    out << "arrangement: " << verts.size() << " vertices, " << edges.size() << " edges, "
        << n_faces << " faces (outer " << outer_face << ")\n";
    std::vector<std::vector<int>> boundary(n_faces);
    for (int d = 0; d < 2 * static_cast<int>(edges.size()); ++d)
        boundary[face_left_of(d)].push_back(d);
    for (int f = 0; f < n_faces; ++f) {
        out << "face " << f << (f == outer_face ? " (outer)" : "") << " winding";
        for (int k = 0; k < ncurves(); ++k) out << " " << winding[f][k];
        out << " boundary";
        for (int d : boundary[f])
            out << " " << (dart_fwd(d) ? "+" : "-") << dart_edge(d);
        out << "\n";
    }
    for (size_t e = 0; e < edges.size(); ++e) {
        const Edge& ed = edges[e];
        out << "edge " << e << " curve " << ed.curve << " [" << ed.from.seg << ":"
            << rat_str(ed.from.t) << " -> " << ed.to.seg << ":" << rat_str(ed.to.t) << "] faces "
            << ed.face_left << "|" << ed.face_right << "\n";
    }
    return out.str();
}

}  // namespace floercx
