#include "ctl/geometry.hpp"

#include <algorithm>

namespace ctl {

Pt operator+(const Pt& a, const Pt& b) { return Pt{a.x + b.x, a.y + b.y}; }
Pt operator-(const Pt& a, const Pt& b) { return Pt{a.x - b.x, a.y - b.y}; }
Pt operator*(const Rat& s, const Pt& p) { return Pt{s * p.x, s * p.y}; }
Pt midpoint(const Pt& a, const Pt& b) { return Pt{(a.x + b.x) / 2, (a.y + b.y) / 2}; }
Pt lerp(const Pt& a, const Pt& b, const Rat& t) {
    return Pt{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

Rat cross(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rat dot(const Pt& o, const Pt& a, const Pt& b) {
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

int orientation_sign(const Pt& p, const Pt& q, const Pt& r) {
    return sgn(cross(p, q, r));
}

Orient orientation(const Pt& p, const Pt& q, const Pt& r) {
    int s = orientation_sign(p, q, r);
    return s > 0 ? Orient::Left : s < 0 ? Orient::Right : Orient::Collinear;
}

bool on_segment(const Pt& p, const Pt& a, const Pt& b) {
    if (orientation_sign(a, b, p) != 0) return false;
    if (a == b) return p == a;
    // collinear: check dot products
    return dot(p, a, b) <= 0;
}

bool segments_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    if (a == b) return on_segment(a, c, d);
    if (c == d) return on_segment(c, a, b);
    int d1 = orientation_sign(c, d, a);
    int d2 = orientation_sign(c, d, b);
    int d3 = orientation_sign(a, b, c);
    int d4 = orientation_sign(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(a, c, d)) return true;
    if (d2 == 0 && on_segment(b, c, d)) return true;
    if (d3 == 0 && on_segment(c, a, b)) return true;
    if (d4 == 0 && on_segment(d, a, b)) return true;
    return false;
}

StabObject StabObject::point(Pt p) { return StabObject{ObjKind::Point, {std::move(p)}}; }

StabObject StabObject::segment(Pt a, Pt b) {
    return StabObject{ObjKind::Segment, {std::move(a), std::move(b)}};
}

StabObject StabObject::bend(Pt a, Pt apex, Pt b) {
    return StabObject{ObjKind::Bend, {std::move(a), std::move(apex), std::move(b)}};
}

std::vector<std::pair<Pt, Pt>> StabObject::arms() const {
    switch (kind) {
        case ObjKind::Point: return {{verts[0], verts[0]}};
        case ObjKind::Segment: return {{verts[0], verts[1]}};
        case ObjKind::Bend: return {{verts[0], verts[1]}, {verts[1], verts[2]}};
    }
    return {};
}

void StabObject::check_valid() const {
    switch (kind) {
        case ObjKind::Point:
            if (verts.size() != 1) throw std::invalid_argument("point needs 1 vertex");
            break;
        case ObjKind::Segment:
            if (verts.size() != 2 || verts[0] == verts[1])
                throw std::invalid_argument("segment needs 2 distinct vertices");
            break;
        case ObjKind::Bend:
            if (verts.size() != 3 || verts[0] == verts[1] || verts[1] == verts[2])
                throw std::invalid_argument("bend needs apex distinct from both arms");
            break;
    }
}

bool objects_intersect(const StabObject& a, const StabObject& b) {
    for (const auto& [p, q] : a.arms())
        for (const auto& [r, s] : b.arms())
            if (segments_intersect(p, q, r, s)) return true;
    return false;
}

bool objects_disjoint(std::span<const StabObject> objs) {
    for (size_t i = 0; i < objs.size(); ++i)
        for (size_t j = i + 1; j < objs.size(); ++j)
            if (objects_intersect(objs[i], objs[j])) return false;
    return true;
}

bool objects_disjoint(const std::vector<StabObject>& objs) {
    return objects_disjoint(std::span<const StabObject>(objs));
}

namespace {

// Collapse cyclically-consecutive duplicate points.
std::vector<Pt> collapse_dups(std::span<const Pt> pts) {
    std::vector<Pt> out;
    for (const Pt& p : pts)
        if (out.empty() || out.back() != p) out.push_back(p);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

// Direction lies in the closed upper half-turn [0, pi): y > 0, or y == 0 and x > 0.
bool upper_half(const Pt& d) { return d.y > 0 || (d.y == 0 && d.x > 0); }

}  // namespace

bool weakly_convex_position(std::span<const Pt> pts) {
    std::vector<Pt> p = collapse_dups(pts);
    size_t n = p.size();
    if (n <= 2) return true;

    bool all_collinear = true;
    for (size_t i = 2; i < n && all_collinear; ++i)
        if (orientation_sign(p[0], p[1], p[i]) != 0) all_collinear = false;
    if (all_collinear) return false;

    std::vector<Pt> dir(n);
    for (size_t i = 0; i < n; ++i) dir[i] = p[(i + 1) % n] - p[i];

    for (size_t i = 0; i < n; ++i) {
        const Pt& d1 = dir[i];
        const Pt& d2 = dir[(i + 1) % n];
        Rat cr = d1.x * d2.y - d1.y * d2.x;
        if (cr < 0) return false;  // right turn
        if (cr == 0 && d1.x * d2.x + d1.y * d2.y < 0) return false;  // U-turn
    }

    // One full revolution: the direction sequence leaves the upper half-turn
    // exactly once. Each turn is < pi, so no transition can be skipped.
    int entries = 0;
    for (size_t i = 0; i < n; ++i)
        if (!upper_half(dir[i]) && upper_half(dir[(i + 1) % n])) ++entries;
    return entries == 1;
}

bool weakly_convex_position(const std::vector<Pt>& pts) {
    return weakly_convex_position(std::span<const Pt>(pts));
}

Pt circle_point(const Rat& t) {
    Rat t2 = t * t;
    Rat den = 1 + t2;
    return Pt{(1 - t2) / den, (2 * t) / den};
}

std::vector<Pt> convex_hull(std::vector<Pt> pts) {
    std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Pt> h(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && orientation_sign(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
        while (k >= t && orientation_sign(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

bool on_hull_boundary(const Pt& p, const std::vector<Pt>& hull) {
    size_t n = hull.size();
    if (n == 0) return false;
    if (n == 1) return p == hull[0];
    for (size_t i = 0; i < n; ++i)
        if (on_segment(p, hull[i], hull[(i + 1) % n])) return true;
    return false;
}

std::vector<std::pair<Pt, Pt>> ConvexCycle::edges() const {
    std::vector<std::pair<Pt, Pt>> e;
    size_t n = verts.size();
    if (n == 1) {
        e.emplace_back(verts[0], verts[0]);
        return e;
    }
    for (size_t i = 0; i < n; ++i) e.emplace_back(verts[i], verts[(i + 1) % n]);
    return e;
}

ConvexCycle validate_cycle(std::vector<Pt> verts, bool allow_degenerate) {
    size_t n = verts.size();
    if (n == 0) throw cycle_error(cycle_error::TooFewVertices, "empty cycle");
    if (n < 3) {
        if (!allow_degenerate)
            throw cycle_error(cycle_error::TooFewVertices, "fewer than 3 vertices");
        if (n == 2 && verts[0] == verts[1]) verts.pop_back();
        return ConvexCycle{std::move(verts)};
    }
    // signed area for orientation
    Rat area2 = 0;
    for (size_t i = 0; i < n; ++i) {
        const Pt& a = verts[i];
        const Pt& b = verts[(i + 1) % n];
        area2 += a.x * b.y - b.x * a.y;
    }
    if (area2 == 0) {
        if (allow_degenerate) {
            // flat: keep the two extreme points as a degenerate 2-gon
            auto h = convex_hull(verts);
            if (h.size() > 2) throw cycle_error(cycle_error::NotConvex, "flat cycle");
            return ConvexCycle{std::move(h)};
        }
        throw cycle_error(cycle_error::NotConvex, "zero-area cycle");
    }
    if (area2 < 0) std::reverse(verts.begin(), verts.end());
    for (size_t i = 0; i < n; ++i) {
        int s = orientation_sign(verts[i], verts[(i + 1) % n], verts[(i + 2) % n]);
        if (s < 0) throw cycle_error(cycle_error::NotConvex, "reflex or collinear-back turn");
        if (s == 0) throw cycle_error(cycle_error::NotConvex, "collinear consecutive vertices");
    }
    // strict left turns everywhere can still wind > once (star polygons)
    std::vector<Pt> dirs(n);
    for (size_t i = 0; i < n; ++i) dirs[i] = verts[(i + 1) % n] - verts[i];
    int entries = 0;
    for (size_t i = 0; i < n; ++i) {
        auto up = [](const Pt& d) { return d.y > 0 || (d.y == 0 && d.x > 0); };
        if (!up(dirs[i]) && up(dirs[(i + 1) % n])) ++entries;
    }
    if (entries != 1) throw cycle_error(cycle_error::NotSimple, "winds more than once");
    return ConvexCycle{std::move(verts)};
}

bool boundary_stabs(const ConvexCycle& cycle, const StabObject& obj) {
    if (cycle.verts.empty()) throw cycle_error(cycle_error::TooFewVertices, "empty cycle");
    for (const auto& [a, b] : cycle.edges())
        for (const auto& [c, d] : obj.arms())
            if (segments_intersect(a, b, c, d)) return true;
    return false;
}

}  // namespace ctl
