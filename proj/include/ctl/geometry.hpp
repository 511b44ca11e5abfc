#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "ctl/rational.hpp"

namespace ctl {

struct Pt {
    Rat x, y;
    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Pt& o) const { return !(*this == o); }
};

inline Pt pt(long x, long y) { return Pt{rat(x), rat(y)}; }

Pt operator+(const Pt& a, const Pt& b);
Pt operator-(const Pt& a, const Pt& b);
Pt operator*(const Rat& s, const Pt& p);
Pt midpoint(const Pt& a, const Pt& b);
Pt lerp(const Pt& a, const Pt& b, const Rat& t);  // a + t*(b-a)

enum class Orient { Left, Right, Collinear };

// Sign of det(q-p, r-p). Exact.
Orient orientation(const Pt& p, const Pt& q, const Pt& r);
int orientation_sign(const Pt& p, const Pt& q, const Pt& r);  // +1 Left, -1 Right, 0

Rat cross(const Pt& o, const Pt& a, const Pt& b);
Rat dot(const Pt& o, const Pt& a, const Pt& b);  // (a-o).(b-o)

// p on the closed segment [a, b]; a == b degenerates to point equality.
bool on_segment(const Pt& p, const Pt& a, const Pt& b);

// Closed segments share at least one point. Handles collinear overlap,
// endpoint touching, and zero-length segments.
bool segments_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

enum class ObjKind { Point, Segment, Bend };

// The things a stabber must hit. A bend stores (arm end, apex, arm end);
// degenerate bends are represented by Point / Segment directly.
struct StabObject {
    ObjKind kind = ObjKind::Point;
    std::vector<Pt> verts;  // 1, 2, or 3 points; bend apex is verts[1]

    static StabObject point(Pt p);
    static StabObject segment(Pt a, Pt b);
    static StabObject bend(Pt a, Pt apex, Pt b);

    // Arm segments as (first, second) pairs; a point yields one degenerate arm.
    std::vector<std::pair<Pt, Pt>> arms() const;
    void check_valid() const;  // throws std::invalid_argument
};

bool objects_intersect(const StabObject& a, const StabObject& b);
bool objects_disjoint(std::span<const StabObject> objs);
bool objects_disjoint(const std::vector<StabObject>& objs);

// Ordered points lie on the boundary of some convex polygon in this cyclic
// order: every cyclic turn is Left or Collinear, no U-turns, the direction
// sequence winds exactly once, and when there are >= 3 distinct points they
// are not all collinear. Lengths 1 and 2 are degenerate cycles and accepted.
bool weakly_convex_position(std::span<const Pt> pts);
bool weakly_convex_position(const std::vector<Pt>& pts);

// ((1-t^2)/(1+t^2), 2t/(1+t^2)); exactly on the unit circle for every rational t.
Pt circle_point(const Rat& t);

struct cycle_error : std::runtime_error {
    enum Code { NotConvex, NotSimple, TooFewVertices } code;
    cycle_error(Code c, const std::string& what) : std::runtime_error(what), code(c) {}
};

// Strictly convex CCW vertex list. Degenerate cycles (1 or 2 vertices) exist
// only when constructed with allow_degenerate.
struct ConvexCycle {
    std::vector<Pt> verts;

    // Closed boundary edges; a single vertex yields one degenerate edge.
    std::vector<std::pair<Pt, Pt>> edges() const;
    bool degenerate() const { return verts.size() < 3; }
};

// Validates and normalizes to CCW. Throws cycle_error.
ConvexCycle validate_cycle(std::vector<Pt> verts, bool allow_degenerate = false);

// True iff the closed polygon boundary meets the object (any arm).
bool boundary_stabs(const ConvexCycle& cycle, const StabObject& obj);

// Strict convex hull, CCW, no collinear vertices. Empty/1/2-point inputs
// return what they can.
std::vector<Pt> convex_hull(std::vector<Pt> pts);

// p lies on the boundary (vertex or edge) of the strict hull `hull` (CCW).
bool on_hull_boundary(const Pt& p, const std::vector<Pt>& hull);

}  // namespace ctl
