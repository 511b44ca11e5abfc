#include "ctl/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

namespace ctl {

CandidateSet make_candidates(const Instance& inst, int density) {
    if (density < 0) throw solver_error("density must be >= 0");
    CandidateSet cs;
    cs.per_object.reserve(inst.objects.size());
    for (const InstanceObject& o : inst.objects) {
        std::vector<Pt> pts = o.anchors;
        for (const Pt& v : o.obj.verts) pts.push_back(v);
        for (const auto& [a, b] : o.obj.arms()) {
            if (a == b) continue;
            for (int k = 1; k <= density; ++k)
                pts.push_back(lerp(a, b, Rat(k, density + 1)));
        }
        std::vector<Pt> uniq;
        for (const Pt& p : pts) {
            bool seen = false;
            for (const Pt& q : uniq)
                if (p == q) {
                    seen = true;
                    break;
                }
            if (!seen) uniq.push_back(p);
        }
        cs.per_object.push_back(std::move(uniq));
    }
    return cs;
}

SolveResult verify_witness(const Instance& inst, const ConvexCycle& cycle) {
    if (cycle.verts.empty()) throw cycle_error(cycle_error::TooFewVertices, "empty witness");
    SolveResult r;
    for (size_t i = 0; i < inst.objects.size(); ++i)
        if (boundary_stabs(cycle, inst.objects[i].obj)) r.stabbed_ids.push_back((int)i);
    r.stabbed_count = (int)r.stabbed_ids.size();
    r.witness = cycle;
    return r;
}

namespace {

// Selection points in weakly convex position in some cyclic order: everything
// must sit on the boundary of the exact hull of the selection.
bool selection_convex(const std::vector<Pt>& pts) {
    std::vector<Pt> hull = convex_hull(pts);
    if (hull.empty()) return false;
    for (const Pt& p : pts)
        if (!on_hull_boundary(p, hull)) return false;
    return true;
}

}  // namespace

std::pair<bool, ConvexCycle> exact_decision_small(const std::vector<StabObject>& objects,
                                                  const CandidateSet& cands) {
    if (objects.size() != cands.per_object.size())
        throw order_violation("candidate lists do not match objects");
    if (objects.size() > 20) throw solve_too_large("exact_decision_small: more than 20 objects");
    double product = 1;
    for (size_t i = 0; i < objects.size(); ++i) {
        const auto& list = cands.per_object[i];
        if (list.empty()) return {false, ConvexCycle{}};
        for (const Pt& p : list) {
            bool on = false;
            for (const auto& [a, b] : objects[i].arms())
                if (on_segment(p, a, b)) {
                    on = true;
                    break;
                }
            if (!on) throw order_violation("candidate not on its object");
        }
        product *= (double)list.size();
        if (product > 1e7) throw solve_too_large("exact_decision_small: candidate product too large");
    }
    size_t n = objects.size();
    std::vector<size_t> idx(n, 0);
    std::vector<Pt> sel(n);
    while (true) {
        for (size_t i = 0; i < n; ++i) sel[i] = cands.per_object[i][idx[i]];
        if (selection_convex(sel)) {
            auto hull = convex_hull(sel);
            ConvexCycle w = validate_cycle(hull, /*allow_degenerate=*/true);
            return {true, w};
        }
        size_t i = 0;
        while (i < n && ++idx[i] == cands.per_object[i].size()) idx[i++] = 0;
        if (i == n) break;
    }
    return {false, ConvexCycle{}};
}

// ---------------------------------------------------------------------------
// angular_dp_max internals

namespace {

struct FlatCand {
    Pt p;
    int obj;
    double dx, dy;
    mpz_class X, Y, W;  // homogeneous: p = (X/W, Y/W), W > 0
};

void homogenize(FlatCand& c) {
    mpz_class qx = c.p.x.get_den(), qy = c.p.y.get_den();
    mpz_class w;
    mpz_lcm(w.get_mpz_t(), qx.get_mpz_t(), qy.get_mpz_t());
    c.W = w;
    c.X = c.p.x.get_num() * (w / qx);
    c.Y = c.p.y.get_num() * (w / qy);
    c.dx = c.p.x.get_d();
    c.dy = c.p.y.get_d();
}

constexpr double kFilterEps = 3.3307e-16;

// Exact sign of orient(a, b, c), double filter first.
int orient_filtered(const FlatCand& a, const FlatCand& b, const FlatCand& c) {
    double acx = a.dx - c.dx, acy = a.dy - c.dy;
    double bcx = b.dx - c.dx, bcy = b.dy - c.dy;
    double l = acx * bcy, r = acy * bcx;
    double det = l - r;
    double detsum = std::fabs(l) + std::fabs(r);
    if (std::fabs(det) > kFilterEps * detsum) return det > 0 ? 1 : -1;
    mpz_class t1 = (a.X * c.W - c.X * a.W) * (b.Y * c.W - c.Y * b.W);
    mpz_class t2 = (a.Y * c.W - c.Y * a.W) * (b.X * c.W - c.X * b.W);
    int s = cmp(t1, t2);
    return s > 0 ? 1 : s < 0 ? -1 : 0;
}

// Exact sign of (b-a).(c-b): forward test for collinear steps.
int dir_dot_filtered(const FlatCand& a, const FlatCand& b, const FlatCand& c) {
    double ux = b.dx - a.dx, uy = b.dy - a.dy;
    double vx = c.dx - b.dx, vy = c.dy - b.dy;
    double l = ux * vx, r = uy * vy;
    double d = l + r;
    double dsum = std::fabs(l) + std::fabs(r);
    if (std::fabs(d) > kFilterEps * dsum) return d > 0 ? 1 : -1;
    mpz_class t = (b.X * a.W - a.X * b.W) * (c.X * b.W - b.X * c.W) +
                  (b.Y * a.W - a.Y * b.W) * (c.Y * b.W - b.Y * c.W);
    return sgn(t);
}

// chain step b -> c after a: allowed iff left turn, or collinear and forward
inline bool step_ok(const FlatCand& a, const FlatCand& b, const FlatCand& c, int* strict) {
    int o = orient_filtered(a, b, c);
    if (o < 0) return false;
    if (o == 0 && dir_dot_filtered(a, b, c) <= 0) return false;
    *strict = o > 0 ? 1 : 0;
    return true;
}

struct DpOut {
    int value = -1;
    std::vector<int> path;  // flat candidate ids including anchor, cycle order
};

// Bottom-anchor convex-chain DP: maximum multiplicity count of a proper convex
// cycle (>= 3 points, at least one strict turn) anchored at its lex-min point
// b, over the lex-above candidates in `above`. Adjacent same-object picks are
// banned (contiguous clusters count once); distant repeats are the caller's
// branch-and-bound problem.
DpOut dp_for_anchor(const std::vector<FlatCand>& C, const std::vector<int>& above, int b) {
    DpOut out;
    const int N = (int)above.size();
    if (N < 2) return out;
    const FlatCand& B = C[b];

    std::vector<int> ord = above;
    std::sort(ord.begin(), ord.end(), [&](int i, int j) {
        bool zi = C[i].p.y == B.p.y, zj = C[j].p.y == B.p.y;  // angle-0 ray
        if (zi != zj) return zi;
        if (zi && zj) return C[i].p.x < C[j].p.x;
        int o = orient_filtered(B, C[i], C[j]);
        if (o != 0) return o > 0;
        Rat di = (C[i].p.x - B.p.x) * (C[i].p.x - B.p.x) +
                 (C[i].p.y - B.p.y) * (C[i].p.y - B.p.y);
        Rat dj = (C[j].p.x - B.p.x) * (C[j].p.x - B.p.x) +
                 (C[j].p.y - B.p.y) * (C[j].p.y - B.p.y);
        if (di != dj) return di < dj;
        return i < j;
    });

    // f[bit][(i+1)*N + j]: best count of chain b -> ... -> ord[i] -> ord[j],
    // bit = whether some strict left turn occurred yet. par packs (i, bit).
    const size_t SZ = (size_t)(N + 1) * N;
    std::vector<int32_t> f0(SZ, -1), f1(SZ, -1);
    std::vector<int32_t> par0(SZ, INT32_MIN), par1(SZ, INT32_MIN);
    for (int j = 0; j < N; ++j) {
        if (C[ord[j]].obj == B.obj) continue;
        f0[j] = 2;
        par0[j] = -2;  // sentinel: chain starts at b
    }
    int best = -1, bi = -1, bj = -1, bbit = -1;
    for (int j = 0; j < N; ++j) {
        for (int i = -1; i < j; ++i) {
            size_t s = (size_t)(i + 1) * N + j;
            int32_t c0 = f0[s], c1 = f1[s];
            if (c0 < 0 && c1 < 0) continue;
            const FlatCand& prev = i < 0 ? B : C[ord[i]];
            // closure: edge back to b; needs >= 3 points and a strict turn
            if (i >= 0) {
                int strict;
                if (step_ok(prev, C[ord[j]], B, &strict)) {
                    if (c1 >= 0 && c1 > best) best = c1, bi = i, bj = j, bbit = 1;
                    if (strict && c0 >= 0 && c0 > best) best = c0, bi = i, bj = j, bbit = 0;
                }
            }
            for (int k = j + 1; k < N; ++k) {
                if (C[ord[k]].obj == C[ord[j]].obj) continue;
                int strict;
                if (!step_ok(prev, C[ord[j]], C[ord[k]], &strict)) continue;
                size_t t = (size_t)(j + 1) * N + k;
                if (strict) {
                    int32_t v = std::max(c0, c1) + 1;
                    if (v > f1[t]) {
                        f1[t] = v;
                        par1[t] = 2 * i + (c1 > c0 ? 1 : 0);
                    }
                } else {
                    if (c0 >= 0 && c0 + 1 > f0[t]) {
                        f0[t] = c0 + 1;
                        par0[t] = 2 * i;
                    }
                    if (c1 >= 0 && c1 + 1 > f1[t]) {
                        f1[t] = c1 + 1;
                        par1[t] = 2 * i + 1;
                    }
                }
            }
        }
    }
    if (best < 0) return out;
    out.value = best;
    // walk parents: state (i, j) with strictness bit; enc(parent) = 2*pi + pbit
    int ci = bi, cj = bj, cbit = bbit;
    out.path.push_back(ord[cj]);
    while (ci >= 0) {
        size_t s = (size_t)(ci + 1) * N + cj;
        int32_t packed = cbit ? par1[s] : par0[s];
        int pbit = ((packed % 2) + 2) % 2;
        int pi = (packed - pbit) / 2;
        out.path.push_back(ord[ci]);
        cj = ci;
        ci = pi;
        cbit = pbit;
    }
    out.path.push_back(b);
    std::reverse(out.path.begin(), out.path.end());
    return out;
}

int distinct_objects(const std::vector<FlatCand>& C, const std::vector<int>& path,
                     std::vector<int>* kept) {
    std::set<int> seen;
    std::vector<int> sel;
    for (int id : path)
        if (seen.insert(C[id].obj).second) sel.push_back(id);
    if (kept) *kept = sel;
    return (int)seen.size();
}

struct Relaxation {
    int value = -1;
    std::vector<int> path;
    int best_distinct = -1;         // best deduped value seen across anchors
    std::vector<int> distinct_sel;  // its flat ids
};

// Upper bound for the node: max multiplicity over proper convex cycles through
// active candidates. Anchors are pruned against the best distinct value known;
// any selection with more distinct objects must touch one of the lowest
// objects, so its lex-min point lies below the cap.
Relaxation relax_max(const std::vector<FlatCand>& C, const std::vector<char>& active,
                     const std::vector<int>& lex_order, int num_objects, int incumbent,
                     bool exhaustive) {
    Relaxation best;
    const int M = (int)lex_order.size();
    std::vector<int> obj_max_rank(num_objects, -1);
    for (int r = 0; r < M; ++r) {
        int id = lex_order[r];
        if (active[id]) obj_max_rank[C[id].obj] = r;
    }
    std::vector<int> ranks;
    for (int o = 0; o < num_objects; ++o)
        if (obj_max_rank[o] >= 0) ranks.push_back(obj_max_rank[o]);
    if (ranks.empty()) return best;
    std::sort(ranks.begin(), ranks.end());
    const int active_objects = (int)ranks.size();
    if (incumbent >= active_objects) return best;  // node cannot improve

    int known = incumbent;
    auto anchor_cap = [&]() {
        if (exhaustive) return M - 1;
        if (known < 0) return M - 1;
        int need = active_objects - known;
        if (need < 1) need = 1;
        if (need > (int)ranks.size()) need = (int)ranks.size();
        return ranks[need - 1];
    };

    std::vector<int> above;
    int cap = anchor_cap();
    for (int r = 0; r < M; ++r) {
        if (r > cap) break;
        int b = lex_order[r];
        if (!active[b]) continue;
        int n_above = 0;
        for (int r2 = r + 1; r2 < M; ++r2)
            if (active[lex_order[r2]]) ++n_above;
        if (n_above + 1 <= best.value) continue;
        above.clear();
        above.reserve(n_above);
        for (int r2 = r + 1; r2 < M; ++r2)
            if (active[lex_order[r2]]) above.push_back(lex_order[r2]);
        DpOut d = dp_for_anchor(C, above, b);
        if (d.value > best.value) {
            best.value = d.value;
            best.path = d.path;
        }
        if (d.value >= 0) {
            std::vector<int> sel;
            int dist = distinct_objects(C, d.path, &sel);
            if (dist > best.best_distinct) {
                best.best_distinct = dist;
                best.distinct_sel = sel;
                if (dist > known) {
                    known = dist;
                    cap = anchor_cap();
                }
            }
        }
    }
    return best;
}

}  // namespace

SolveResult angular_dp_max(const Instance& inst, const CandidateSet& cands,
                           const SolveLimits& limits) {
    const int num_objects = (int)inst.objects.size();
    if (num_objects != (int)cands.per_object.size())
        throw order_violation("candidate lists do not match instance objects");
    if (num_objects > limits.max_objects)
        throw solve_too_large("angular_dp_max: too many objects");

    std::vector<FlatCand> C;
    for (int o = 0; o < num_objects; ++o) {
        for (const Pt& p : cands.per_object[o]) {
            bool on = false;
            for (const auto& [a, b] : inst.objects[o].obj.arms())
                if (on_segment(p, a, b)) {
                    on = true;
                    break;
                }
            if (!on) throw order_violation("candidate not on its object");
            FlatCand fc;
            fc.p = p;
            fc.obj = o;
            homogenize(fc);
            C.push_back(std::move(fc));
        }
    }
    const int M = (int)C.size();
    std::vector<int> lex_order(M);
    std::iota(lex_order.begin(), lex_order.end(), 0);
    std::sort(lex_order.begin(), lex_order.end(), [&](int i, int j) {
        if (C[i].p.y != C[j].p.y) return C[i].p.y < C[j].p.y;
        if (C[i].p.x != C[j].p.x) return C[i].p.x < C[j].p.x;
        return i < j;
    });

    std::vector<std::vector<char>> stack;
    stack.emplace_back(M, 1);

    int incumbent = -1;
    std::vector<int> incumbent_sel;
    long nodes = 0;

    auto accept_distinct = [&](const std::vector<int>& sel, int dist) {
        if (dist <= incumbent) return;
        std::vector<Pt> pts;
        for (int id : sel) pts.push_back(C[id].p);
        if (convex_hull(pts).size() < 3) return;  // flat, not a proper cycle
        incumbent = dist;
        incumbent_sel = sel;
    };

    while (!stack.empty()) {
        if (++nodes > limits.max_nodes)
            throw solve_too_large("angular_dp_max: branch-and-bound node budget exceeded");
        std::vector<char> active = std::move(stack.back());
        stack.pop_back();

        Relaxation rel = relax_max(C, active, lex_order, num_objects, incumbent,
                                   limits.exhaustive_anchors);
        if (rel.best_distinct >= 0) accept_distinct(rel.distinct_sel, rel.best_distinct);
        if (rel.value <= incumbent) continue;

        // branch on the first object picked twice on the relaxation's best path
        int branch_obj = -1;
        {
            std::map<int, int> count;
            for (int id : rel.path)
                if (++count[C[id].obj] == 2) {
                    branch_obj = C[id].obj;
                    break;
                }
        }
        if (branch_obj < 0) continue;  // relaxation value came from a clean path
        std::vector<int> obj_cands;
        for (int id = 0; id < M; ++id)
            if (active[id] && C[id].obj == branch_obj) obj_cands.push_back(id);
        {
            std::vector<char> child = active;
            for (int id : obj_cands) child[id] = 0;
            stack.push_back(std::move(child));
        }
        for (int keep : obj_cands) {
            std::vector<char> child = active;
            for (int id : obj_cands)
                if (id != keep) child[id] = 0;
            stack.push_back(std::move(child));
        }
    }

    SolveResult res;
    if (incumbent < 0) {
        res.stabbed_count = 0;
        return res;
    }
    std::vector<Pt> pts;
    std::set<int> objs;
    for (int id : incumbent_sel) {
        pts.push_back(C[id].p);
        objs.insert(C[id].obj);
    }
    res.stabbed_count = incumbent;
    res.stabbed_ids.assign(objs.begin(), objs.end());
    res.witness = validate_cycle(convex_hull(pts), /*allow_degenerate=*/true);
    return res;
}

}  // namespace ctl
