#pragma once

#include "ctl/instance.hpp"
#include "ctl/sat.hpp"

namespace ctl {

// Variable gadget, segments version: 6 stacked segments and 18 points in 3
// stacks of 6 (entry arc run, middle run, exit arc run). East endpoints form
// the rising True column, west endpoints the rising False column; the middle
// run sits west-below both so that riding one column and then reaching the
// other (or the full middle run) is convex-infeasible.
struct VariableGadgetS {
    Rat t_lo, t_hi;
    int variable = -1;
    std::vector<StabObject> arc_in, arc_out;  // 6 + 6 points on the circle
    std::vector<StabObject> middles;          // 6 points inside
    std::vector<StabObject> segs;             // 6 segments inside
    std::vector<Pt> true_path, false_path;    // canonical chains, angular order
    Pt column_anchor(bool true_side, int occurrence) const;  // connector endpoint
    int max_occurrences = 5;
};

// Clause gadget, segments version: 4 stacked segments and 2 arc runs of 4
// points. Three canonical crossing runs (4 collinear anchors each); connector
// slots are intersections of descent(i) and approach(j) edges, i < j.
struct ClauseGadgetS {
    Rat t_lo, t_hi;
    int clause = -1;
    std::vector<StabObject> arc_in, arc_out;  // 4 + 4
    std::vector<StabObject> segs;             // 4
    Pt anchor[3][4];                          // anchor[i][k]: path i crossing of segment k
    Pt slot[3];                               // slot[0]=s12, slot[1]=s13, slot[2]=s23
    std::vector<Pt> path(int i) const;        // canonical chain, i = 0,1,2
    // literal -> slot so that path i omits literal i's connector:
    // lit 0 -> s23 (=slot[2]), lit 1 -> s13 (=slot[1]), lit 2 -> s12 (=slot[0])
    static constexpr int slot_of_literal(int lit) { return 2 - lit; }
    // slots covered by path i (all but slot_of_literal(i))
};

struct SegmentInstance {
    Instance instance;  // family Segments
    CnfFormula formula;
    std::vector<VariableGadgetS> var_gadgets;
    std::vector<ClauseGadgetS> clause_gadgets;
    int connector_first = 0;  // object index of the first connector
};

// Section-3 compiler; strict mode enforces MAX-E3SAT(5) shape. 24n + 15m
// objects; variable arc on t in [0,1], clause arc on [-1,0].
SegmentInstance compile_segments(const CnfFormula& f, bool strict = false);

// Canonical witness for an assignment: stabs all gadget objects, 3 connectors
// per satisfied clause and 2 per unsatisfied one.
ConvexCycle witness_segments(const CnfFormula& f, const Assignment& a, bool strict = false);
ConvexCycle witness_segments(const SegmentInstance& inst, const Assignment& a);

// 24n + 14m + k. Throws on k outside [0, m].
long expected_count(int n, int m, int k);

struct GadgetBounds {
    int variable_right = 24, variable_wrong = 23;
    int clause_right = 12, clause_wrong = 11;
};

// Certified per-gadget bounds, validated on isolated gadgets plus connector
// stubs by exhaustive solver enumeration at the given candidate density.
// Throws reduce-side validation errors when the geometry violates a bound.
GadgetBounds right_order_bounds(int density = 1);

// (1+eps)(24n+14m+k) - 24n - 14m == k + eps*k + (142/5)*m*eps, given 3m = 5n.
bool apx_identity_check(const Rat& eps, long n, long m, long k);

// eps' = (1171/35) * eps; the smallest factor making
// (1+eps)k + (142/5) m eps <= (1+eps')k whenever k >= 7m/8.
Rat apx_epsilon_prime(const Rat& eps);

}  // namespace ctl
