#pragma once

#include "ctl/instance.hpp"
#include "ctl/sat.hpp"

namespace ctl {

struct reduce_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One sub-arc of the unit circle assigned to a gadget, as a parameter interval
// of circle_point. side 0 = positive arc (t in [0,1]), 1 = negative ([-1,0]).
struct GadgetSpan {
    int side = 0;
    int index = 0;      // position along the arc, ascending t
    Rat t_lo, t_hi;
    bool is_clause = false;
    int clause = -1;    // owning clause
    int leg_slot = -1;  // occurrence gadgets: slot of the leg (0/1/2)
    int variable = -1;  // occurrence gadgets: the variable
};

// Variable-occurrence gadget: a segment and three points. The two non-middle
// points sit exactly on the circle; P_mid and the segment sit in the lens.
// True path: E_in -> a_T -> P_mid -> E_out; False: E_in -> P_mid -> a_F -> E_out.
struct VariableGadgetB {
    GadgetSpan span;
    StabObject pts[3];   // E_in, P_mid, E_out
    StabObject seg;      // from a_T to a_F
    std::vector<Pt> true_path, false_path;
    // connector anchor slots: on (a_T, P_mid) for True, on (P_mid, a_F) for False
    Pt true_anchor(int slot) const;
    Pt false_anchor(int slot) const;
};

// Clause gadget: a segment and two points on the arc. Three traversal paths
// E_in -> c_i -> E_out cross the segment at c_1, c_2, c_3; connector slots are
// the pairwise intersections of path edges, below the segment.
struct ClauseGadgetB {
    GadgetSpan span;
    StabObject pts[2];  // E_in, E_out
    StabObject seg;
    Pt crossing[3];      // c_1 (east), c_2, c_3
    Pt slot[3];          // slot[i] is missed exactly by path i+1... see slot_for_path
    std::vector<Pt> path(int i) const;  // i = 0, 1, 2
    // slots hit by path i: the two slots other than omitted_slot(i)
    static constexpr int omitted_slot(int path) { return 2 - path; }
};

struct BendInstance {
    Instance instance;  // family Bends
    RectilinearLayout layout;
    std::vector<GadgetSpan> spans;
    // object-index ranges for bookkeeping/tests
    std::vector<int> occurrence_gadget_first;  // per span index when occurrence
};

// Positive side: 4*m1 spans of nominal circle fraction 1/(16*m1) (equal t
// sub-intervals of [0,1], clause spans immediately right of their middle leg);
// negative side mirrored on [-1,0], ordered right to left.
std::vector<GadgetSpan> allocate_spans(const RectilinearLayout& layout);

struct BendParams {
    // all coordinates in the chord frame of the gadget's central sub-span
    Rat lens_scale = Rat(1, 2);   // local y unit, in half-sagitta units
};

VariableGadgetB build_variable_gadget(const GadgetSpan& span, const BendParams& params = {});
ClauseGadgetB build_clause_gadget(const GadgetSpan& span, const BendParams& params = {});

// The full section-2 compiler. Output object order: gadget objects in angular
// order, then variable connectors, then clause connectors. 21*m objects.
BendInstance compile_bends(const RectilinearLayout& layout);

// Cycle realizing the assignment: canonical paths per gadget plus two closure
// vertices on the empty half circle. Stabs everything iff `a` satisfies the
// formula; per unsatisfied clause exactly one connector is left unstabbed.
ConvexCycle witness_bends(const RectilinearLayout& layout, const Assignment& a);
ConvexCycle witness_bends(const BendInstance& inst, const Assignment& a);

}  // namespace ctl
