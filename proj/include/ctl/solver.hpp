#pragma once

#include <optional>

#include "ctl/instance.hpp"

namespace ctl {

// Per object: finite list of points on the object that a stabber may touch.
// Compiler anchors are always included by make_candidates.
struct CandidateSet {
    std::vector<std::vector<Pt>> per_object;
};

struct SolveResult {
    int stabbed_count = 0;
    std::vector<int> stabbed_ids;  // object indices, ascending
    ConvexCycle witness;
    enum class Completeness { ExactOverCandidates } completeness =
        Completeness::ExactOverCandidates;
};

struct SolveLimits {
    int max_objects = 4000;
    long max_nodes = 50000;          // branch-and-bound node budget
    bool exhaustive_anchors = false; // try every candidate as the cycle anchor
};

struct solver_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct order_violation : solver_error {
    using solver_error::solver_error;
};
struct solve_too_large : solver_error {
    using solver_error::solver_error;
};

// Anchors + endpoints + bend apexes + `density` uniform interior samples per
// segment arm. Deterministic; duplicates within an object removed.
CandidateSet make_candidates(const Instance& inst, int density);

// Exact: stabbed set = objects whose boundary intersection is nonempty.
SolveResult verify_witness(const Instance& inst, const ConvexCycle& cycle);

// True iff some choice of one candidate per object lies in weakly convex
// position under some cyclic order (tested via the exact hull of the choice).
// Guards: <= 20 objects, candidate product <= 1e7.
std::pair<bool, ConvexCycle> exact_decision_small(const std::vector<StabObject>& objects,
                                                  const CandidateSet& cands);

// Maximum number of DISTINCT objects stabbable by a convex cycle through
// candidate points (skips allowed), exact over the candidate set. Cycles are
// proper (>= 3 points, positive area). Branch-and-bound over per-object
// candidate restrictions around a bottom-anchor convex-chain DP.
SolveResult angular_dp_max(const Instance& inst, const CandidateSet& cands,
                           const SolveLimits& limits = {});

}  // namespace ctl
