#include "ctl/sat.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace ctl {

CnfFormula parse_dimacs(const std::string& text, bool strict) {
    CnfFormula f;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    int declared_clauses = -1;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (!header_seen) {
            std::string p, fmt;
            if (!(ls >> p) || p != "p")
                throw syntax_error(lineno, "expected 'p cnf' header");
            if (!(ls >> fmt) || fmt != "cnf")
                throw syntax_error(lineno, "expected 'p cnf' header");
            if (!(ls >> f.num_vars >> declared_clauses) || f.num_vars < 0)
                throw syntax_error(lineno, "bad header counts");
            header_seen = true;
            continue;
        }
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (strict && pending.size() != 3)
                    throw arity_error("clause of size " + std::to_string(pending.size()) +
                                      " (need exactly 3)");
                if (pending.size() != 3)
                    throw arity_error("only 3-literal clauses are supported");
                Clause c;
                for (int i = 0; i < 3; ++i) {
                    int v = std::abs(pending[i]) - 1;
                    if (v < 0 || v >= f.num_vars)
                        throw syntax_error(lineno, "variable out of range");
                    c.lits[i] = Lit{v, pending[i] > 0};
                }
                f.clauses.push_back(c);
                pending.clear();
            } else {
                pending.push_back(lit);
            }
        }
        if (ls.fail() && !ls.eof()) throw syntax_error(lineno, "bad token");
    }
    if (!header_seen) throw syntax_error(lineno, "missing 'p cnf' header");
    if (!pending.empty()) throw syntax_error(lineno, "clause not terminated by 0");
    if (declared_clauses >= 0 && declared_clauses != f.num_clauses())
        throw syntax_error(lineno, "clause count mismatch with header");
    return f;
}

std::string serialize_dimacs(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << " " << f.clauses.size() << "\n";
    for (const Clause& c : f.clauses) {
        for (const Lit& l : c.lits) out << (l.positive ? l.var + 1 : -(l.var + 1)) << " ";
        out << "0\n";
    }
    return out.str();
}

std::pair<std::vector<int>, std::vector<int>> validate_monotone(const CnfFormula& f) {
    std::vector<int> pos, neg;
    for (int i = 0; i < f.num_clauses(); ++i) {
        const Clause& c = f.clauses[i];
        if (c.all_positive())
            pos.push_back(i);
        else if (c.all_negative())
            neg.push_back(i);
        else
            throw not_monotone_error(i, "clause " + std::to_string(i) + " mixes polarities");
    }
    return {pos, neg};
}

void validate_e3sat5(const CnfFormula& f) {
    std::vector<int> occ(f.num_vars, 0);
    for (int i = 0; i < f.num_clauses(); ++i) {
        const Clause& c = f.clauses[i];
        if (c.lits[0].var == c.lits[1].var || c.lits[0].var == c.lits[2].var ||
            c.lits[1].var == c.lits[2].var)
            throw duplicate_in_clause_error(i, "repeated variable in clause " + std::to_string(i));
        for (const Lit& l : c.lits) ++occ[l.var];
    }
    for (int v = 0; v < f.num_vars; ++v)
        if (occ[v] != 5)
            throw occurrence_error(v, occ[v], "variable " + std::to_string(v + 1) + " occurs " +
                                                  std::to_string(occ[v]) + " times, want 5");
}

bool clause_satisfied(const Clause& c, const Assignment& a) {
    for (const Lit& l : c.lits)
        if (a.values[l.var] == l.positive) return true;
    return false;
}

int count_satisfied(const CnfFormula& f, const Assignment& a) {
    int k = 0;
    for (const Clause& c : f.clauses) k += clause_satisfied(c, a) ? 1 : 0;
    return k;
}

namespace {
Assignment from_mask(uint32_t mask, int n) {
    Assignment a;
    a.values.resize(n);
    for (int i = 0; i < n; ++i) a.values[i] = (mask >> i) & 1;
    return a;
}
}  // namespace

std::optional<Assignment> brute_force_sat(const CnfFormula& f) {
    if (f.num_vars > 24) throw too_large_error("brute_force_sat: more than 24 variables");
    for (uint32_t mask = 0; mask < (1u << f.num_vars); ++mask) {
        Assignment a = from_mask(mask, f.num_vars);
        if (count_satisfied(f, a) == f.num_clauses()) return a;
    }
    return std::nullopt;
}

std::pair<int, Assignment> brute_force_max_sat(const CnfFormula& f) {
    if (f.num_vars > 24) throw too_large_error("brute_force_max_sat: more than 24 variables");
    int best = -1;
    Assignment best_a = from_mask(0, f.num_vars);
    for (uint32_t mask = 0; mask < (1u << f.num_vars); ++mask) {
        Assignment a = from_mask(mask, f.num_vars);
        int k = count_satisfied(f, a);
        if (k > best) {
            best = k;
            best_a = a;
        }
    }
    return {best, best_a};
}

// --- layouts -----------------------------------------------------------------

int leg_variable(const RectilinearLayout& L, int side, const LegEntry& e) {
    const Clause& c = L.formula.clauses[e.clause];
    std::vector<int> pos_in_order(L.formula.num_vars, 0);
    for (size_t i = 0; i < L.variable_order.size(); ++i) pos_in_order[L.variable_order[i]] = (int)i;
    // occurrences sorted by (variable position, literal index)
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        int pa = pos_in_order[c.lits[a].var], pb = pos_in_order[c.lits[b].var];
        return pa != pb ? pa < pb : a < b;
    });
    (void)side;
    return c.lits[idx[e.slot]].var;
}

void validate_layout(const RectilinearLayout& L) {
    const CnfFormula& f = L.formula;
    int n = f.num_vars;
    if ((int)L.variable_order.size() != n) throw layout_error("variable_order size mismatch");
    {
        std::vector<bool> seen(n, false);
        for (int v : L.variable_order) {
            if (v < 0 || v >= n || seen[v]) throw layout_error("variable_order not a permutation");
            seen[v] = true;
        }
    }
    auto split = validate_monotone(f);
    std::vector<int> clause_side(f.num_clauses(), -1);
    for (int c : split.first) clause_side[c] = 0;
    for (int c : split.second) clause_side[c] = 1;

    std::vector<int> pos_in_order(n, 0);
    for (size_t i = 0; i < L.variable_order.size(); ++i) pos_in_order[L.variable_order[i]] = (int)i;

    for (int side = 0; side < 2; ++side) {
        const auto& seq = L.legs[side];
        std::map<int, std::vector<int>> clause_positions;  // clause -> positions in seq
        std::map<int, std::vector<int>> clause_slots;
        for (size_t i = 0; i < seq.size(); ++i) {
            const LegEntry& e = seq[i];
            if (e.clause < 0 || e.clause >= f.num_clauses()) throw layout_error("bad clause id");
            if (clause_side[e.clause] != side)
                throw layout_error("clause " + std::to_string(e.clause) + " on wrong side");
            if (e.slot < 0 || e.slot > 2) throw layout_error("bad slot");
            clause_positions[e.clause].push_back((int)i);
            clause_slots[e.clause].push_back(e.slot);
        }
        // every clause of this side contributes its 3 legs, slots in order
        const auto& side_clauses = side == 0 ? split.first : split.second;
        size_t expected = side_clauses.size() * 3;
        if (seq.size() != expected) throw layout_error("leg count mismatch");
        for (int c : side_clauses) {
            auto it = clause_positions.find(c);
            if (it == clause_positions.end() || it->second.size() != 3)
                throw layout_error("clause " + std::to_string(c) + " needs exactly 3 legs");
            const auto& slots = clause_slots[c];
            if (!(slots[0] == 0 && slots[1] == 1 && slots[2] == 2))
                throw layout_error("slot order violated for clause " + std::to_string(c));
        }
        // legs attach within their variable's block: variable of each leg must be
        // non-decreasing in variable_order position, grouped contiguously
        std::vector<int> leg_vars(seq.size());
        for (size_t i = 0; i < seq.size(); ++i) leg_vars[i] = leg_variable(L, side, seq[i]);
        std::vector<bool> var_done(n, false);
        for (size_t i = 0; i < seq.size(); ++i) {
            if (i > 0 && leg_vars[i] != leg_vars[i - 1]) {
                if (var_done[leg_vars[i]])
                    throw layout_error("legs of variable " + std::to_string(leg_vars[i] + 1) +
                                       " not contiguous");
                var_done[leg_vars[i - 1]] = true;
            }
        }
        for (size_t i = 1; i < seq.size(); ++i)
            if (pos_in_order[leg_vars[i]] < pos_in_order[leg_vars[i - 1]])
                throw layout_error("leg variables out of line order");
        // non-crossing: spans pairwise disjoint or nested within one gap
        for (auto& [c1, p1] : clause_positions) {
            for (auto& [c2, p2] : clause_positions) {
                if (c1 >= c2) continue;
                int lo1 = p1.front(), hi1 = p1.back();
                int lo2 = p2.front(), hi2 = p2.back();
                if (hi1 < lo2 || hi2 < lo1) continue;  // disjoint
                auto nested = [](const std::vector<int>& outer, const std::vector<int>& inner) {
                    if (inner.front() < outer.front() || inner.back() > outer.back()) return false;
                    // all inner positions must sit between one pair of consecutive outer legs
                    for (size_t g = 0; g + 1 < outer.size(); ++g)
                        if (outer[g] < inner.front() && inner.back() < outer[g + 1]) return true;
                    return false;
                };
                if (!nested(p1, p2) && !nested(p2, p1))
                    throw layout_error("legs of clauses " + std::to_string(c1) + " and " +
                                       std::to_string(c2) + " cross");
            }
        }
    }
}

namespace {

// Per variable-order position: the clause ids whose legs attach there (with
// multiplicity, one per occurrence on that side).
void collect_side_blocks(const CnfFormula& f, const std::vector<int>& order,
                         const std::vector<int>& side_clauses,
                         std::vector<std::vector<int>>& block_legs) {
    std::vector<int> pos_in_order(f.num_vars, 0);
    for (size_t i = 0; i < order.size(); ++i) pos_in_order[order[i]] = (int)i;
    block_legs.assign(order.size(), {});
    for (int c : side_clauses)
        for (const Lit& l : f.clauses[c].lits) block_legs[pos_in_order[l.var]].push_back(c);
}

}  // namespace

std::optional<RectilinearLayout> find_layout(const CnfFormula& f) {
    if (f.num_vars > 8 || f.num_clauses() > 8)
        throw too_large_error("find_layout: guards are num_vars <= 8 and clauses <= 8");
    std::pair<std::vector<int>, std::vector<int>> split;
    try {
        split = validate_monotone(f);
    } catch (const not_monotone_error&) {
        return std::nullopt;
    }
    std::vector<int> order(f.num_vars);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end());
    do {
        RectilinearLayout L;
        L.formula = f;
        L.variable_order = order;
        std::vector<std::vector<int>> pos_blocks, neg_blocks;
        collect_side_blocks(f, order, split.first, pos_blocks);
        collect_side_blocks(f, order, split.second, neg_blocks);

        // enumerate positive side arrangements; for each, negative side
        std::vector<int> pos_seq;
        // depth-first over both sides: flatten via recursive lambdas
        std::function<bool(size_t, std::vector<int>&)> rec_neg =
            [&](size_t bi, std::vector<int>& seq) -> bool {
            if (bi == neg_blocks.size()) {
                std::map<int, int> seen;
                L.legs[1].clear();
                for (int c : seq) L.legs[1].push_back(LegEntry{c, seen[c]++});
                try {
                    validate_layout(L);
                    return true;
                } catch (const sat_error&) {
                    return false;
                }
            }
            std::vector<int> perm = neg_blocks[bi];
            std::sort(perm.begin(), perm.end());
            do {
                size_t base = seq.size();
                for (int c : perm) seq.push_back(c);
                if (rec_neg(bi + 1, seq)) return true;
                seq.resize(base);
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        };
        std::function<bool(size_t, std::vector<int>&)> rec_pos =
            [&](size_t bi, std::vector<int>& seq) -> bool {
            if (bi == pos_blocks.size()) {
                std::map<int, int> seen;
                L.legs[0].clear();
                for (int c : seq) L.legs[0].push_back(LegEntry{c, seen[c]++});
                std::vector<int> nseq;
                return rec_neg(0, nseq);
            }
            std::vector<int> perm = pos_blocks[bi];
            std::sort(perm.begin(), perm.end());
            do {
                size_t base = seq.size();
                for (int c : perm) seq.push_back(c);
                if (rec_pos(bi + 1, seq)) return true;
                seq.resize(base);
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        };
        if (rec_pos(0, pos_seq)) return L;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

std::string serialize_layout(const RectilinearLayout& L) {
    std::ostringstream out;
    out << "order";
    for (int v : L.variable_order) out << " " << v + 1;
    out << "\n";
    const char* names[2] = {"positive", "negative"};
    for (int side = 0; side < 2; ++side) {
        out << names[side];
        for (const LegEntry& e : L.legs[side]) out << " " << e.clause + 1 << ":" << e.slot;
        out << "\n";
    }
    return out.str();
}

RectilinearLayout parse_layout(const std::string& text, const CnfFormula& f) {
    RectilinearLayout L;
    L.formula = f;
    std::istringstream in(text);
    std::string line;
    bool have_order = false, have_pos = false, have_neg = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "order") {
            int v;
            while (ls >> v) L.variable_order.push_back(v - 1);
            have_order = true;
        } else if (head == "positive" || head == "negative") {
            int side = head == "positive" ? 0 : 1;
            std::string tok;
            while (ls >> tok) {
                auto colon = tok.find(':');
                if (colon == std::string::npos) throw layout_error("bad leg token: " + tok);
                LegEntry e;
                e.clause = std::stoi(tok.substr(0, colon)) - 1;
                e.slot = std::stoi(tok.substr(colon + 1));
                L.legs[side].push_back(e);
            }
            (side == 0 ? have_pos : have_neg) = true;
        } else {
            throw layout_error("unknown layout line: " + head);
        }
    }
    if (!have_order || !have_pos || !have_neg)
        throw layout_error("layout needs order, positive and negative lines");
    return L;
}

}  // namespace ctl
