#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctl {

// Positive literal: var index (0-based); stored as var for positive, ~var style
// is avoided — we keep an explicit polarity.
struct Lit {
    int var = 0;
    bool positive = true;
    bool operator==(const Lit&) const = default;
};

struct Clause {
    Lit lits[3];
    bool all_positive() const { return lits[0].positive && lits[1].positive && lits[2].positive; }
    bool all_negative() const { return !lits[0].positive && !lits[1].positive && !lits[2].positive; }
};

struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;
    int num_clauses() const { return static_cast<int>(clauses.size()); }
};

struct Assignment {
    std::vector<bool> values;  // one per variable
};

struct sat_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct syntax_error : sat_error {
    int line;
    syntax_error(int line_, const std::string& what) : sat_error(what), line(line_) {}
};
struct arity_error : sat_error {
    using sat_error::sat_error;
};
struct not_monotone_error : sat_error {
    int clause;
    not_monotone_error(int c, const std::string& what) : sat_error(what), clause(c) {}
};
struct occurrence_error : sat_error {
    int var, found;
    occurrence_error(int v, int f, const std::string& what) : sat_error(what), var(v), found(f) {}
};
struct duplicate_in_clause_error : sat_error {
    int clause;
    duplicate_in_clause_error(int c, const std::string& what) : sat_error(what), clause(c) {}
};
struct too_large_error : sat_error {
    using sat_error::sat_error;
};

// DIMACS CNF. Strict mode rejects clauses of size != 3 (arity_error).
CnfFormula parse_dimacs(const std::string& text, bool strict = true);
std::string serialize_dimacs(const CnfFormula& f);

// Positive / negative clause ids; throws not_monotone_error.
std::pair<std::vector<int>, std::vector<int>> validate_monotone(const CnfFormula& f);

// Every clause has 3 distinct variables, every variable occurs exactly 5 times.
void validate_e3sat5(const CnfFormula& f);

bool clause_satisfied(const Clause& c, const Assignment& a);
int count_satisfied(const CnfFormula& f, const Assignment& a);

// Exhaustive; lexicographically-first witness; guard num_vars <= 24.
std::optional<Assignment> brute_force_sat(const CnfFormula& f);
std::pair<int, Assignment> brute_force_max_sat(const CnfFormula& f);

// --- monotone rectilinear representation ------------------------------------

// One clause leg on one side: which clause and which slot (0 = left, 1 =
// middle, 2 = right, by the x-order of the clause's variables).
struct LegEntry {
    int clause = 0;
    int slot = 0;
    bool operator==(const LegEntry&) const = default;
};

// Combinatorial layout only: variable order on the line plus the left-to-right
// leg sequences above (positive) and below (negative).
struct RectilinearLayout {
    CnfFormula formula;
    std::vector<int> variable_order;       // permutation of 0..n-1
    std::vector<LegEntry> legs[2];         // [0] positive side, [1] negative side
};

struct layout_error : sat_error {
    using sat_error::sat_error;
};

// For leg (c, slot): the variable it attaches to. Occurrences of c sorted by
// (position of their variable in variable_order, literal index).
int leg_variable(const RectilinearLayout& L, int side, const LegEntry& e);

// Checks every layout invariant; throws layout_error with the first violation.
void validate_layout(const RectilinearLayout& L);

// Exhaustive search over variable orders and in-block leg arrangements.
// Guards: num_vars <= 8, clauses <= 8.
std::optional<RectilinearLayout> find_layout(const CnfFormula& f);

// Line-oriented text format: side lines with clauseId:slot tokens.
std::string serialize_layout(const RectilinearLayout& L);
RectilinearLayout parse_layout(const std::string& text, const CnfFormula& f);

}  // namespace ctl
