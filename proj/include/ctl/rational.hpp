#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace ctl {

// Exact scalar for all geometry. mpq_class keeps gcd(|num|, den) = 1 and den > 0
// after every arithmetic op, which is exactly the canonical-form invariant we need.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p". Returns nullopt on malformed input or zero denominator.
std::optional<Rat> rat_from_string(const std::string& s);

// Always "p/q", q > 0, canonical. Round-trips exactly through rat_from_string.
std::string rat_to_string(const Rat& r);

inline double rat_to_double(const Rat& r) { return r.get_d(); }

}  // namespace ctl
