#pragma once

#include <string>
#include <vector>

#include "ctl/geometry.hpp"

namespace ctl {

enum class Role {
    VarGadget,
    ClauseGadget,
    VarConnector,
    ClauseConnectorInner,
    ClauseConnectorOuter,
    Connector,
};

const char* role_name(Role r);
Role role_from_name(const std::string& s);

// One object of an instance: geometry, its role, and the compiler-emitted
// touch anchors (points on the object where intended stabbers touch it).
struct InstanceObject {
    StabObject obj;
    Role role = Role::VarGadget;
    std::vector<Pt> anchors;
};

enum class Family { Bends, Segments };

// Objects are stored in angular order (the construction order along the two
// arcs); connectors follow their variable-side gadget.
struct Instance {
    Family family = Family::Bends;
    std::vector<InstanceObject> objects;
    int n = 0, m = 0, m1 = 0, m2 = 0;
};

struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Line-oriented text format, rationals as p/q:
//   # ctl instance <bends|segments> n=.. m=.. m1=.. m2=.. objects=..
//   <kind> <role> x1 y1 [x2 y2 [x3 y3]] | a1x a1y a2x a2y ...
std::string serialize_instance(const Instance& inst);
Instance parse_instance(const std::string& text);

// Witness file: "# ctl witness" then one "x y" line per vertex.
std::string serialize_witness(const ConvexCycle& cycle);
ConvexCycle parse_witness(const std::string& text, bool allow_degenerate = false);

}  // namespace ctl
