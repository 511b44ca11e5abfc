#include "ctl/instance.hpp"

#include <sstream>

namespace ctl {

const char* role_name(Role r) {
    switch (r) {
        case Role::VarGadget: return "var_gadget";
        case Role::ClauseGadget: return "clause_gadget";
        case Role::VarConnector: return "var_connector";
        case Role::ClauseConnectorInner: return "clause_connector_inner";
        case Role::ClauseConnectorOuter: return "clause_connector_outer";
        case Role::Connector: return "connector";
    }
    return "?";
}

Role role_from_name(const std::string& s) {
    if (s == "var_gadget") return Role::VarGadget;
    if (s == "clause_gadget") return Role::ClauseGadget;
    if (s == "var_connector") return Role::VarConnector;
    if (s == "clause_connector_inner") return Role::ClauseConnectorInner;
    if (s == "clause_connector_outer") return Role::ClauseConnectorOuter;
    if (s == "connector") return Role::Connector;
    throw format_error("unknown role: " + s);
}

namespace {

const char* kind_name(ObjKind k) {
    switch (k) {
        case ObjKind::Point: return "point";
        case ObjKind::Segment: return "segment";
        case ObjKind::Bend: return "bend";
    }
    return "?";
}

ObjKind kind_from_name(const std::string& s) {
    if (s == "point") return ObjKind::Point;
    if (s == "segment") return ObjKind::Segment;
    if (s == "bend") return ObjKind::Bend;
    throw format_error("unknown kind: " + s);
}

Rat read_rat(std::istringstream& in, const std::string& line) {
    std::string tok;
    if (!(in >> tok)) throw format_error("missing rational in: " + line);
    auto r = rat_from_string(tok);
    if (!r) throw format_error("bad rational '" + tok + "' in: " + line);
    return *r;
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "# ctl instance " << (inst.family == Family::Bends ? "bends" : "segments") << " n="
        << inst.n << " m=" << inst.m << " m1=" << inst.m1 << " m2=" << inst.m2
        << " objects=" << inst.objects.size() << "\n";
    for (const InstanceObject& o : inst.objects) {
        out << kind_name(o.obj.kind) << " " << role_name(o.role);
        for (const Pt& p : o.obj.verts) out << " " << rat_to_string(p.x) << " " << rat_to_string(p.y);
        out << " |";
        for (const Pt& p : o.anchors) out << " " << rat_to_string(p.x) << " " << rat_to_string(p.y);
        out << "\n";
    }
    return out.str();
}

Instance parse_instance(const std::string& text) {
    Instance inst;
    std::istringstream in(text);
    std::string line;
    bool header = false;
    size_t declared = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line);
            std::string hash, ctl, word, fam;
            hs >> hash >> ctl >> word >> fam;
            if (ctl != "ctl" || word != "instance") throw format_error("bad instance header");
            if (fam == "bends")
                inst.family = Family::Bends;
            else if (fam == "segments")
                inst.family = Family::Segments;
            else
                throw format_error("bad family: " + fam);
            std::string kv;
            while (hs >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) throw format_error("bad header field: " + kv);
                std::string key = kv.substr(0, eq);
                long val = std::stol(kv.substr(eq + 1));
                if (key == "n") inst.n = (int)val;
                else if (key == "m") inst.m = (int)val;
                else if (key == "m1") inst.m1 = (int)val;
                else if (key == "m2") inst.m2 = (int)val;
                else if (key == "objects") declared = (size_t)val;
                else throw format_error("unknown header field: " + key);
            }
            header = true;
            continue;
        }
        if (!header) throw format_error("missing instance header line");
        auto bar = line.find('|');
        std::string left = bar == std::string::npos ? line : line.substr(0, bar);
        std::string right = bar == std::string::npos ? "" : line.substr(bar + 1);
        std::istringstream ls(left);
        std::string kind_s, role_s;
        if (!(ls >> kind_s >> role_s)) throw format_error("bad object line: " + line);
        InstanceObject o;
        o.role = role_from_name(role_s);
        ObjKind kind = kind_from_name(kind_s);
        int want = kind == ObjKind::Point ? 1 : kind == ObjKind::Segment ? 2 : 3;
        std::vector<Pt> verts;
        for (int i = 0; i < want; ++i) {
            Rat x = read_rat(ls, line);
            Rat y = read_rat(ls, line);
            verts.push_back(Pt{x, y});
        }
        o.obj.kind = kind;
        o.obj.verts = std::move(verts);
        o.obj.check_valid();
        std::istringstream rs(right);
        std::string t1, t2;
        while (rs >> t1) {
            if (!(rs >> t2)) throw format_error("odd anchor coordinate count: " + line);
            auto x = rat_from_string(t1), y = rat_from_string(t2);
            if (!x || !y) throw format_error("bad anchor in: " + line);
            o.anchors.push_back(Pt{*x, *y});
        }
        inst.objects.push_back(std::move(o));
    }
    if (!header) throw format_error("empty instance file");
    if (declared != inst.objects.size()) throw format_error("object count mismatch with header");
    return inst;
}

std::string serialize_witness(const ConvexCycle& cycle) {
    std::ostringstream out;
    out << "# ctl witness " << cycle.verts.size() << "\n";
    for (const Pt& p : cycle.verts)
        out << rat_to_string(p.x) << " " << rat_to_string(p.y) << "\n";
    return out.str();
}

ConvexCycle parse_witness(const std::string& text, bool allow_degenerate) {
    std::istringstream in(text);
    std::string line;
    std::vector<Pt> verts;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            header = true;
            continue;
        }
        std::istringstream ls(line);
        Rat x = read_rat(ls, line);
        Rat y = read_rat(ls, line);
        verts.push_back(Pt{x, y});
    }
    if (!header) throw format_error("missing witness header");
    return validate_cycle(std::move(verts), allow_degenerate);
}

}  // namespace ctl
