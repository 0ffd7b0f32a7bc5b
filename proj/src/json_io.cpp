#include "torsion/json_io.hpp"

#include <stdexcept>

namespace torsion {

json lattice_json(const TorsLattice& l) {
    json j;
    j["n"] = l.ctx.n;
    j["classes"] = json::array();
    for (const auto& c : l.classes) {
        json members = json::array();
        for (int i = 0; i < l.ctx.count(); ++i)
            if (c.members & (uint32_t(1) << i)) members.push_back(interval_str(l.ctx.indecs[i]));
        j["classes"].push_back({{"id", c.id}, {"members", members}});
    }
    j["hasse"] = json::array();
    for (const auto& e : l.hasse)
        j["hasse"].push_back({{"upper", e.upper}, {"lower", e.lower}, {"brick", interval_str(e.brick)}});
    return j;
}

std::string lattice_dot(const TorsLattice& l, bool brick_labels) {
    std::string out = "digraph tors {\n  rankdir=TB;\n";
    for (const auto& c : l.classes)
        out += "  n" + std::to_string(c.id) + " [label=\"" + class_str(l, c.id) + "\"];\n";
    for (const auto& e : l.hasse) {
        out += "  n" + std::to_string(e.upper) + " -> n" + std::to_string(e.lower);
        if (brick_labels) out += " [label=\"" + interval_str(e.brick) + "\"]";
        out += ";\n";
    }
    return out + "}\n";
}

json chain_json(const TorsLattice& l, const Chain& c) {
    json j;
    j["n"] = l.ctx.n;
    j["classes"] = json::array();
    for (int id : c.classes) {
        json members = json::array();
        for (int i = 0; i < l.ctx.count(); ++i)
            if (l.members(id) & (uint32_t(1) << i)) members.push_back(interval_str(l.ctx.indecs[i]));
        j["classes"].push_back(members);
    }
    j["breakpoints"] = json::array();
    for (const auto& b : c.breakpoints) j["breakpoints"].push_back(rat_str(b));
    return j;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument("chain JSON error at " + path + ": " + what);
}

}  // namespace

Chain chain_from_json(const TorsLattice& l, const json& j) {
    if (!j.is_object()) fail("$", "expected an object");
    if (!j.contains("n") || !j["n"].is_number_integer()) fail("n", "expected an integer");
    if (j["n"].get<int>() != l.ctx.n)
        fail("n", "chain is for n=" + std::to_string(j["n"].get<int>()) + ", lattice has n=" +
                      std::to_string(l.ctx.n));
    if (!j.contains("classes") || !j["classes"].is_array()) fail("classes", "expected an array");
    if (!j.contains("breakpoints") || !j["breakpoints"].is_array())
        fail("breakpoints", "expected an array");

    Chain c;
    for (size_t k = 0; k < j["classes"].size(); ++k) {
        const std::string path = "classes[" + std::to_string(k) + "]";
        const json& arr = j["classes"][k];
        if (!arr.is_array()) fail(path, "expected an array of interval strings");
        uint32_t mask = 0;
        for (size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_string()) fail(path + "[" + std::to_string(i) + "]", "expected a string");
            Module m;
            try {
                m = parse_module(l.ctx, arr[i].get<std::string>());
            } catch (const std::invalid_argument& e) {
                fail(path + "[" + std::to_string(i) + "]", e.what());
            }
            if (m.summands.size() != 1) fail(path + "[" + std::to_string(i) + "]", "expected a single interval");
            mask |= uint32_t(1) << l.ctx.idx(m.summands[0]);
        }
        int id = l.id_of(mask);
        if (id < 0) fail(path, "not a torsion class");
        c.classes.push_back(id);
    }
    for (size_t k = 0; k < j["breakpoints"].size(); ++k) {
        const std::string path = "breakpoints[" + std::to_string(k) + "]";
        if (!j["breakpoints"][k].is_string()) fail(path, "expected a rational string \"p/q\"");
        try {
            c.breakpoints.push_back(parse_rat(j["breakpoints"][k].get<std::string>()));
        } catch (const std::invalid_argument& e) {
            fail(path, e.what());
        }
    }
    try {
        validate_chain(l, c);
    } catch (const std::invalid_argument& e) {
        fail("$", e.what());
    }
    return c;
}

json wsc_json(const TorsLattice& l, const WeakStability& w) {
    json j;
    if (const auto* a = std::get_if<ChainMho>(&w)) {
        j["kind"] = "chain_mho";
        j["chain"] = chain_json(l, a->chain);
    } else if (const auto* b = std::get_if<ChainOmega>(&w)) {
        j["kind"] = "chain_omega";
        j["chain"] = chain_json(l, b->chain);
    } else {
        const auto& cc = std::get<CentralCharge>(w);
        j["kind"] = "central_charge";
        j["theta"] = cc.theta;
        j["delta"] = cc.delta;
    }
    return j;
}

WeakStability wsc_from_json(const TorsLattice& l, const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("wsc JSON error at kind: expected a string");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "central_charge") {
        if (!j.contains("theta") || !j["theta"].is_array())
            throw std::invalid_argument("wsc JSON error at theta: expected an array");
        if (!j.contains("delta") || !j["delta"].is_array())
            throw std::invalid_argument("wsc JSON error at delta: expected an array");
        CentralCharge cc;
        cc.theta = j["theta"].get<std::vector<long long>>();
        cc.delta = j["delta"].get<std::vector<long long>>();
        if (cc.theta.size() != static_cast<size_t>(l.ctx.n) ||
            cc.delta.size() != static_cast<size_t>(l.ctx.n))
            throw std::invalid_argument("wsc JSON error at theta/delta: expected length n");
        for (long long d : cc.delta)
            if (d <= 0) throw std::invalid_argument("wsc JSON error at delta: entries must be positive");
        return cc;
    }
    if (kind == "chain_mho" || kind == "chain_omega") {
        if (!j.contains("chain"))
            throw std::invalid_argument("wsc JSON error at chain: missing");
        Chain c = chain_from_json(l, j["chain"]);
        if (kind == "chain_mho") return ChainMho{c};
        return ChainOmega{c};
    }
    throw std::invalid_argument("wsc JSON error at kind: unknown kind '" + kind + "'");
}

json nerve_json(const NerveComplex& nc) {
    json j;
    j["f_vector"] = nc.f_vector;
    j["facets"] = nc.facets;
    return j;
}

std::string distance_matrix_csv(const TorsLattice& l, const std::vector<Chain>& chains) {
    std::string out;
    for (size_t i = 0; i < chains.size(); ++i) {
        for (size_t k = 0; k < chains.size(); ++k) {
            if (k) out += ",";
            out += rat_str(distance(l, chains[i], chains[k]));
        }
        out += "\n";
    }
    return out;
}

}  // namespace torsion
