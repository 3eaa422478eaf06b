#include "ail/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "ail/parser.hpp"

namespace ail {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& msg) { throw AilError("model file: " + msg); }

std::vector<std::string> string_list(const ordered_json& j, const std::string& what) {
    if (!j.is_array()) bad(what + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string()) bad(what + " must contain only strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

std::size_t world_idx(const EpistemicModel& m, const std::string& id, const std::string& ctx) {
    auto k = m.world_index(id);
    if (!k) bad(ctx + ": undeclared world " + id);
    return *k;
}

void close_equivalence(std::vector<std::vector<bool>>& rel) {
    const std::size_t n = rel.size();
    for (std::size_t w = 0; w < n; ++w) rel[w][w] = true;
    for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
            if (rel[w][v]) rel[v][w] = true;
    for (std::size_t t = 0; t < n; ++t)  // Warshall
        for (std::size_t w = 0; w < n; ++w)
            if (rel[w][t])
                for (std::size_t v = 0; v < n; ++v)
                    if (rel[t][v]) rel[w][v] = true;
}

}  // namespace

EpistemicModel model_from_json(const std::string& text, const LoadOptions& opts) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        bad(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) bad("top level must be an object");

    EpistemicModel m;
    m.worlds = string_list(j.value("worlds", ordered_json::array()), "worlds");
    m.agents = string_list(j.value("agents", ordered_json::array()), "agents");
    m.atoms = string_list(j.value("atoms", ordered_json::array()), "atoms");
    for (const auto& a : m.agents)
        if (!is_identifier(a)) bad("bad agent name " + a);
    for (const auto& p : m.atoms)
        if (!is_identifier(p)) bad("bad atom name " + p);
    if (m.worlds.empty()) bad("worlds must be nonempty");
    if (m.atom_count() > kMaxAtoms) bad("more than 64 atoms");

    const std::size_t n = m.world_count();
    m.valuation.assign(m.atom_count(), std::vector<bool>(n, false));
    if (j.contains("valuation")) {
        if (!j["valuation"].is_object()) bad("valuation must be an object");
        for (const auto& [atom, row] : j["valuation"].items()) {
            auto p = m.atom_index(atom);
            if (!p) bad("valuation: undeclared atom " + atom);
            for (const auto& wid : string_list(row, "valuation row"))
                m.valuation[*p][world_idx(m, wid, "valuation")] = true;
        }
    }

    m.ik.assign(m.agent_count(), std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)));
    if (!j.contains("ik") || !j["ik"].is_object()) bad("ik object required");
    for (std::size_t i = 0; i < m.agent_count(); ++i) {
        const std::string& agent = m.agents[i];
        if (!j["ik"].contains(agent)) bad("ik: missing agent " + agent);
        const auto& spec = j["ik"][agent];
        if (!spec.is_object()) bad("ik entry for " + agent + " must be an object");
        auto& rel = m.ik[i];
        if (spec.contains("blocks")) {
            for (const auto& block : spec["blocks"]) {
                auto ids = string_list(block, "ik block");
                std::vector<std::size_t> ws;
                for (const auto& wid : ids) ws.push_back(world_idx(m, wid, "ik blocks"));
                for (std::size_t a : ws)
                    for (std::size_t b : ws) rel[a][b] = true;
            }
            for (std::size_t w = 0; w < n; ++w) rel[w][w] = true;
        } else if (spec.contains("pairs")) {
            if (!spec["pairs"].is_array()) bad("ik pairs must be an array");
            for (const auto& pr : spec["pairs"]) {
                if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
                    bad("ik pair must be a two-world array");
                rel[world_idx(m, pr[0].get<std::string>(), "ik")]
                   [world_idx(m, pr[1].get<std::string>(), "ik")] = true;
            }
            bool closed = spec.value("closed", true);
            if (!closed || opts.close_ik) close_equivalence(rel);
        } else {
            bad("ik entry for " + agent + " needs \"pairs\" or \"blocks\"");
        }
    }

    m.awareness.assign(m.agent_count(), std::vector<AtomMask>(n, 0));
    if (j.contains("awareness")) {
        if (!j["awareness"].is_object()) bad("awareness must be an object");
        for (const auto& [agent, rows] : j["awareness"].items()) {
            auto i = m.agent_index(agent);
            if (!i) bad("awareness: undeclared agent " + agent);
            if (!rows.is_object()) bad("awareness entry for " + agent + " must be an object");
            for (const auto& [wid, atoms] : rows.items()) {
                std::size_t w = world_idx(m, wid, "awareness");
                AtomMask mask = 0;
                for (const auto& name : string_list(atoms, "awareness set")) {
                    auto p = m.atom_index(name);
                    if (!p) bad("awareness: undeclared atom " + name);
                    mask |= AtomMask{1} << *p;
                }
                m.awareness[*i][w] = mask;
            }
        }
    }
    return m;
}

EpistemicModel model_from_file(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw AilError("cannot open model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str(), opts);
}

std::string model_to_json(const EpistemicModel& m, int indent) {
    ordered_json j;
    j["worlds"] = m.worlds;
    j["agents"] = m.agents;
    j["atoms"] = m.atoms;

    ordered_json valuation = ordered_json::object();
    for (std::size_t p = 0; p < m.atom_count(); ++p) {
        ordered_json row = ordered_json::array();
        for (std::size_t w = 0; w < m.world_count(); ++w)
            if (m.val(p, w)) row.push_back(m.worlds[w]);
        valuation[m.atoms[p]] = row;
    }
    j["valuation"] = valuation;

    ordered_json ik = ordered_json::object();
    for (std::size_t i = 0; i < m.agent_count(); ++i) {
        ordered_json pairs = ordered_json::array();
        for (const auto& block : ik_partition(m, i).blocks())
            for (std::size_t k = 1; k < block.size(); ++k)
                pairs.push_back({m.worlds[block[k - 1]], m.worlds[block[k]]});
        ik[m.agents[i]] = {{"pairs", pairs}, {"closed", false}};
    }
    j["ik"] = ik;

    ordered_json awareness = ordered_json::object();
    for (std::size_t i = 0; i < m.agent_count(); ++i) {
        ordered_json rows = ordered_json::object();
        for (std::size_t w = 0; w < m.world_count(); ++w) {
            ordered_json atoms = ordered_json::array();
            for (std::size_t p = 0; p < m.atom_count(); ++p)
                if (m.aware_of(i, w, p)) atoms.push_back(m.atoms[p]);
            rows[m.worlds[w]] = atoms;
        }
        awareness[m.agents[i]] = rows;
    }
    j["awareness"] = awareness;

    return j.dump(indent);
}

}  // namespace ail
