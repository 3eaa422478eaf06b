#include "ail/model.hpp"

#include <algorithm>
#include <sstream>

namespace ail {

namespace {

std::optional<std::size_t> index_of(const std::vector<std::string>& xs, const std::string& id) {
    auto it = std::find(xs.begin(), xs.end(), id);
    if (it == xs.end()) return std::nullopt;
    return static_cast<std::size_t>(it - xs.begin());
}

}  // namespace

std::optional<std::size_t> EpistemicModel::world_index(const std::string& id) const {
    return index_of(worlds, id);
}
std::optional<std::size_t> EpistemicModel::agent_index(const std::string& id) const {
    return index_of(agents, id);
}
std::optional<std::size_t> EpistemicModel::atom_index(const std::string& id) const {
    return index_of(atoms, id);
}

bool EpistemicModel::operator==(const EpistemicModel& other) const {
    return worlds == other.worlds && agents == other.agents && atoms == other.atoms &&
           valuation == other.valuation && ik == other.ik && awareness == other.awareness;
}

std::string to_string(const ModelViolation& v) {
    std::ostringstream os;
    os << v.condition;
    if (!v.agent.empty()) os << " [agent " << v.agent << "]";
    if (!v.worlds.empty()) {
        os << " at (";
        for (std::size_t k = 0; k < v.worlds.size(); ++k) {
            if (k) os << ",";
            os << v.worlds[k];
        }
        os << ")";
    }
    if (!v.detail.empty()) os << ": " << v.detail;
    return os.str();
}

std::vector<ModelViolation> validate(const EpistemicModel& m) {
    std::vector<ModelViolation> out;
    const std::size_t n = m.world_count();

    if (n == 0) out.push_back({"worlds-nonempty", "", {}, "model has no worlds"});
    if (m.atom_count() > kMaxAtoms)
        out.push_back({"atom-limit", "", {}, "more than 64 declared atoms"});

    auto dup = [&out](const std::vector<std::string>& xs, const char* what) {
        for (std::size_t a = 0; a < xs.size(); ++a)
            for (std::size_t b = a + 1; b < xs.size(); ++b)
                if (xs[a] == xs[b])
                    out.push_back({std::string(what) + "-unique", "", {}, "duplicate id " + xs[a]});
    };
    dup(m.worlds, "world");
    dup(m.agents, "agent");
    dup(m.atoms, "atom");

    if (m.valuation.size() != m.atom_count())
        out.push_back({"valuation-shape", "", {}, "one world set per declared atom required"});
    for (std::size_t p = 0; p < m.valuation.size(); ++p)
        if (m.valuation[p].size() != n)
            out.push_back({"valuation-shape", "", {}, "valuation row for " + m.atoms[p] +
                                                          " has wrong length"});

    if (m.ik.size() != m.agent_count() || m.awareness.size() != m.agent_count()) {
        out.push_back({"agent-shape", "", {}, "ik/awareness must cover every agent"});
        return out;  // shapes broken; the pointwise checks below would be UB
    }
    for (std::size_t i = 0; i < m.agent_count(); ++i) {
        if (m.ik[i].size() != n || m.awareness[i].size() != n) {
            out.push_back({"agent-shape", m.agents[i], {}, "relation/awareness row count"});
            return out;
        }
        for (std::size_t w = 0; w < n; ++w)
            if (m.ik[i][w].size() != n) {
                out.push_back({"agent-shape", m.agents[i], {m.worlds[w]}, "relation row length"});
                return out;
            }
    }

    AtomMask declared = m.atom_count() >= kMaxAtoms
                            ? ~AtomMask{0}
                            : ((AtomMask{1} << m.atom_count()) - 1);

    for (std::size_t i = 0; i < m.agent_count(); ++i) {
        const auto& rel = m.ik[i];
        for (std::size_t w = 0; w < n; ++w) {
            if (!rel[w][w])
                out.push_back({"ik-reflexive", m.agents[i], {m.worlds[w]}, ""});
            if (m.awareness[i][w] & ~declared)
                out.push_back({"awareness-subset", m.agents[i], {m.worlds[w]},
                               "awareness set mentions undeclared atoms"});
        }
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t v = 0; v < n; ++v) {
                if (rel[w][v] && !rel[v][w])
                    out.push_back({"ik-symmetric", m.agents[i], {m.worlds[w], m.worlds[v]}, ""});
                if (rel[w][v] && m.awareness[i][w] != m.awareness[i][v])
                    out.push_back({"ka", m.agents[i], {m.worlds[w], m.worlds[v]},
                                   "related worlds with different awareness sets"});
            }
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t v = 0; v < n; ++v) {
                if (!rel[w][v]) continue;
                for (std::size_t u = 0; u < n; ++u)
                    if (rel[v][u] && !rel[w][u]) {
                        out.push_back({"ik-transitive", m.agents[i],
                                       {m.worlds[w], m.worlds[v], m.worlds[u]}, ""});
                        v = n;  // one witness per starting world is enough
                        break;
                    }
            }
    }
    return out;
}

bool is_valid(const EpistemicModel& m) { return validate(m).empty(); }

void require_valid(const EpistemicModel& m) {
    auto violations = validate(m);
    if (violations.empty()) return;
    std::ostringstream os;
    os << "invalid model:";
    for (const auto& v : violations) os << "\n  " << to_string(v);
    throw AilError(os.str());
}

Partition ik_partition(const EpistemicModel& m, std::size_t agent) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const auto& rel = m.ik[agent];
    for (std::size_t w = 0; w < m.world_count(); ++w)
        for (std::size_t v = w + 1; v < m.world_count(); ++v)
            if (rel[w][v]) pairs.emplace_back(w, v);
    return Partition::from_pairs(m.world_count(), pairs);
}

Partition a_equivalence(const EpistemicModel& m, std::size_t agent) {
    const std::size_t n = m.world_count();
    // Key a world by (awareness set, valuation restricted to it); equal key
    // means indistinguishable up to unaware atoms.
    std::vector<std::pair<AtomMask, AtomMask>> key(n);
    for (std::size_t w = 0; w < n; ++w) {
        AtomMask aw = m.awareness[agent][w];
        AtomMask vals = 0;
        for (std::size_t p = 0; p < m.atom_count(); ++p)
            if (((aw >> p) & 1u) && m.val(p, w)) vals |= AtomMask{1} << p;
        key[w] = {aw, vals};
    }
    std::vector<std::size_t> rep(n);
    for (std::size_t w = 0; w < n; ++w) {
        std::size_t r = w;
        for (std::size_t v = 0; v < w; ++v)
            if (key[v] == key[w]) {
                r = rep[v];
                break;
            }
        rep[w] = r;
    }
    return Partition::from_rep_map(std::move(rep));
}

Partition ek_accessibility(const EpistemicModel& m, std::size_t agent) {
    return join(ik_partition(m, agent), a_equivalence(m, agent));
}

DerivedRelations derive_relations(const EpistemicModel& m) {
    DerivedRelations d;
    d.ik.reserve(m.agent_count());
    d.a_equiv.reserve(m.agent_count());
    d.ek.reserve(m.agent_count());
    for (std::size_t i = 0; i < m.agent_count(); ++i) {
        d.ik.push_back(ik_partition(m, i));
        d.a_equiv.push_back(a_equivalence(m, i));
        d.ek.push_back(join(d.ik.back(), d.a_equiv.back()));
    }
    return d;
}

EpistemicModel update_awareness(const EpistemicModel& m, std::size_t agent,
                                AtomMask q, AwarenessUpdate direction) {
    AtomMask declared = m.atom_count() >= kMaxAtoms
                            ? ~AtomMask{0}
                            : ((AtomMask{1} << m.atom_count()) - 1);
    if (q & ~declared)
        throw AilError("awareness update mentions undeclared atoms");
    EpistemicModel out = m;
    for (auto& mask : out.awareness[agent])
        mask = direction == AwarenessUpdate::Add ? (mask | q) : (mask & ~q);
    return out;
}

AtomMask atom_mask(const EpistemicModel& m, const std::vector<std::string>& names) {
    AtomMask q = 0;
    for (const auto& name : names) {
        auto idx = m.atom_index(name);
        if (!idx) throw AilError("undeclared atom: " + name);
        q |= AtomMask{1} << *idx;
    }
    return q;
}

}  // namespace ail
