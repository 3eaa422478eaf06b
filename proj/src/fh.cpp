#include "ail/fh.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ail {

namespace {

class FhEvaluator {
public:
    explicit FhEvaluator(const EpistemicModel& m) : m_(&m) {
        ik_.reserve(m.agent_count());
        for (std::size_t i = 0; i < m.agent_count(); ++i)
            ik_.push_back(ik_partition(m, i));
    }

    bool eval(std::size_t world, const FormulaPtr& f) {
        switch (f->op) {
            case Op::Atom: {
                auto p = m_->atom_index(f->name);
                if (!p) throw AilError("undeclared atom: " + f->name);
                return m_->val(*p, world);
            }
            case Op::Not:
                return !eval(world, f->lhs);
            case Op::And:
                return eval(world, f->lhs) && eval(world, f->rhs);
            case Op::Or:
                return eval(world, f->lhs) || eval(world, f->rhs);
            case Op::Implies:
                return !eval(world, f->lhs) || eval(world, f->rhs);
            case Op::Iff:
                return eval(world, f->lhs) == eval(world, f->rhs);
            case Op::Aware:
                return aware(world, f);
            case Op::Implicit:
                return box(world, f);
            case Op::Explicit:
                return aware(world, f) && box(world, f);
            default:
                throw AilError("formula outside the A/I/E fragment: " + to_string(f));
        }
    }

private:
    bool aware(std::size_t world, const FormulaPtr& f) {
        auto i = m_->agent_index(f->name);
        if (!i) throw AilError("undeclared agent: " + f->name);
        AtomMask needed = 0;
        for (const auto& name : atoms_of(f->lhs)) {
            auto p = m_->atom_index(name);
            if (!p) throw AilError("undeclared atom: " + name);
            needed |= AtomMask{1} << *p;
        }
        return (needed & ~m_->awareness[*i][world]) == 0;
    }

    bool box(std::size_t world, const FormulaPtr& f) {
        auto i = m_->agent_index(f->name);
        if (!i) throw AilError("undeclared agent: " + f->name);
        for (std::size_t v = 0; v < m_->world_count(); ++v)
            if (ik_[*i].same_block(world, v) && !eval(v, f->lhs)) return false;
        return true;
    }

    const EpistemicModel* m_;
    std::vector<Partition> ik_;
};

}  // namespace

bool satisfies_fh(const EpistemicModel& m, std::size_t world, const FormulaPtr& f) {
    if (!is_fh_formula(f))
        throw AilError("formula outside the A/I/E fragment: " + to_string(f));
    require_valid(m);
    if (world >= m.world_count()) throw AilError("world index out of range");
    FhEvaluator ev(m);
    return ev.eval(world, f);
}

bool satisfies_fh(const EpistemicModel& m, const std::string& world, const FormulaPtr& f) {
    auto w = m.world_index(world);
    if (!w) throw AilError("undeclared world: " + world);
    return satisfies_fh(m, *w, f);
}

FormulaPtr translate_fh(const FormulaPtr& f) {
    if (!f) return nullptr;
    switch (f->op) {
        case Op::Atom:
            return f;
        case Op::Explicit: {
            auto t = translate_fh(f->lhs);
            return make_and(make_aware(f->name, t), make_implicit(f->name, t));
        }
        case Op::SimBox:
        case Op::EkBox:
        case Op::AddAware:
        case Op::DelAware:
            throw AilError("formula outside the A/I/E fragment: " + to_string(f));
        default: {
            auto l = translate_fh(f->lhs), r = translate_fh(f->rhs);
            if (struct_equal(l, f->lhs) && struct_equal(r, f->rhs)) return f;
            return std::make_shared<Formula>(f->op, f->name, f->atom_set, l, r);
        }
    }
}

bool BisimRelation::contains(std::size_t a, std::size_t b) const {
    return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) != pairs.end();
}

std::string to_string(const BisimViolation& v, const EpistemicModel& m1,
                      const EpistemicModel& m2) {
    std::ostringstream os;
    os << "clause " << v.clause << " fails at (" << m1.worlds[v.left] << ","
       << m2.worlds[v.right] << ")";
    if (!v.agent.empty()) os << " for agent " << v.agent;
    if (!v.detail.empty()) os << ": " << v.detail;
    return os.str();
}

namespace {

// Maps m2's atom/agent indices onto m1's; throws when the universes differ.
struct UniverseMap {
    std::vector<std::size_t> atom_of;   // m1 atom index -> m2 atom index
    std::vector<std::size_t> agent_of;  // m1 agent index -> m2 agent index
};

UniverseMap align_universes(const EpistemicModel& m1, const EpistemicModel& m2) {
    auto as_set = [](const std::vector<std::string>& xs) {
        return std::set<std::string>(xs.begin(), xs.end());
    };
    if (as_set(m1.atoms) != as_set(m2.atoms))
        throw AilError("bisimulation requires identical atom universes");
    if (as_set(m1.agents) != as_set(m2.agents))
        throw AilError("bisimulation requires identical agent universes");
    UniverseMap map;
    for (const auto& a : m1.atoms) map.atom_of.push_back(*m2.atom_index(a));
    for (const auto& g : m1.agents) map.agent_of.push_back(*m2.agent_index(g));
    return map;
}

bool atoms_agree(const EpistemicModel& m1, const EpistemicModel& m2, const UniverseMap& map,
                 std::size_t w, std::size_t w2) {
    for (std::size_t p = 0; p < m1.atom_count(); ++p)
        if (m1.val(p, w) != m2.val(map.atom_of[p], w2)) return false;
    return true;
}

bool awareness_agrees(const EpistemicModel& m1, const EpistemicModel& m2,
                      const UniverseMap& map, std::size_t i, std::size_t w, std::size_t w2) {
    AtomMask left = m1.awareness[i][w];
    AtomMask right = m2.awareness[map.agent_of[i]][w2];
    for (std::size_t p = 0; p < m1.atom_count(); ++p)
        if (((left >> p) & 1u) != ((right >> map.atom_of[p]) & 1u)) return false;
    return true;
}

}  // namespace

std::optional<BisimViolation> check_bisimulation(const EpistemicModel& m1,
                                                 const EpistemicModel& m2,
                                                 const BisimRelation& rel) {
    UniverseMap map = align_universes(m1, m2);
    for (const auto& [w, w2] : rel.pairs) {
        if (w >= m1.world_count() || w2 >= m2.world_count())
            throw AilError("bisimulation pair out of range");
        if (!atoms_agree(m1, m2, map, w, w2))
            return BisimViolation{w, w2, "", "atoms", "valuations differ"};
        for (std::size_t i = 0; i < m1.agent_count(); ++i) {
            std::size_t i2 = map.agent_of[i];
            if (!awareness_agrees(m1, m2, map, i, w, w2))
                return BisimViolation{w, w2, m1.agents[i], "awareness",
                                      "awareness sets differ"};
            for (std::size_t v = 0; v < m1.world_count(); ++v) {
                if (!m1.ik[i][w][v]) continue;
                bool matched = false;
                for (std::size_t v2 = 0; v2 < m2.world_count() && !matched; ++v2)
                    matched = m2.ik[i2][w2][v2] && rel.contains(v, v2);
                if (!matched)
                    return BisimViolation{w, w2, m1.agents[i], "forth",
                                          "successor " + m1.worlds[v] + " has no match"};
            }
            for (std::size_t v2 = 0; v2 < m2.world_count(); ++v2) {
                if (!m2.ik[i2][w2][v2]) continue;
                bool matched = false;
                for (std::size_t v = 0; v < m1.world_count() && !matched; ++v)
                    matched = m1.ik[i][w][v] && rel.contains(v, v2);
                if (!matched)
                    return BisimViolation{w, w2, m1.agents[i], "back",
                                          "successor " + m2.worlds[v2] + " has no match"};
            }
        }
    }
    return std::nullopt;
}

std::optional<BisimRelation> find_bisimulation(const EpistemicModel& m1, std::size_t w1,
                                               const EpistemicModel& m2, std::size_t w2) {
    require_valid(m1);
    require_valid(m2);
    UniverseMap map = align_universes(m1, m2);

    std::vector<std::vector<bool>> in(m1.world_count(),
                                      std::vector<bool>(m2.world_count(), false));
    for (std::size_t a = 0; a < m1.world_count(); ++a)
        for (std::size_t b = 0; b < m2.world_count(); ++b) {
            bool ok = atoms_agree(m1, m2, map, a, b);
            for (std::size_t i = 0; ok && i < m1.agent_count(); ++i)
                ok = awareness_agrees(m1, m2, map, i, a, b);
            in[a][b] = ok;
        }

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < m1.world_count(); ++a)
            for (std::size_t b = 0; b < m2.world_count(); ++b) {
                if (!in[a][b]) continue;
                bool ok = true;
                for (std::size_t i = 0; ok && i < m1.agent_count(); ++i) {
                    std::size_t i2 = map.agent_of[i];
                    for (std::size_t v = 0; ok && v < m1.world_count(); ++v) {
                        if (!m1.ik[i][a][v]) continue;
                        bool matched = false;
                        for (std::size_t v2 = 0; v2 < m2.world_count() && !matched; ++v2)
                            matched = m2.ik[i2][b][v2] && in[v][v2];
                        ok = matched;
                    }
                    for (std::size_t v2 = 0; ok && v2 < m2.world_count(); ++v2) {
                        if (!m2.ik[i2][b][v2]) continue;
                        bool matched = false;
                        for (std::size_t v = 0; v < m1.world_count() && !matched; ++v)
                            matched = m1.ik[i][a][v] && in[v][v2];
                        ok = matched;
                    }
                }
                if (!ok) {
                    in[a][b] = false;
                    changed = true;
                }
            }
    }

    if (!in[w1][w2]) return std::nullopt;
    BisimRelation rel;
    for (std::size_t a = 0; a < m1.world_count(); ++a)
        for (std::size_t b = 0; b < m2.world_count(); ++b)
            if (in[a][b]) rel.pairs.emplace_back(a, b);
    return rel;
}

std::vector<FormulaPtr> fh_formula_slice(const std::vector<std::string>& atoms,
                                         const std::vector<std::string>& agents,
                                         std::size_t depth) {
    std::vector<FormulaPtr> slice;
    // Depth 0: literals, then two-literal conjunctions over distinct atoms.
    for (const auto& p : atoms) slice.push_back(make_atom(p));
    for (const auto& p : atoms) slice.push_back(make_not(make_atom(p)));
    for (std::size_t a = 0; a < atoms.size(); ++a)
        for (std::size_t b = a + 1; b < atoms.size(); ++b)
            for (int sa = 0; sa < 2; ++sa)
                for (int sb = 0; sb < 2; ++sb) {
                    FormulaPtr fa = make_atom(atoms[a]);
                    FormulaPtr fb = make_atom(atoms[b]);
                    if (sa) fa = make_not(fa);
                    if (sb) fb = make_not(fb);
                    slice.push_back(make_and(fa, fb));
                }

    std::size_t layer_begin = 0;
    for (std::size_t d = 0; d < depth; ++d) {
        std::size_t layer_end = slice.size();
        for (std::size_t k = layer_begin; k < layer_end; ++k)
            for (char op : {'A', 'I', 'E'})
                for (const auto& g : agents) {
                    FormulaPtr body = slice[k];
                    FormulaPtr prefixed = op == 'A'   ? make_aware(g, body)
                                          : op == 'I' ? make_implicit(g, body)
                                                      : make_explicit(g, body);
                    slice.push_back(prefixed);
                    slice.push_back(make_not(prefixed));
                }
        layer_begin = layer_end;
    }
    return slice;
}

std::optional<FormulaPtr> fh_agree_up_to_depth(const EpistemicModel& m1, std::size_t w1,
                                               const EpistemicModel& m2, std::size_t w2,
                                               std::size_t depth) {
    align_universes(m1, m2);
    require_valid(m1);
    require_valid(m2);
    FhEvaluator ev1(m1);
    FhEvaluator ev2(m2);
    for (const auto& f : fh_formula_slice(m1.atoms, m1.agents, depth))
        if (ev1.eval(w1, f) != ev2.eval(w2, f)) return f;
    return std::nullopt;
}

SeparationPair make_separation_pair() {
    SeparationPair sp;

    EpistemicModel& m = sp.three_world;
    m.worlds = {"w", "v", "u"};
    m.agents = {"i"};
    m.atoms = {"p", "q"};
    m.valuation = {{true, true, false},   // p at w, v
                   {true, false, false}}; // q at w
    m.ik = {{{true, false, false},
             {false, true, true},
             {false, true, true}}};       // v and u indistinguishable
    m.awareness = {{1, 1, 1}};            // aware of p everywhere
    sp.three_world_point = 0;

    EpistemicModel& s = sp.singleton;
    s.worlds = {"s"};
    s.agents = {"i"};
    s.atoms = {"p", "q"};
    s.valuation = {{true}, {true}};
    s.ik = {{{true}}};
    s.awareness = {{1}};
    sp.singleton_point = 0;

    return sp;
}

}  // namespace ail
