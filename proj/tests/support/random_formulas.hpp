// Seeded formula generators shared by the unit and acceptance suites.
#ifndef AIL_TESTS_RANDOM_FORMULAS_HPP
#define AIL_TESTS_RANDOM_FORMULAS_HPP

#include <random>
#include <string>
#include <vector>

#include "ail/formula.hpp"
#include "ail/generate.hpp"

namespace ail::testing {

struct FormulaGenOptions {
    bool modal = true;        // A/I/E/S/C operators
    bool fh_only = false;     // restrict modal ops to A/I/E
    bool dynamic_ops = false; // +[i]{..}/-[i]{..}
};

inline FormulaPtr random_formula(std::mt19937_64& eng, std::size_t depth,
                                 const std::vector<std::string>& atoms,
                                 const std::vector<std::string>& agents,
                                 const FormulaGenOptions& opts = {},
                                 bool inside_aware = false) {
    auto atom = [&] { return make_atom(atoms[rand_below(eng, atoms.size())]); };
    if (depth == 0 || rand_below(eng, 5) == 0) return atom();

    auto sub = [&](bool under_aware) {
        return random_formula(eng, depth - 1, atoms, agents, opts, under_aware);
    };
    const std::string agent = agents[rand_below(eng, agents.size())];

    // Weighted draw over the available constructors.
    std::size_t n_ops = 5;                         // ~ & | -> <->
    if (opts.modal) n_ops += opts.fh_only ? 3 : 5;
    if (opts.dynamic_ops && !inside_aware) n_ops += 2;
    switch (rand_below(eng, n_ops)) {
        case 0: return make_not(sub(inside_aware));
        case 1: return make_and(sub(inside_aware), sub(inside_aware));
        case 2: return make_or(sub(inside_aware), sub(inside_aware));
        case 3: return make_implies(sub(inside_aware), sub(inside_aware));
        case 4: return make_iff(sub(inside_aware), sub(inside_aware));
        case 5: return make_aware(agent, sub(true));
        case 6: return make_implicit(agent, sub(inside_aware));
        case 7: return make_explicit(agent, sub(inside_aware));
        case 8: return make_sim_box(agent, sub(inside_aware));
        case 9: return make_ek_box(agent, sub(inside_aware));
        default: {
            std::vector<std::string> q{atoms[rand_below(eng, atoms.size())]};
            if (rand_below(eng, 2)) q.push_back(atoms[rand_below(eng, atoms.size())]);
            auto body = sub(inside_aware);
            return rand_below(eng, 2) ? make_add_aware(agent, q, body)
                                      : make_del_aware(agent, q, body);
        }
    }
}

inline FormulaPtr random_propositional(std::mt19937_64& eng, std::size_t depth,
                                       const std::vector<std::string>& atoms) {
    FormulaGenOptions opts;
    opts.modal = false;
    return random_formula(eng, depth, atoms, {"i"}, opts);
}

/// Fragment formula with bounded modal nesting depth.
inline FormulaPtr random_fh_formula(std::mt19937_64& eng, std::size_t bool_depth,
                                    std::size_t modal_depth,
                                    const std::vector<std::string>& atoms,
                                    const std::vector<std::string>& agents) {
    auto atom = [&] { return make_atom(atoms[rand_below(eng, atoms.size())]); };
    if (bool_depth == 0 || rand_below(eng, 5) == 0) return atom();
    auto sub = [&](std::size_t md) {
        return random_fh_formula(eng, bool_depth - 1, md, atoms, agents);
    };
    std::size_t n_ops = modal_depth > 0 ? 8 : 5;
    const std::string agent = agents[rand_below(eng, agents.size())];
    switch (rand_below(eng, n_ops)) {
        case 0: return make_not(sub(modal_depth));
        case 1: return make_and(sub(modal_depth), sub(modal_depth));
        case 2: return make_or(sub(modal_depth), sub(modal_depth));
        case 3: return make_implies(sub(modal_depth), sub(modal_depth));
        case 4: return make_iff(sub(modal_depth), sub(modal_depth));
        case 5: return make_aware(agent, sub(modal_depth - 1));
        case 6: return make_implicit(agent, sub(modal_depth - 1));
        default: return make_explicit(agent, sub(modal_depth - 1));
    }
}

}  // namespace ail::testing

#endif
