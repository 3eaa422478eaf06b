#ifndef AIL_FH_HPP
#define AIL_FH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ail/checker.hpp"
#include "ail/model.hpp"

namespace ail {

/// Satisfaction for the awareness-logic fragment (atoms, booleans, A/I/E):
/// identical to the main relation except that E[i] f is read as
/// A[i] f and I[i] f. Throws when f falls outside the fragment.
bool satisfies_fh(const EpistemicModel& m, const std::string& world, const FormulaPtr& f);
bool satisfies_fh(const EpistemicModel& m, std::size_t world, const FormulaPtr& f);

/// Meaning-preserving translation into the full language: homomorphic on
/// everything except E[i] f, which becomes A[i] t(f) & I[i] t(f).
FormulaPtr translate_fh(const FormulaPtr& f);

/// Relation between the worlds of two models (by world index).
struct BisimRelation {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    bool contains(std::size_t a, std::size_t b) const;
};

struct BisimViolation {
    std::size_t left, right;  // offending pair
    std::string agent;        // empty for the valuation clause
    /// One of "atoms", "forth", "back", "awareness".
    std::string clause;
    std::string detail;
};

std::string to_string(const BisimViolation& v, const EpistemicModel& m1,
                      const EpistemicModel& m2);

/// Checks the four bisimulation clauses (valuation agreement, forth, back,
/// awareness equality) for every pair. Both models must declare the same
/// atoms and agents (throws otherwise). Empty result = relation is a
/// bisimulation.
std::optional<BisimViolation> check_bisimulation(const EpistemicModel& m1,
                                                 const EpistemicModel& m2,
                                                 const BisimRelation& rel);

/// Greatest bisimulation containing (w1, w2), if any: starts from all pairs
/// agreeing on atoms and awareness and deletes pairs violating forth/back
/// until a fixpoint.
std::optional<BisimRelation> find_bisimulation(const EpistemicModel& m1, std::size_t w1,
                                               const EpistemicModel& m2, std::size_t w2);

/// Canonical finite slice of fragment formulas with modal depth <= depth:
/// literals and two-literal conjunctions, then A/I/E prefixes and their
/// negations, layer by layer. Deterministic order.
std::vector<FormulaPtr> fh_formula_slice(const std::vector<std::string>& atoms,
                                         const std::vector<std::string>& agents,
                                         std::size_t depth);

/// First formula in the slice on which the two pointed models disagree
/// under fragment satisfaction, or nullopt when they agree throughout.
std::optional<FormulaPtr> fh_agree_up_to_depth(const EpistemicModel& m1, std::size_t w1,
                                               const EpistemicModel& m2, std::size_t w2,
                                               std::size_t depth);

/// The two pointed models separating the full language from the fragment:
/// bisimilar (hence fragment-indistinguishable), yet E[i] p holds at the
/// singleton model and fails at the three-world model.
struct SeparationPair {
    EpistemicModel three_world;
    std::size_t three_world_point;
    EpistemicModel singleton;
    std::size_t singleton_point;
};
SeparationPair make_separation_pair();

}  // namespace ail

#endif
