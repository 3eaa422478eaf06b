#ifndef AIL_MODEL_HPP
#define AIL_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ail/formula.hpp"
#include "ail/partition.hpp"

namespace ail {

/// Subset of a model's declared atoms, by atom index. Models are capped at
/// 64 atoms so awareness sets fit in one word.
using AtomMask = std::uint64_t;

constexpr std::size_t kMaxAtoms = 64;

/// Finite epistemic model with awareness: a world set, per-agent
/// indistinguishability (an equivalence relation), per-agent per-world
/// awareness sets, and a valuation. The structure is plain data; whether it
/// actually satisfies the model conditions is checked by validate().
struct EpistemicModel {
    std::vector<std::string> worlds;
    std::vector<std::string> agents;
    std::vector<std::string> atoms;

    /// valuation[atom][world]
    std::vector<std::vector<bool>> valuation;
    /// ik[agent][w][v]: raw relation as given; validation demands an
    /// equivalence relation.
    std::vector<std::vector<std::vector<bool>>> ik;
    /// awareness[agent][world]: bitmask over declared atoms.
    std::vector<std::vector<AtomMask>> awareness;

    std::size_t world_count() const { return worlds.size(); }
    std::size_t agent_count() const { return agents.size(); }
    std::size_t atom_count() const { return atoms.size(); }

    std::optional<std::size_t> world_index(const std::string& id) const;
    std::optional<std::size_t> agent_index(const std::string& id) const;
    std::optional<std::size_t> atom_index(const std::string& id) const;

    bool val(std::size_t atom, std::size_t world) const { return valuation[atom][world]; }
    bool aware_of(std::size_t agent, std::size_t world, std::size_t atom) const {
        return (awareness[agent][world] >> atom) & 1u;
    }

    /// Structural identity (same declarations in the same order, same
    /// relation/valuation/awareness entries).
    bool operator==(const EpistemicModel& other) const;
};

/// Violation of one model condition; names the condition and the witnesses.
struct ModelViolation {
    std::string condition;  // e.g. "ka", "ik-symmetric", "awareness-subset"
    std::string agent;      // empty when agent-independent
    std::vector<std::string> worlds;
    std::string detail;
};

std::string to_string(const ModelViolation& v);

/// Empty result means the model satisfies every condition.
std::vector<ModelViolation> validate(const EpistemicModel& m);
bool is_valid(const EpistemicModel& m);
/// Throws AilError listing the violations unless validate() is clean.
void require_valid(const EpistemicModel& m);

/// The agent's indistinguishability relation as a partition.
/// Pre: validate(m) clean.
Partition ik_partition(const EpistemicModel& m, std::size_t agent);

/// Awareness-indistinguishability: worlds with equal awareness sets that
/// agree on every aware atom. Pre: validate(m) clean.
Partition a_equivalence(const EpistemicModel& m, std::size_t agent);

/// Transitive closure of the composition of the two relations above,
/// computed as the join of the two partitions. Pre: validate(m) clean.
Partition ek_accessibility(const EpistemicModel& m, std::size_t agent);

/// All three relation families computed once per model.
struct DerivedRelations {
    std::vector<Partition> ik;       // per agent
    std::vector<Partition> a_equiv;  // per agent
    std::vector<Partition> ek;       // per agent
};
DerivedRelations derive_relations(const EpistemicModel& m);

/// New model with Q added to (or removed from) `agent`s awareness set at
/// every world; frame, valuation and other agents untouched. Throws on
/// undeclared atoms in Q.
enum class AwarenessUpdate { Add, Remove };
EpistemicModel update_awareness(const EpistemicModel& m, std::size_t agent,
                                AtomMask q, AwarenessUpdate direction);

/// Resolves atom names to a mask over m's declared atoms; throws on
/// undeclared names.
AtomMask atom_mask(const EpistemicModel& m, const std::vector<std::string>& names);

}  // namespace ail

#endif
