#ifndef AIL_GENERATE_HPP
#define AIL_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ail/model.hpp"

namespace ail {

/// Streams every model over the given atom/agent universes with 1..max_worlds
/// worlds, in a fixed deterministic order: world count ascending, then
/// valuations, then per-agent world partitions (restricted growth strings,
/// lexicographic), then per-(agent, block) awareness sets. Awareness is
/// chosen per indistinguishability block, so every yielded model satisfies
/// the model conditions by construction.
class ModelEnumerator {
public:
    ModelEnumerator(std::vector<std::string> atoms, std::vector<std::string> agents,
                    std::size_t max_worlds);

    /// Next model, or nullopt when the space is exhausted.
    std::optional<EpistemicModel> next();

    /// Number of models for a fixed world count (used in tests and for
    /// progress reporting). Counts valuations x partitions x awareness.
    static std::uint64_t count_for_worlds(std::size_t n_worlds, std::size_t n_atoms,
                                          std::size_t n_agents);

private:
    bool advance();
    void reset_for_world_count();
    EpistemicModel build() const;

    std::vector<std::string> atoms_;
    std::vector<std::string> agents_;
    std::size_t max_worlds_;

    std::size_t n_ = 0;  // 0 = not started
    std::uint64_t valuation_ = 0;
    std::uint64_t valuation_end_ = 0;
    std::vector<std::vector<std::size_t>> rgs_;        // per agent
    std::vector<std::vector<AtomMask>> block_aware_;   // per agent, per block
};

struct RandomModelOptions {
    /// Give every world a distinct valuation (needs 2^atoms >= worlds).
    bool distinct_valuations = false;
    /// One awareness set per agent across all worlds.
    bool constant_awareness = false;
};

/// Deterministic pseudo-random valid model; the same seed always produces a
/// structurally identical model.
EpistemicModel random_model(const std::vector<std::string>& atoms,
                            const std::vector<std::string>& agents,
                            std::size_t n_worlds, std::uint64_t seed,
                            const RandomModelOptions& opts = {});

/// Bounded uniform-ish draw from an engine; deterministic across platforms
/// (unlike std::uniform_int_distribution).
inline std::uint64_t rand_below(std::mt19937_64& eng, std::uint64_t n) {
    return n <= 1 ? 0 : eng() % n;
}

}  // namespace ail

#endif
