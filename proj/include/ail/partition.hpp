#ifndef AIL_PARTITION_HPP
#define AIL_PARTITION_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace ail {

/// Partition of {0..n-1} with canonical representatives: the representative
/// of a block is its smallest element, so two partitions over the same
/// ground set compare equal iff they have the same blocks.
class Partition {
public:
    Partition() = default;
    /// Discrete partition (every element its own block).
    explicit Partition(std::size_t n);
    /// From an arbitrary representative map; normalizes to min-element reps.
    static Partition from_rep_map(std::vector<std::size_t> rep);
    /// Union-closes the given related pairs over {0..n-1}.
    static Partition from_pairs(std::size_t n,
                                const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

    std::size_t size() const { return rep_.size(); }
    std::size_t find(std::size_t x) const { return rep_[x]; }
    bool same_block(std::size_t a, std::size_t b) const { return rep_[a] == rep_[b]; }
    std::size_t block_count() const;

    /// Blocks ordered by representative; elements ascending within a block.
    std::vector<std::vector<std::size_t>> blocks() const;
    /// All elements sharing x's block, ascending.
    std::vector<std::size_t> block_of(std::size_t x) const;

    bool operator==(const Partition& other) const { return rep_ == other.rep_; }

    /// Finest common coarsening of two partitions over the same ground set.
    friend Partition join(const Partition& a, const Partition& b);

private:
    std::vector<std::size_t> rep_;
};

}  // namespace ail

#endif
