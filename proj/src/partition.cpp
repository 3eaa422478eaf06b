#include "ail/partition.hpp"

#include <algorithm>
#include <numeric>

namespace ail {

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // Smaller index becomes the root so representatives stay canonical.
        if (b < a) std::swap(a, b);
        parent[b] = a;
    }
    std::vector<std::size_t> rep_map() {
        std::vector<std::size_t> rep(parent.size());
        for (std::size_t k = 0; k < parent.size(); ++k) rep[k] = find(k);
        return rep;
    }
    std::vector<std::size_t> parent;
};

}  // namespace

Partition::Partition(std::size_t n) : rep_(n) {
    std::iota(rep_.begin(), rep_.end(), std::size_t{0});
}

Partition Partition::from_rep_map(std::vector<std::size_t> rep) {
    // Normalize: representative = min element of the block.
    std::vector<std::size_t> min_of(rep.size());
    std::iota(min_of.begin(), min_of.end(), std::size_t{0});
    for (std::size_t k = 0; k < rep.size(); ++k)
        min_of[rep[k]] = std::min(min_of[rep[k]], k);
    Partition p;
    p.rep_.resize(rep.size());
    for (std::size_t k = 0; k < rep.size(); ++k) p.rep_[k] = min_of[rep[k]];
    return p;
}

Partition Partition::from_pairs(std::size_t n,
                                const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    UnionFind uf(n);
    for (const auto& [a, b] : pairs) uf.unite(a, b);
    Partition p;
    p.rep_ = uf.rep_map();
    return p;
}

std::size_t Partition::block_count() const {
    std::size_t n = 0;
    for (std::size_t k = 0; k < rep_.size(); ++k)
        if (rep_[k] == k) ++n;
    return n;
}

std::vector<std::vector<std::size_t>> Partition::blocks() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> slot(rep_.size(), SIZE_MAX);
    for (std::size_t k = 0; k < rep_.size(); ++k) {
        std::size_t r = rep_[k];
        if (slot[r] == SIZE_MAX) {
            slot[r] = out.size();
            out.emplace_back();
        }
        out[slot[r]].push_back(k);
    }
    return out;
}

std::vector<std::size_t> Partition::block_of(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < rep_.size(); ++k)
        if (rep_[k] == rep_[x]) out.push_back(k);
    return out;
}

Partition join(const Partition& a, const Partition& b) {
    UnionFind uf(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        uf.unite(k, a.rep_[k]);
        uf.unite(k, b.rep_[k]);
    }
    Partition p;
    p.rep_ = uf.rep_map();
    return p;
}

}  // namespace ail
