#include "ail/generate.hpp"

#include <algorithm>
#include <numeric>

namespace ail {

namespace {

std::vector<std::string> world_names(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) out.push_back("w" + std::to_string(k));
    return out;
}

// Lexicographic successor of a restricted growth string; false at the end.
bool next_rgs(std::vector<std::size_t>& r) {
    for (std::size_t k = r.size(); k-- > 1;) {
        std::size_t cap = 0;
        for (std::size_t j = 0; j < k; ++j) cap = std::max(cap, r[j]);
        if (r[k] <= cap) {
            ++r[k];
            for (std::size_t j = k + 1; j < r.size(); ++j) r[j] = 0;
            return true;
        }
    }
    return false;
}

std::size_t rgs_block_count(const std::vector<std::size_t>& r) {
    return r.empty() ? 0 : *std::max_element(r.begin(), r.end()) + 1;
}

}  // namespace

ModelEnumerator::ModelEnumerator(std::vector<std::string> atoms,
                                 std::vector<std::string> agents, std::size_t max_worlds)
    : atoms_(std::move(atoms)), agents_(std::move(agents)), max_worlds_(max_worlds) {
    if (agents_.empty()) throw AilError("enumeration needs at least one agent");
    if (max_worlds_ < 1) throw AilError("enumeration needs max_worlds >= 1");
    if (atoms_.size() > 16 || max_worlds_ > 8 || atoms_.size() * max_worlds_ >= 64)
        throw AilError("enumeration space too large (max 16 atoms, 8 worlds)");
}

void ModelEnumerator::reset_for_world_count() {
    valuation_ = 0;
    valuation_end_ = std::uint64_t{1} << (n_ * atoms_.size());
    rgs_.assign(agents_.size(), std::vector<std::size_t>(n_, 0));
    block_aware_.assign(agents_.size(), std::vector<AtomMask>(1, 0));
}

bool ModelEnumerator::advance() {
    if (n_ == 0) {
        n_ = 1;
        reset_for_world_count();
        return true;
    }
    // Innermost: awareness odometer over (agent, block) slots.
    for (std::size_t i = block_aware_.size(); i-- > 0;) {
        for (std::size_t b = block_aware_[i].size(); b-- > 0;) {
            if (block_aware_[i][b] + 1 < (AtomMask{1} << atoms_.size())) {
                ++block_aware_[i][b];
                for (std::size_t i2 = i; i2 < block_aware_.size(); ++i2)
                    for (std::size_t b2 = (i2 == i ? b + 1 : 0); b2 < block_aware_[i2].size(); ++b2)
                        block_aware_[i2][b2] = 0;
                return true;
            }
        }
    }
    // Next partition combination.
    for (std::size_t i = rgs_.size(); i-- > 0;) {
        if (next_rgs(rgs_[i])) {
            for (std::size_t i2 = i + 1; i2 < rgs_.size(); ++i2)
                rgs_[i2].assign(n_, 0);
            for (std::size_t i2 = 0; i2 < agents_.size(); ++i2)
                block_aware_[i2].assign(rgs_block_count(rgs_[i2]), 0);
            return true;
        }
    }
    // Next valuation.
    if (++valuation_ < valuation_end_) {
        rgs_.assign(agents_.size(), std::vector<std::size_t>(n_, 0));
        block_aware_.assign(agents_.size(), std::vector<AtomMask>(1, 0));
        return true;
    }
    // Next world count.
    if (n_ < max_worlds_) {
        ++n_;
        reset_for_world_count();
        return true;
    }
    return false;
}

EpistemicModel ModelEnumerator::build() const {
    EpistemicModel m;
    m.worlds = world_names(n_);
    m.agents = agents_;
    m.atoms = atoms_;
    m.valuation.assign(atoms_.size(), std::vector<bool>(n_, false));
    for (std::size_t p = 0; p < atoms_.size(); ++p)
        for (std::size_t w = 0; w < n_; ++w)
            m.valuation[p][w] = (valuation_ >> (p * n_ + w)) & 1u;
    m.ik.assign(agents_.size(), std::vector<std::vector<bool>>(n_, std::vector<bool>(n_, false)));
    m.awareness.assign(agents_.size(), std::vector<AtomMask>(n_, 0));
    for (std::size_t i = 0; i < agents_.size(); ++i)
        for (std::size_t w = 0; w < n_; ++w) {
            for (std::size_t v = 0; v < n_; ++v)
                m.ik[i][w][v] = rgs_[i][w] == rgs_[i][v];
            m.awareness[i][w] = block_aware_[i][rgs_[i][w]];
        }
    return m;
}

std::optional<EpistemicModel> ModelEnumerator::next() {
    if (!advance()) return std::nullopt;
    return build();
}

std::uint64_t ModelEnumerator::count_for_worlds(std::size_t n_worlds, std::size_t n_atoms,
                                                std::size_t n_agents) {
    std::uint64_t valuations = std::uint64_t{1} << (n_worlds * n_atoms);
    // Sum over partitions of the awareness choices; independent per agent.
    std::vector<std::size_t> r(n_worlds, 0);
    std::uint64_t per_agent = 0;
    do {
        std::uint64_t aware = 1;
        for (std::size_t b = 0; b < rgs_block_count(r); ++b)
            aware *= std::uint64_t{1} << n_atoms;
        per_agent += aware;
    } while (next_rgs(r));
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < n_agents; ++i) combos *= per_agent;
    return valuations * combos;
}

EpistemicModel random_model(const std::vector<std::string>& atoms,
                            const std::vector<std::string>& agents,
                            std::size_t n_worlds, std::uint64_t seed,
                            const RandomModelOptions& opts) {
    if (agents.empty()) throw AilError("random model needs at least one agent");
    if (n_worlds < 1) throw AilError("random model needs at least one world");
    if (atoms.size() > 20) throw AilError("random model supports at most 20 atoms");

    std::mt19937_64 eng(seed);
    const std::size_t n = n_worlds;
    const std::uint64_t n_vals = std::uint64_t{1} << atoms.size();

    EpistemicModel m;
    m.worlds = world_names(n);
    m.agents = agents;
    m.atoms = atoms;

    std::vector<std::uint64_t> world_val(n);
    if (opts.distinct_valuations) {
        if (n_vals < n)
            throw AilError("cannot give " + std::to_string(n) +
                           " worlds distinct valuations over " +
                           std::to_string(atoms.size()) + " atoms");
        std::vector<std::uint64_t> pool(n_vals);
        std::iota(pool.begin(), pool.end(), std::uint64_t{0});
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t pick = k + static_cast<std::size_t>(rand_below(eng, pool.size() - k));
            std::swap(pool[k], pool[pick]);
            world_val[k] = pool[k];
        }
    } else {
        for (std::size_t k = 0; k < n; ++k) world_val[k] = rand_below(eng, n_vals);
    }
    m.valuation.assign(atoms.size(), std::vector<bool>(n, false));
    for (std::size_t p = 0; p < atoms.size(); ++p)
        for (std::size_t w = 0; w < n; ++w)
            m.valuation[p][w] = (world_val[w] >> p) & 1u;

    m.ik.assign(agents.size(), std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)));
    m.awareness.assign(agents.size(), std::vector<AtomMask>(n, 0));
    for (std::size_t i = 0; i < agents.size(); ++i) {
        std::vector<std::size_t> r(n, 0);
        std::size_t used = 1;
        for (std::size_t k = 1; k < n; ++k) {
            r[k] = static_cast<std::size_t>(rand_below(eng, used + 1));
            used = std::max(used, r[k] + 1);
        }
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t v = 0; v < n; ++v)
                m.ik[i][w][v] = r[w] == r[v];
        if (opts.constant_awareness) {
            AtomMask mask = rand_below(eng, n_vals);
            for (std::size_t w = 0; w < n; ++w) m.awareness[i][w] = mask;
        } else {
            std::vector<AtomMask> per_block(used);
            for (auto& mask : per_block) mask = rand_below(eng, n_vals);
            for (std::size_t w = 0; w < n; ++w) m.awareness[i][w] = per_block[r[w]];
        }
    }
    return m;
}

}  // namespace ail
