#include "plott/order.hpp"

namespace plott {

PartialOrder::PartialOrder(GroundSet ground, std::vector<mask_t> dominates)
    : ground_(std::move(ground)), dominates_(std::move(dominates)) {
    const int n = ground_.size();
    if (dominates_.size() != static_cast<std::size_t>(n)) {
        throw validation_error("partial order needs one relation row per element");
    }
    for (int i = 0; i < n; ++i) {
        const mask_t row = dominates_[static_cast<std::size_t>(i)];
        if ((row & ~ground_.full_mask()) != 0) {
            throw validation_error("partial-order row exceeds the ground width");
        }
        if (((row >> i) & 1u) == 0) {
            throw validation_error("partial order is not reflexive at " + ground_.symbol(i));
        }
    }
    for (int i = 0; i < n; ++i) {
        for (mask_t m = dominates_[static_cast<std::size_t>(i)]; m != 0; m &= m - 1) {
            const int j = std::countr_zero(m);
            const mask_t below_j = dominates_[static_cast<std::size_t>(j)];
            if ((below_j & ~dominates_[static_cast<std::size_t>(i)]) != 0) {
                throw validation_error("partial order is not transitive");
            }
            if (j != i && leq(i, j)) {
                throw validation_error("partial order is not antisymmetric");
            }
        }
    }
}

PartialOrder PartialOrder::from_covers(GroundSet ground, const std::vector<std::pair<int, int>>& covers) {
    const int n = ground.size();
    std::vector<mask_t> dominates(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        dominates[static_cast<std::size_t>(i)] = mask_t{1} << i;
    }
    for (auto [greater, lesser] : covers) {
        if (greater < 0 || greater >= n || lesser < 0 || lesser >= n) {
            throw validation_error("cover pair index out of range");
        }
        dominates[static_cast<std::size_t>(greater)] |= mask_t{1} << lesser;
    }
    // Transitive closure by iterating row absorption to a fixed point.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            mask_t row = dominates[static_cast<std::size_t>(i)];
            for (mask_t m = row; m != 0; m &= m - 1) {
                row |= dominates[static_cast<std::size_t>(std::countr_zero(m))];
            }
            if (row != dominates[static_cast<std::size_t>(i)]) {
                dominates[static_cast<std::size_t>(i)] = row;
                changed = true;
            }
        }
    }
    return PartialOrder(std::move(ground), std::move(dominates));
}

PartialOrder PartialOrder::discrete(const GroundSet& ground) {
    std::vector<mask_t> dominates(static_cast<std::size_t>(ground.size()));
    for (int i = 0; i < ground.size(); ++i) {
        dominates[static_cast<std::size_t>(i)] = mask_t{1} << i;
    }
    return PartialOrder(ground, std::move(dominates));
}

std::vector<std::pair<int, int>> PartialOrder::covers() const {
    const int n = ground_.size();
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j || !leq(j, i)) {
                continue;
            }
            bool covering = true;
            for (int k = 0; k < n && covering; ++k) {
                if (k != i && k != j && leq(j, k) && leq(k, i)) {
                    covering = false;
                }
            }
            if (covering) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

}  // namespace plott
