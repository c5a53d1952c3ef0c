#pragma once

#include <utility>
#include <vector>

#include "plott/ground.hpp"

namespace plott {

/// A partial order on a ground set. Row i of the relation table is the set
/// of elements weakly dominated by i. Reflexivity, transitivity and
/// antisymmetry are all checked at construction.
class PartialOrder {
public:
    PartialOrder(GroundSet ground, std::vector<mask_t> dominates);

    /// Builds the reflexive-transitive closure of the given covering pairs
    /// (greater, lesser) and validates antisymmetry.
    static PartialOrder from_covers(GroundSet ground, const std::vector<std::pair<int, int>>& covers);

    /// The antichain: every element dominates only itself.
    static PartialOrder discrete(const GroundSet& ground);

    const GroundSet& ground() const { return ground_; }
    /// Elements weakly dominated by i (always includes i).
    mask_t dominates(int i) const { return dominates_[static_cast<std::size_t>(i)]; }
    /// a ≤ b
    bool leq(int a, int b) const { return ((dominates_[static_cast<std::size_t>(b)] >> a) & 1u) != 0; }

    /// Covering pairs (greater, lesser) in canonical index order.
    std::vector<std::pair<int, int>> covers() const;

    bool operator==(const PartialOrder&) const = default;

private:
    GroundSet ground_;
    std::vector<mask_t> dominates_;
};

}  // namespace plott
