#pragma once

#include <vector>

#include "plott/ground.hpp"

namespace plott {

/// A total mapping between two ground sets, one target index per source index.
class SetMap {
public:
    SetMap(GroundSet source, GroundSet target, std::vector<int> images);

    static SetMap identity(const GroundSet& ground);

    const GroundSet& source() const { return source_; }
    const GroundSet& target() const { return target_; }
    int apply(int source_index) const { return images_[static_cast<std::size_t>(source_index)]; }
    const std::vector<int>& images() const { return images_; }

    bool is_injective() const;

    /// φ(A) for a source subset.
    Subset image(Subset a) const;
    /// φ⁻¹(B) for a target subset.
    Subset preimage(Subset b) const;
    /// The fiber φ⁻¹(y) of a single target index.
    Subset fiber(int target_index) const;

    bool operator==(const SetMap&) const = default;

private:
    GroundSet source_;
    GroundSet target_;
    std::vector<int> images_;
};

/// outer ∘ inner; inner.target must equal outer.source.
SetMap compose(const SetMap& outer, const SetMap& inner);

}  // namespace plott
