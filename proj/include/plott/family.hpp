#pragma once

#include <vector>

#include "plott/ground.hpp"

namespace plott {

/// An intersection-closed family of subsets containing the full set, stored
/// in ascending bitmask order. The empty set may or may not be a member.
/// Whether the family additionally satisfies the Minkowski–Krein–Mil'man
/// property is a separate question (see is_convex_geometry).
class ConvexFamily {
public:
    ConvexFamily(GroundSet ground, std::vector<mask_t> members);

    const GroundSet& ground() const { return ground_; }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<mask_t>& members() const { return members_; }
    bool contains(mask_t member) const;

    /// Intersection of all members containing b. The full set is always a
    /// member, so the result is well defined.
    mask_t closure_of(mask_t b) const;

    bool operator==(const ConvexFamily&) const = default;

private:
    GroundSet ground_;
    std::vector<mask_t> members_;
};

}  // namespace plott
