#pragma once

#include <vector>

#include "plott/ground.hpp"

namespace plott {

/// A total choice function stored as a dense table over all 2^n subsets,
/// indexed by the argument's bitmask. The contraction property
/// table[A] ⊆ A is validated on construction and preserved by every
/// operation in the library.
class ChoiceFunction {
public:
    ChoiceFunction(GroundSet ground, std::vector<mask_t> table);

    /// The constant-empty choice function.
    static ChoiceFunction zero(const GroundSet& ground);

    /// Builds a table by evaluating fn on every subset mask.
    template <class Fn>
    static ChoiceFunction build(const GroundSet& ground, Fn&& fn) {
        std::vector<mask_t> table(std::size_t{1} << ground.size());
        for (mask_t a = 0; a < table.size(); ++a) {
            table[a] = fn(a);
        }
        return ChoiceFunction(ground, std::move(table));
    }

    const GroundSet& ground() const { return ground_; }
    int size() const { return ground_.size(); }
    mask_t subset_count() const { return static_cast<mask_t>(table_.size()); }
    const std::vector<mask_t>& table() const { return table_; }

    /// Unchecked table lookup.
    mask_t at(mask_t argument) const { return table_[argument]; }

    /// Checked lookup; throws validation_error when the mask exceeds the
    /// ground width.
    Subset evaluate(Subset argument) const;

    bool operator==(const ChoiceFunction&) const = default;

private:
    GroundSet ground_;
    std::vector<mask_t> table_;
};

}  // namespace plott
