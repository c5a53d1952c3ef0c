#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "plott/errors.hpp"

namespace plott {

/// Bitmask over ground-set indices; bit i stands for the i-th symbol.
using mask_t = std::uint32_t;

/// An ordered finite alphabet of distinct symbols. Index order is the
/// declaration order and fixes every canonical ordering downstream.
class GroundSet {
public:
    /// Hard width limit of the bitmask representation.
    static constexpr int kMaxSize = 16;

    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    mask_t full_mask() const { return static_cast<mask_t>((1u << size()) - 1u); }
    const std::string& symbol(int index) const { return symbols_[static_cast<std::size_t>(index)]; }
    const std::vector<std::string>& symbols() const { return symbols_; }

    /// Index of a symbol, or -1 when absent.
    int find(std::string_view symbol) const;
    /// Index of a symbol; throws validation_error when absent.
    int index_of(std::string_view symbol) const;

    bool operator==(const GroundSet&) const = default;

private:
    std::vector<std::string> symbols_;
};

/// A subset of a ground set as a bitmask. Plain value type; width checks
/// against a concrete ground happen at operation boundaries.
class Subset {
public:
    constexpr Subset() = default;
    constexpr explicit Subset(mask_t bits) : bits_(bits) {}

    static Subset of(const GroundSet& ground, const std::vector<std::string>& symbols);

    constexpr mask_t bits() const { return bits_; }
    constexpr bool contains(int index) const { return ((bits_ >> index) & 1u) != 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

    Subset complement(const GroundSet& ground) const { return Subset(~bits_ & ground.full_mask()); }

    friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
    friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
    friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
    friend constexpr Subset operator^(Subset a, Subset b) { return Subset(a.bits_ ^ b.bits_); }

    constexpr bool operator==(const Subset&) const = default;
    constexpr auto operator<=>(const Subset&) const = default;  // ascending-bitmask order

private:
    mask_t bits_ = 0;
};

/// Set bits in ascending index order.
std::vector<int> elements(Subset s);

/// Comma-joined symbols in ground order; empty string for the empty set.
std::string subset_key(const GroundSet& ground, Subset s);

/// Inverse of subset_key. Throws validation_error on unknown symbols.
Subset parse_subset_key(const GroundSet& ground, std::string_view key);

/// Throws validation_error when s has bits beyond the ground width.
void require_within(const GroundSet& ground, Subset s, const char* what);

}  // namespace plott
