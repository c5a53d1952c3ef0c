#pragma once

#include <vector>

#include "plott/word.hpp"

namespace plott {

/// A duplicate-free collection of simple words over one ground set, kept in
/// canonical order (length first, then lexicographic by index sequence).
class WordSet {
public:
    explicit WordSet(GroundSet ground) : ground_(std::move(ground)) {}
    WordSet(GroundSet ground, std::vector<SimpleWord> words);

    const GroundSet& ground() const { return ground_; }
    int size() const { return static_cast<int>(words_.size()); }
    bool empty() const { return words_.empty(); }
    const SimpleWord& word(int i) const { return words_[static_cast<std::size_t>(i)]; }
    const std::vector<SimpleWord>& words() const { return words_; }

    bool contains(const SimpleWord& w) const;

    bool operator==(const WordSet&) const = default;

private:
    GroundSet ground_;
    std::vector<SimpleWord> words_;
};

}  // namespace plott
