#pragma once

#include <string>
#include <vector>

#include "plott/ground.hpp"

namespace plott {

/// A repetition-free sequence of ground-set indices. The empty word is valid.
class SimpleWord {
public:
    explicit SimpleWord(GroundSet ground) : ground_(std::move(ground)) {}
    SimpleWord(GroundSet ground, std::vector<int> letters);

    static SimpleWord from_symbols(const GroundSet& ground, const std::vector<std::string>& symbols);

    const GroundSet& ground() const { return ground_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }
    int letter(int pos) const { return letters_[static_cast<std::size_t>(pos)]; }
    const std::vector<int>& letters() const { return letters_; }

    /// The set of letters occurring in the word.
    Subset support() const;

    /// Symbols concatenated; "∅" for the empty word.
    std::string str() const;

    bool operator==(const SimpleWord&) const = default;

private:
    GroundSet ground_;
    std::vector<int> letters_;
};

/// Canonical word order: by length, then lexicographically by index sequence.
bool canonical_word_less(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace plott
