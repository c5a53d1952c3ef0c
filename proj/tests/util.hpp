#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "plott/core.hpp"
#include "plott/lattice.hpp"
#include "plott/setmap.hpp"

// Shared fixtures and generators for the test suites.
namespace plott::testutil {

inline GroundSet ground_of(std::string_view letters) {
    std::vector<std::string> symbols;
    for (char c : letters) {
        symbols.emplace_back(1, c);
    }
    return GroundSet(std::move(symbols));
}

inline GroundSet ground_n(int n) {
    return ground_of(std::string_view("abcdefghijklmnop").substr(0, static_cast<std::size_t>(n)));
}

inline SimpleWord word(const GroundSet& g, std::string_view letters) {
    std::vector<int> idx;
    for (char c : letters) {
        idx.push_back(g.index_of(std::string_view(&c, 1)));
    }
    return SimpleWord(g, std::move(idx));
}

inline Subset sub(const GroundSet& g, std::string_view letters) {
    return word(g, letters).support();
}

inline void all_words_rec(const GroundSet& g, mask_t used, std::vector<int>& prefix,
                          std::vector<SimpleWord>& out) {
    out.emplace_back(g, prefix);
    for (int x = 0; x < g.size(); ++x) {
        if ((used >> x) & 1u) {
            continue;
        }
        prefix.push_back(x);
        all_words_rec(g, used | (mask_t{1} << x), prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<SimpleWord> all_simple_words(const GroundSet& g) {
    std::vector<SimpleWord> out;
    std::vector<int> prefix;
    all_words_rec(g, 0, prefix, out);
    return out;
}

inline WordSet all_words_set(const GroundSet& g) {
    return WordSet(g, all_simple_words(g));
}

inline SimpleWord random_word(const GroundSet& g, std::mt19937& rng) {
    std::vector<int> pool;
    for (int i = 0; i < g.size(); ++i) {
        pool.push_back(i);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    const int len = std::uniform_int_distribution<int>(0, g.size())(rng);
    pool.resize(static_cast<std::size_t>(len));
    return SimpleWord(g, std::move(pool));
}

/// A random path-independent function: the join of a few random words.
inline ChoiceFunction random_plott(const GroundSet& g, std::mt19937& rng) {
    const int count = std::uniform_int_distribution<int>(0, 4)(rng);
    std::vector<SimpleWord> words;
    for (int i = 0; i < count; ++i) {
        words.push_back(random_word(g, rng));
    }
    return join_of_words(WordSet(g, std::move(words)));
}

/// A random choice function, path independent or not.
inline ChoiceFunction random_choice(const GroundSet& g, std::mt19937& rng) {
    std::vector<mask_t> table(std::size_t{1} << g.size());
    for (mask_t a = 1; a < table.size(); ++a) {
        table[a] = std::uniform_int_distribution<mask_t>(0, a)(rng) & a;
    }
    return ChoiceFunction(g, std::move(table));
}

inline SetMap random_map(const GroundSet& from, const GroundSet& to, std::mt19937& rng) {
    std::vector<int> images;
    std::uniform_int_distribution<int> pick(0, to.size() - 1);
    for (int i = 0; i < from.size(); ++i) {
        images.push_back(pick(rng));
    }
    return SetMap(from, to, std::move(images));
}

/// The join of the linear functions of "abc" and "cba" on {a,b,c}.
inline ChoiceFunction two_order_join() {
    const GroundSet g = ground_of("abc");
    return join(linear_from_word(word(g, "abc")), linear_from_word(word(g, "cba")), Trust::trusted);
}

/// The four-element function whose convex sets are
/// {∅, d, dc, ad, bd, bcd, acd, abcd}: d is chosen only from {d}, the full
/// set and its d-complement choose {a,b}, everything else drops d.
inline ChoiceFunction four_element_example() {
    const GroundSet g = ground_of("abcd");
    const mask_t d = sub(g, "d").bits();
    const mask_t full = g.full_mask();
    return ChoiceFunction::build(g, [&](mask_t a) -> mask_t {
        if (a == d) {
            return d;
        }
        if (a == full || a == (full & ~d)) {
            return sub(g, "ab").bits();
        }
        return a & ~d;
    });
}

}  // namespace plott::testutil
