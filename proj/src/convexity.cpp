#include "plott/convexity.hpp"

#include <set>

#include "plott/core.hpp"
#include "plott/lattice.hpp"

namespace plott {
namespace {

void require_same_ground(const SimpleWord& w, const SimpleWord& v, const char* where) {
    if (w.ground() != v.ground()) {
        throw validation_error(std::string(where) + ": ground sets differ");
    }
}

void shuffle_rec(const std::vector<int>& w, const std::vector<int>& v, std::size_t i, std::size_t j,
                 std::vector<int>& out, std::vector<SimpleWord>& results, const GroundSet& ground) {
    if (i == w.size() && j == v.size()) {
        results.emplace_back(ground, out);
        return;
    }
    if (i < w.size()) {
        out.push_back(w[i]);
        shuffle_rec(w, v, i + 1, j, out, results, ground);
        out.pop_back();
    }
    if (j < v.size()) {
        out.push_back(v[j]);
        shuffle_rec(w, v, i, j + 1, out, results, ground);
        out.pop_back();
    }
}

// Enumerates the shuffles of tagged copies of the given words and simplifies
// on the fly. A state is (per-word positions, simplified output); identical
// states have identical completions and are explored once.
void melange_rec(const std::vector<std::vector<int>>& words, std::vector<std::size_t>& pos,
                 std::vector<int>& out, mask_t seen, std::set<std::vector<int>>& visited,
                 std::set<std::vector<int>>& results) {
    std::vector<int> key(pos.begin(), pos.end());
    key.push_back(-1);
    key.insert(key.end(), out.begin(), out.end());
    if (!visited.insert(std::move(key)).second) {
        return;
    }
    bool done = true;
    for (std::size_t k = 0; k < words.size(); ++k) {
        if (pos[k] == words[k].size()) {
            continue;
        }
        done = false;
        const int x = words[k][pos[k]];
        const mask_t bit = mask_t{1} << x;
        const bool fresh = (seen & bit) == 0;
        ++pos[k];
        if (fresh) {
            out.push_back(x);
        }
        melange_rec(words, pos, out, seen | bit, visited, results);
        if (fresh) {
            out.pop_back();
        }
        --pos[k];
    }
    if (done) {
        results.insert(out);
    }
}

WordSet melange_of(const GroundSet& ground, const std::vector<std::vector<int>>& letters) {
    std::vector<std::size_t> pos(letters.size(), 0);
    std::vector<int> out;
    std::set<std::vector<int>> visited;
    std::set<std::vector<int>> results;
    melange_rec(letters, pos, out, 0, visited, results);
    std::vector<SimpleWord> words;
    words.reserve(results.size());
    for (const std::vector<int>& r : results) {
        words.emplace_back(ground, r);
    }
    return WordSet(ground, std::move(words));
}

}  // namespace

WordSet shuffle(const SimpleWord& w, const SimpleWord& v) {
    require_same_ground(w, v, "shuffle");
    if (!(w.support() & v.support()).empty()) {
        throw validation_error("shuffle: word supports overlap");
    }
    std::vector<SimpleWord> results;
    std::vector<int> out;
    shuffle_rec(w.letters(), v.letters(), 0, 0, out, results, w.ground());
    return WordSet(w.ground(), std::move(results));
}

WordSet melange(const SimpleWord& w, const SimpleWord& v) {
    require_same_ground(w, v, "melange");
    return melange_of(w.ground(), {w.letters(), v.letters()});
}

WordSet melange_family(const std::vector<SimpleWord>& words) {
    if (words.empty()) {
        throw validation_error("melange_family: at least one word required");
    }
    std::vector<std::vector<int>> letters;
    letters.reserve(words.size());
    for (const SimpleWord& w : words) {
        if (w.ground() != words.front().ground()) {
            throw validation_error("melange_family: ground sets differ");
        }
        letters.push_back(w.letters());
    }
    return melange_of(words.front().ground(), letters);
}

WordSet segment(const SimpleWord& w, const SimpleWord& v) {
    require_same_ground(w, v, "segment");
    return basement(join(linear_from_word(w), linear_from_word(v), Trust::trusted));
}

bool is_convex(const WordSet& c) {
    return convex_hull(c) == c;
}

WordSet convex_hull(const WordSet& c) {
    return basement(join_of_words(c));
}

ConvexFamily geometry_from_convex_set(const WordSet& c) {
    if (!is_convex(c)) {
        throw validation_error("geometry_from_convex_set: word set is not convex");
    }
    std::vector<mask_t> members;
    members.reserve(static_cast<std::size_t>(c.size()));
    for (const SimpleWord& w : c.words()) {
        members.push_back(w.support().complement(c.ground()).bits());
    }
    return ConvexFamily(c.ground(), std::move(members));
}

}  // namespace plott
