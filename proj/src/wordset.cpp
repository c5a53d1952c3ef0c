#include "plott/wordset.hpp"

#include <algorithm>

namespace plott {

WordSet::WordSet(GroundSet ground, std::vector<SimpleWord> words)
    : ground_(std::move(ground)), words_(std::move(words)) {
    for (const SimpleWord& w : words_) {
        if (w.ground() != ground_) {
            throw validation_error("word set contains a word over a different ground set");
        }
    }
    std::sort(words_.begin(), words_.end(), [](const SimpleWord& a, const SimpleWord& b) {
        return canonical_word_less(a.letters(), b.letters());
    });
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool WordSet::contains(const SimpleWord& w) const {
    const auto it = std::lower_bound(words_.begin(), words_.end(), w,
                                     [](const SimpleWord& a, const SimpleWord& b) {
                                         return canonical_word_less(a.letters(), b.letters());
                                     });
    return it != words_.end() && *it == w;
}

}  // namespace plott
