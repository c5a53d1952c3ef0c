#include "plott/word.hpp"

namespace plott {

SimpleWord::SimpleWord(GroundSet ground, std::vector<int> letters)
    : ground_(std::move(ground)), letters_(std::move(letters)) {
    mask_t seen = 0;
    for (int x : letters_) {
        if (x < 0 || x >= ground_.size()) {
            throw validation_error("word letter index out of range");
        }
        const mask_t bit = mask_t{1} << x;
        if ((seen & bit) != 0) {
            throw validation_error("word is not simple: repeated letter " + ground_.symbol(x));
        }
        seen |= bit;
    }
}

SimpleWord SimpleWord::from_symbols(const GroundSet& ground, const std::vector<std::string>& symbols) {
    std::vector<int> letters;
    letters.reserve(symbols.size());
    for (const std::string& s : symbols) {
        letters.push_back(ground.index_of(s));
    }
    return SimpleWord(ground, std::move(letters));
}

Subset SimpleWord::support() const {
    mask_t bits = 0;
    for (int x : letters_) {
        bits |= mask_t{1} << x;
    }
    return Subset(bits);
}

std::string SimpleWord::str() const {
    if (letters_.empty()) {
        return "∅";
    }
    std::string out;
    for (int x : letters_) {
        out += ground_.symbol(x);
    }
    return out;
}

bool canonical_word_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

}  // namespace plott
