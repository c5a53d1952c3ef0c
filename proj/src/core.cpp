#include "plott/core.hpp"

#include <cassert>

namespace plott {
namespace {

void require_same_ground(const ChoiceFunction& f, const ChoiceFunction& g, const char* where) {
    if (f.ground() != g.ground()) {
        throw validation_error(std::string(where) + ": ground sets differ");
    }
}

}  // namespace

bool is_path_independent(const ChoiceFunction& f, Exec exec) {
    const std::vector<mask_t>& t = f.table();
    const mask_t count = f.subset_count();
    return detail::all_of_masks(count, exec, [&](mask_t a) {
        const mask_t fa = t[a];
        for (mask_t b = 0; b < count; ++b) {
            if (t[a | b] != t[fa | b]) {
                return false;
            }
        }
        return true;
    });
}

void require_path_independent(const ChoiceFunction& f, Trust trust, const char* where) {
    if (trust == Trust::verify && !is_path_independent(f)) {
        throw validation_error(std::string(where) + ": choice function is not path independent");
    }
}

Subset support(const ChoiceFunction& f) {
    mask_t bits = 0;
    for (int i = 0; i < f.size(); ++i) {
        const mask_t singleton = mask_t{1} << i;
        if (f.at(singleton) == singleton) {
            bits |= singleton;
        }
    }
    return Subset(bits);
}

ChoiceFunction linear_from_word(const SimpleWord& w) {
    return ChoiceFunction::build(w.ground(), [&](mask_t a) -> mask_t {
        for (int x : w.letters()) {
            if ((a >> x) & 1u) {
                return mask_t{1} << x;
            }
        }
        return 0;
    });
}

SimpleWord word_from_linear(const ChoiceFunction& f, Trust trust) {
    for (mask_t a = 0; a < f.subset_count(); ++a) {
        if (std::popcount(f.at(a)) > 1) {
            throw not_linear_error("word_from_linear: value at subset " +
                                   subset_key(f.ground(), Subset(a)) + " has more than one element");
        }
    }
    require_path_independent(f, trust, "word_from_linear");

    std::vector<int> letters;
    mask_t remaining = f.ground().full_mask();
    while (true) {
        const mask_t chosen = f.at(remaining);
        if (chosen == 0) {
            break;
        }
        const int x = std::countr_zero(chosen);
        letters.push_back(x);
        remaining &= ~chosen;
    }
    SimpleWord w(f.ground(), std::move(letters));
    assert(linear_from_word(w) == f);
    return w;
}

bool is_leq(const ChoiceFunction& f, const ChoiceFunction& g) {
    require_same_ground(f, g, "compare");
    for (mask_t a = 0; a < f.subset_count(); ++a) {
        if ((f.at(a) & ~g.at(a)) != 0) {
            return false;
        }
    }
    return true;
}

Comparison compare(const ChoiceFunction& f, const ChoiceFunction& g) {
    require_same_ground(f, g, "compare");
    bool leq = true;
    bool geq = true;
    for (mask_t a = 0; a < f.subset_count() && (leq || geq); ++a) {
        leq = leq && (f.at(a) & ~g.at(a)) == 0;
        geq = geq && (g.at(a) & ~f.at(a)) == 0;
    }
    if (leq && geq) {
        return Comparison::equal;
    }
    if (leq) {
        return Comparison::less_equal;
    }
    if (geq) {
        return Comparison::greater_equal;
    }
    return Comparison::incomparable;
}

bool word_prefix_order(const SimpleWord& prefix, const SimpleWord& word) {
    if (prefix.ground() != word.ground()) {
        throw validation_error("word_prefix_order: ground sets differ");
    }
    if (prefix.length() > word.length()) {
        return false;
    }
    for (int i = 0; i < prefix.length(); ++i) {
        if (prefix.letter(i) != word.letter(i)) {
            return false;
        }
    }
    return true;
}

}  // namespace plott
