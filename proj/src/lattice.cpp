#include "plott/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <set>
#include <unordered_set>

namespace plott {
namespace {

void require_same_ground(const ChoiceFunction& f, const ChoiceFunction& g, const char* where) {
    if (f.ground() != g.ground()) {
        throw validation_error(std::string(where) + ": ground sets differ");
    }
}

// Serial path-independence test on a raw table; used inside parallel loops.
bool pi_raw(const std::vector<mask_t>& t) {
    const mask_t count = static_cast<mask_t>(t.size());
    for (mask_t a = 0; a < count; ++a) {
        const mask_t fa = t[a];
        for (mask_t b = 0; b < count; ++b) {
            if (t[a | b] != t[fa | b]) {
                return false;
            }
        }
    }
    return true;
}

// A letter x may extend a prefix with support s iff x is chosen from every
// subset of the complement of s that contains it.
bool letter_extends(const ChoiceFunction& f, mask_t s, int x) {
    const mask_t bit = mask_t{1} << x;
    const mask_t rest = f.ground().full_mask() & ~s & ~bit;
    mask_t sub = rest;
    while (true) {
        if ((f.at(sub | bit) & bit) == 0) {
            return false;
        }
        if (sub == 0) {
            break;
        }
        sub = (sub - 1) & rest;
    }
    return true;
}

void basement_dfs(const ChoiceFunction& f, std::vector<int>& prefix, mask_t support_mask,
                  std::vector<SimpleWord>& out) {
    out.emplace_back(f.ground(), prefix);
    for (int x = 0; x < f.size(); ++x) {
        if ((support_mask >> x) & 1u) {
            continue;
        }
        if (letter_extends(f, support_mask, x)) {
            prefix.push_back(x);
            basement_dfs(f, prefix, support_mask | (mask_t{1} << x), out);
            prefix.pop_back();
        }
    }
}

void accumulate_word(const std::vector<int>& letters, std::vector<mask_t>& table) {
    for (mask_t a = 0; a < table.size(); ++a) {
        for (int x : letters) {
            if ((a >> x) & 1u) {
                table[a] |= mask_t{1} << x;
                break;
            }
        }
    }
}

std::vector<ChoiceFunction> sort_canonical(std::vector<std::vector<mask_t>> tables, const GroundSet& ground) {
    std::sort(tables.begin(), tables.end());
    std::vector<ChoiceFunction> out;
    out.reserve(tables.size());
    for (std::vector<mask_t>& t : tables) {
        out.emplace_back(ground, std::move(t));
    }
    return out;
}

// --- brute-force enumeration ------------------------------------------------

// Deposits the low bits of value onto the set bits of mask, in index order.
mask_t deposit_bits(mask_t value, mask_t mask) {
    mask_t out = 0;
    for (mask_t m = mask; m != 0; m &= m - 1) {
        if (value & 1u) {
            out |= m & (~m + 1);
        }
        value >>= 1;
    }
    return out;
}

std::vector<ChoiceFunction> enumerate_brute(const GroundSet& ground, Exec exec) {
    if (ground.size() > 3) {
        throw capacity_error("brute-force enumeration is capped at ground size 3");
    }
    const mask_t subsets = mask_t{1} << ground.size();
    // Candidate tables form a mixed-radix odometer: one digit per subset,
    // ranging over its submasks.
    std::uint64_t total = 1;
    for (mask_t a = 0; a < subsets; ++a) {
        total <<= std::popcount(a);
    }

    std::vector<std::uint8_t> keep(total, 0);
    detail::for_each_index(total, exec, [&](std::size_t index) {
        std::vector<mask_t> t(subsets);
        std::uint64_t rem = index;
        for (mask_t a = 0; a < subsets; ++a) {
            const int width = std::popcount(a);
            t[a] = deposit_bits(static_cast<mask_t>(rem & ((1u << width) - 1u)), a);
            rem >>= width;
        }
        keep[index] = pi_raw(t) ? 1 : 0;
    });

    std::vector<std::vector<mask_t>> tables;
    for (std::uint64_t index = 0; index < total; ++index) {
        if (!keep[index]) {
            continue;
        }
        std::vector<mask_t> t(subsets);
        std::uint64_t rem = index;
        for (mask_t a = 0; a < subsets; ++a) {
            const int width = std::popcount(a);
            t[a] = deposit_bits(static_cast<mask_t>(rem & ((1u << width) - 1u)), a);
            rem >>= width;
        }
        tables.push_back(std::move(t));
    }
    return sort_canonical(std::move(tables), ground);
}

// --- geometry-search enumeration ---------------------------------------------

// Families over at most 2^5 subsets fit in one word: bit a set means the
// subset with mask a is a member.
using fam_t = std::uint64_t;

void all_words_dfs(int n, mask_t used, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
    out.push_back(prefix);
    for (int x = 0; x < n; ++x) {
        if ((used >> x) & 1u) {
            continue;
        }
        prefix.push_back(x);
        all_words_dfs(n, used | (mask_t{1} << x), prefix, out);
        prefix.pop_back();
    }
}

fam_t join_with_chain(fam_t fam, const std::vector<mask_t>& chain) {
    fam_t out = 0;
    for (fam_t m = fam; m != 0; m &= m - 1) {
        const int a = std::countr_zero(m);
        for (mask_t c : chain) {
            out |= fam_t{1} << (static_cast<mask_t>(a) & c);
        }
    }
    return out;
}

std::vector<mask_t> table_from_family(fam_t fam, int n) {
    const mask_t subsets = mask_t{1} << n;
    std::vector<mask_t> closure(subsets);
    for (mask_t b = 0; b < subsets; ++b) {
        mask_t cl = subsets - 1;
        for (fam_t m = fam; m != 0; m &= m - 1) {
            const mask_t member = static_cast<mask_t>(std::countr_zero(m));
            if ((b & ~member) == 0) {
                cl &= member;
            }
        }
        closure[b] = cl;
    }
    std::vector<mask_t> t(subsets);
    for (mask_t a = 0; a < subsets; ++a) {
        mask_t chosen = 0;
        for (mask_t m = a; m != 0; m &= m - 1) {
            const int x = std::countr_zero(m);
            if ((closure[a & ~(mask_t{1} << x)] & (mask_t{1} << x)) == 0) {
                chosen |= mask_t{1} << x;
            }
        }
        t[a] = chosen;
    }
    return t;
}

std::vector<ChoiceFunction> enumerate_geometry(const GroundSet& ground, Exec exec) {
    const int n = ground.size();
    if (n > 5) {
        throw capacity_error("geometry-search enumeration is capped at ground size 5");
    }
    const mask_t full = ground.full_mask();

    std::vector<std::vector<int>> words;
    {
        std::vector<int> prefix;
        all_words_dfs(n, 0, prefix, words);
    }
    std::vector<std::vector<mask_t>> chains;
    chains.reserve(words.size());
    for (const std::vector<int>& w : words) {
        std::vector<mask_t> chain;
        mask_t member = full;
        chain.push_back(member);
        for (int x : w) {
            member &= ~(mask_t{1} << x);
            chain.push_back(member);
        }
        chains.push_back(std::move(chain));
    }

    const fam_t bottom = fam_t{1} << full;
    std::unordered_set<fam_t> seen{bottom};
    std::vector<fam_t> found{bottom};
    std::vector<fam_t> frontier{bottom};
    std::vector<fam_t> candidates;
    while (!frontier.empty()) {
        candidates.assign(frontier.size() * chains.size(), 0);
        detail::for_each_index(candidates.size(), exec, [&](std::size_t slot) {
            candidates[slot] = join_with_chain(frontier[slot / chains.size()], chains[slot % chains.size()]);
        });
        std::vector<fam_t> next;
        for (fam_t fam : candidates) {
            if (seen.insert(fam).second) {
                found.push_back(fam);
                next.push_back(fam);
            }
        }
        frontier = std::move(next);
    }

    std::vector<std::vector<mask_t>> tables(found.size());
    detail::for_each_index(found.size(), exec, [&](std::size_t i) {
        tables[i] = table_from_family(found[i], n);
    });
    return sort_canonical(std::move(tables), ground);
}

}  // namespace

ChoiceFunction join(const ChoiceFunction& f, const ChoiceFunction& g, Trust trust) {
    require_same_ground(f, g, "join");
    require_path_independent(f, trust, "join");
    require_path_independent(g, trust, "join");
    ChoiceFunction out = ChoiceFunction::build(f.ground(), [&](mask_t a) { return f.at(a) | g.at(a); });
    assert(is_path_independent(out));
    return out;
}

WordSet basement(const ChoiceFunction& f) {
    std::vector<SimpleWord> words;
    std::vector<int> prefix;
    basement_dfs(f, prefix, 0, words);
    return WordSet(f.ground(), std::move(words));
}

WordSet socle(const ChoiceFunction& f) {
    const WordSet base = basement(f);
    std::set<std::vector<int>> present;
    for (const SimpleWord& w : base.words()) {
        present.insert(w.letters());
    }
    std::vector<SimpleWord> maximal;
    for (const SimpleWord& w : base.words()) {
        bool extendable = false;
        std::vector<int> candidate = w.letters();
        for (int x = 0; x < f.size() && !extendable; ++x) {
            if (w.support().contains(x)) {
                continue;
            }
            candidate.push_back(x);
            extendable = present.count(candidate) != 0;
            candidate.pop_back();
        }
        if (!extendable) {
            maximal.push_back(w);
        }
    }
    return WordSet(f.ground(), std::move(maximal));
}

ChoiceFunction join_of_words(const WordSet& words) {
    std::vector<mask_t> table(std::size_t{1} << words.ground().size(), 0);
    for (const SimpleWord& w : words.words()) {
        accumulate_word(w.letters(), table);
    }
    return ChoiceFunction(words.ground(), std::move(table));
}

ChoiceFunction plottize(const ChoiceFunction& f) {
    return join_of_words(basement(f));
}

ChoiceFunction meet(const ChoiceFunction& f, const ChoiceFunction& g, Trust trust) {
    require_same_ground(f, g, "meet");
    require_path_independent(f, trust, "meet");
    require_path_independent(g, trust, "meet");
    const ChoiceFunction pointwise =
        ChoiceFunction::build(f.ground(), [&](mask_t a) { return f.at(a) & g.at(a); });
    return plottize(pointwise);
}

ChoiceFunction max_choice(const PartialOrder& order) {
    const int n = order.ground().size();
    // strict_above[x] = elements strictly dominating x.
    std::vector<mask_t> strict_above(static_cast<std::size_t>(n), 0);
    for (int y = 0; y < n; ++y) {
        for (mask_t m = order.dominates(y) & ~(mask_t{1} << y); m != 0; m &= m - 1) {
            strict_above[static_cast<std::size_t>(std::countr_zero(m))] |= mask_t{1} << y;
        }
    }
    ChoiceFunction out = ChoiceFunction::build(order.ground(), [&](mask_t a) {
        mask_t chosen = 0;
        for (mask_t m = a; m != 0; m &= m - 1) {
            const int x = std::countr_zero(m);
            if ((a & strict_above[static_cast<std::size_t>(x)]) == 0) {
                chosen |= mask_t{1} << x;
            }
        }
        return chosen;
    });
    assert(is_path_independent(out));
    return out;
}

ChoiceFunction top_k_choice(const SimpleWord& order, int k) {
    if (order.length() != order.ground().size()) {
        throw validation_error("top_k_choice: the order word must list every ground symbol");
    }
    if (k < 0) {
        throw validation_error("top_k_choice: k must be non-negative");
    }
    ChoiceFunction out = ChoiceFunction::build(order.ground(), [&](mask_t a) {
        mask_t chosen = 0;
        int taken = 0;
        for (int x : order.letters()) {
            if (taken == k) {
                break;
            }
            if ((a >> x) & 1u) {
                chosen |= mask_t{1} << x;
                ++taken;
            }
        }
        return chosen;
    });
    assert(is_path_independent(out));
    return out;
}

ChoiceFunction identity_on(const GroundSet& ground, Subset s) {
    require_within(ground, s, "identity_on");
    return ChoiceFunction::build(ground, [&](mask_t a) { return a & s.bits(); });
}

std::vector<ChoiceFunction> enumerate_plott(const GroundSet& ground, EnumerationStrategy strategy, Exec exec) {
    switch (strategy) {
        case EnumerationStrategy::brute_force:
            return enumerate_brute(ground, exec);
        case EnumerationStrategy::geometry_search:
            return enumerate_geometry(ground, exec);
    }
    throw validation_error("enumerate_plott: unknown strategy");
}

}  // namespace plott
