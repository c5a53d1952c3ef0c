#include "plott/functorial.hpp"

#include <cassert>
#include <set>

#include "plott/lattice.hpp"

namespace plott {
namespace {

std::vector<int> simplify_through(const SetMap& phi, const std::vector<int>& letters) {
    std::vector<int> out;
    mask_t seen = 0;
    for (int x : letters) {
        const int y = phi.apply(x);
        const mask_t bit = mask_t{1} << y;
        if ((seen & bit) == 0) {
            out.push_back(y);
            seen |= bit;
        }
    }
    return out;
}

}  // namespace

ChoiceFunction direct_image(const SetMap& phi, const ChoiceFunction& f) {
    if (phi.source() != f.ground()) {
        throw validation_error("direct_image: map source does not match the function ground");
    }
    return ChoiceFunction::build(phi.target(), [&](mask_t b) {
        const Subset fiber_union = phi.preimage(Subset(b));
        return phi.image(Subset(f.at(fiber_union.bits()))).bits();
    });
}

SimpleWord word_image(const SetMap& phi, const SimpleWord& w) {
    if (phi.source() != w.ground()) {
        throw validation_error("word_image: map source does not match the word ground");
    }
    return SimpleWord(phi.target(), simplify_through(phi, w.letters()));
}

Subset full_image(const SetMap& phi, Subset a) {
    require_within(phi.source(), a, "full_image");
    mask_t out = 0;
    for (int y = 0; y < phi.target().size(); ++y) {
        if (phi.fiber(y).subset_of(a)) {
            out |= mask_t{1} << y;
        }
    }
    return Subset(out);
}

ChoiceFunction trivial_extension(const ChoiceFunction& f, const GroundSet& target, const SetMap& embed) {
    if (embed.source() != f.ground() || embed.target() != target) {
        throw validation_error("trivial_extension: embedding endpoints do not match");
    }
    if (!embed.is_injective()) {
        throw validation_error("trivial_extension: embedding must be injective");
    }
    return direct_image(embed, f);
}

ChoiceFunction direct_sum(const ChoiceFunction& f, const ChoiceFunction& g) {
    for (const std::string& s : g.ground().symbols()) {
        if (f.ground().find(s) >= 0) {
            throw validation_error("direct_sum: ground sets share the symbol " + s);
        }
    }
    std::vector<std::string> symbols = f.ground().symbols();
    symbols.insert(symbols.end(), g.ground().symbols().begin(), g.ground().symbols().end());
    const GroundSet sum(std::move(symbols));
    const int nx = f.size();
    const mask_t low = f.ground().full_mask();
    return ChoiceFunction::build(sum,
                                 [&](mask_t c) { return f.at(c & low) | (g.at(c >> nx) << nx); });
}

ChoiceFunction inverse_image(const SetMap& phi, const ChoiceFunction& g) {
    if (phi.target() != g.ground()) {
        throw validation_error("inverse_image: map target does not match the function ground");
    }
    std::set<std::vector<int>> target_basement;
    const WordSet g_basement = basement(g);
    for (const SimpleWord& w : g_basement.words()) {
        target_basement.insert(w.letters());
    }

    const GroundSet& x = phi.source();
    std::vector<mask_t> table(std::size_t{1} << x.size(), 0);
    std::vector<int> prefix;
    std::vector<int> image;
    // Joining only at leaves suffices: the admissible words are prefix-closed
    // and the linear function of a word dominates those of its prefixes.
    auto dfs = [&](auto&& self, mask_t used) -> void {
        bool leaf = true;
        for (int e = 0; e < x.size(); ++e) {
            if ((used >> e) & 1u) {
                continue;
            }
            const int y = phi.apply(e);
            bool grows = true;
            for (int seen : image) {
                if (seen == y) {
                    grows = false;
                    break;
                }
            }
            if (grows) {
                image.push_back(y);
                if (target_basement.count(image) == 0) {
                    image.pop_back();
                    continue;
                }
            }
            leaf = false;
            prefix.push_back(e);
            self(self, used | (mask_t{1} << e));
            prefix.pop_back();
            if (grows) {
                image.pop_back();
            }
        }
        if (leaf) {
            for (mask_t a = 0; a < table.size(); ++a) {
                for (int e : prefix) {
                    if ((a >> e) & 1u) {
                        table[a] |= mask_t{1} << e;
                        break;
                    }
                }
            }
        }
    };
    dfs(dfs, 0);
    return ChoiceFunction(x, std::move(table));
}

ProductBase product_base(const GroundSet& x, const GroundSet& y) {
    if (x.size() * y.size() > GroundSet::kMaxSize) {
        throw capacity_error("direct product ground would exceed the maximum size");
    }
    std::vector<std::string> symbols;
    std::vector<int> first;
    std::vector<int> second;
    symbols.reserve(static_cast<std::size_t>(x.size() * y.size()));
    for (int i = 0; i < x.size(); ++i) {
        for (int j = 0; j < y.size(); ++j) {
            symbols.push_back("(" + x.symbol(i) + "," + y.symbol(j) + ")");
            first.push_back(i);
            second.push_back(j);
        }
    }
    GroundSet ground(std::move(symbols));
    return ProductBase{ground, SetMap(ground, x, std::move(first)), SetMap(ground, y, std::move(second))};
}

ChoiceFunction direct_product(const ChoiceFunction& f, const ChoiceFunction& g, Trust trust) {
    require_path_independent(f, trust, "direct_product");
    require_path_independent(g, trust, "direct_product");
    const ProductBase base = product_base(f.ground(), g.ground());
    return meet(inverse_image(base.onto_first, f), inverse_image(base.onto_second, g), Trust::trusted);
}

ChoiceFunction apply_correspondence(const ChoiceFunction& h, const SetMap& phi, const SetMap& psi,
                                    const ChoiceFunction& f, Trust trust) {
    if (phi.source() != h.ground() || psi.source() != h.ground()) {
        throw validation_error("apply_correspondence: legs must start at the correspondence ground");
    }
    if (phi.target() != f.ground()) {
        throw validation_error("apply_correspondence: first leg does not match the argument ground");
    }
    require_path_independent(h, trust, "apply_correspondence");
    require_path_independent(f, trust, "apply_correspondence");
    return direct_image(psi, meet(h, inverse_image(phi, f), Trust::trusted));
}

}  // namespace plott
