#include "plott/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "plott/functorial.hpp"
#include "plott/lattice.hpp"

namespace plott {
namespace {

std::vector<mask_t> closure_table(const ConvexFamily& family, Exec exec) {
    const mask_t subsets = mask_t{1} << family.ground().size();
    std::vector<mask_t> out(subsets);
    detail::for_each_mask(subsets, exec, [&](mask_t b) { out[b] = family.closure_of(b); });
    return out;
}

mask_t extreme_bits(const std::vector<mask_t>& closures, mask_t a) {
    mask_t chosen = 0;
    for (mask_t m = a; m != 0; m &= m - 1) {
        const int x = std::countr_zero(m);
        if ((closures[a & ~(mask_t{1} << x)] & (mask_t{1} << x)) == 0) {
            chosen |= mask_t{1} << x;
        }
    }
    return chosen;
}

std::string prime_suffix(int count) {
    switch (count) {
        case 1:
            return "′";
        case 2:
            return "″";
        case 3:
            return "‴";
        default: {
            std::string s;
            for (int i = 0; i < count; ++i) {
                s += "′";
            }
            return s;
        }
    }
}

}  // namespace

Subset closure(const ChoiceFunction& f, Subset a, Trust trust) {
    require_within(f.ground(), a, "closure");
    require_path_independent(f, trust, "closure");
    const mask_t fa = f.at(a.bits());
    mask_t out = 0;
    for (int x = 0; x < f.size(); ++x) {
        if (f.at(a.bits() | (mask_t{1} << x)) == fa) {
            out |= mask_t{1} << x;
        }
    }
    return Subset(out);
}

ConvexFamily to_geometry(const ChoiceFunction& f, Trust trust, Exec exec) {
    require_path_independent(f, trust, "to_geometry");
    const mask_t subsets = f.subset_count();
    std::vector<std::uint8_t> fixed(subsets);
    detail::for_each_mask(subsets, exec, [&](mask_t a) {
        const mask_t fa = f.at(a);
        for (int x = 0; x < f.size(); ++x) {
            const mask_t bit = mask_t{1} << x;
            if ((a & bit) == 0 && f.at(a | bit) == fa) {
                fixed[a] = 0;
                return;
            }
        }
        fixed[a] = 1;
    });
    std::vector<mask_t> members;
    for (mask_t a = 0; a < subsets; ++a) {
        if (fixed[a]) {
            members.push_back(a);
        }
    }
    return ConvexFamily(f.ground(), std::move(members));
}

Subset extreme_points(const ConvexFamily& family, Subset a) {
    require_within(family.ground(), a, "extreme_points");
    mask_t chosen = 0;
    for (mask_t m = a.bits(); m != 0; m &= m - 1) {
        const int x = std::countr_zero(m);
        if ((family.closure_of(a.bits() & ~(mask_t{1} << x)) & (mask_t{1} << x)) == 0) {
            chosen |= mask_t{1} << x;
        }
    }
    return Subset(chosen);
}

ChoiceFunction from_geometry(const ConvexFamily& family, Exec exec) {
    if (!is_convex_geometry(family, exec)) {
        throw validation_error("from_geometry: family fails the Minkowski-Krein-Mil'man property");
    }
    const std::vector<mask_t> closures = closure_table(family, exec);
    const mask_t subsets = mask_t{1} << family.ground().size();
    std::vector<mask_t> table(subsets);
    detail::for_each_mask(subsets, exec, [&](mask_t a) { table[a] = extreme_bits(closures, a); });
    ChoiceFunction out(family.ground(), std::move(table));
    assert(is_path_independent(out));
    return out;
}

bool is_convex_geometry(const ConvexFamily& family, Exec exec) {
    const std::vector<mask_t> closures = closure_table(family, exec);
    const mask_t subsets = mask_t{1} << family.ground().size();
    return detail::all_of_masks(subsets, exec, [&](mask_t a) {
        return closures[extreme_bits(closures, a)] == closures[a];
    });
}

std::vector<std::vector<Subset>> maximal_chains(const ConvexFamily& family) {
    if (!is_convex_geometry(family)) {
        throw validation_error("maximal_chains: family is not a convex geometry");
    }
    std::vector<std::vector<Subset>> chains;
    std::vector<Subset> current{Subset(family.ground().full_mask())};
    // Descend one deleted element at a time; dead ends are the minimal member.
    auto descend = [&](auto&& self, mask_t at) -> void {
        bool leaf = true;
        for (mask_t m = at; m != 0; m &= m - 1) {
            const mask_t next = at & ~(m & (~m + 1));
            if (family.contains(next)) {
                leaf = false;
                current.emplace_back(next);
                self(self, next);
                current.pop_back();
            }
        }
        if (leaf) {
            chains.push_back(current);
        }
    };
    descend(descend, family.ground().full_mask());
    return chains;
}

PieceStructure::PieceStructure(GroundSet base, std::vector<Piece> pieces)
    : base_(std::move(base)),
      pieces_(std::move(pieces)),
      piece_ground_(),
      order_(GroundSet(), {}) {
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Piece& a, const Piece& b) { return a.set < b.set; });
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        if (pieces_[i].set == pieces_[i - 1].set) {
            throw validation_error("piece owned by two different elements");
        }
    }
    std::map<int, int> per_owner;
    std::vector<std::string> names;
    names.reserve(pieces_.size());
    for (const Piece& p : pieces_) {
        names.push_back(base_.symbol(p.owner) + prime_suffix(++per_owner[p.owner]));
    }
    piece_ground_ = GroundSet(std::move(names));
    std::vector<mask_t> dominates(pieces_.size());
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        for (std::size_t j = 0; j < pieces_.size(); ++j) {
            if (pieces_[j].set.subset_of(pieces_[i].set)) {
                dominates[i] |= mask_t{1} << j;
            }
        }
    }
    order_ = PartialOrder(piece_ground_, std::move(dominates));
}

PieceStructure pieces(const ChoiceFunction& f, Trust trust) {
    require_path_independent(f, trust, "pieces");
    const ConvexFamily family = to_geometry(f, Trust::trusted);
    std::vector<Piece> out;
    for (int x : elements(support(f))) {
        const mask_t bit = mask_t{1} << x;
        for (mask_t p : family.members()) {
            if ((p & bit) != 0) {
                continue;
            }
            bool maximal = true;
            for (mask_t q : family.members()) {
                if ((q & bit) == 0 && q != p && (p & ~q) == 0) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) {
                out.push_back(Piece{Subset(p), x});
            }
        }
    }
    return PieceStructure(f.ground(), std::move(out));
}

CanonicalRationalization canonical_rationalization(const ChoiceFunction& f, Trust trust) {
    const PieceStructure ps = pieces(f, trust);
    std::vector<int> owners;
    owners.reserve(ps.pieces().size());
    for (const Piece& p : ps.pieces()) {
        owners.push_back(p.owner);
    }
    return CanonicalRationalization{ps.piece_ground(), ps.order(),
                                    SetMap(ps.piece_ground(), f.ground(), std::move(owners))};
}

bool verify_ss_rationalization(const PartialOrder& y_order, const SetMap& psi, const ChoiceFunction& f) {
    if (psi.source() != y_order.ground()) {
        throw validation_error("verify_ss_rationalization: map source does not match the poset ground");
    }
    if (psi.target() != f.ground()) {
        throw validation_error("verify_ss_rationalization: map target does not match the function ground");
    }
    return direct_image(psi, max_choice(y_order)) == f;
}

SetMap rationalization_alpha(const PartialOrder& y_order, const SetMap& psi, const ChoiceFunction& f) {
    if (!verify_ss_rationalization(y_order, psi, f)) {
        throw validation_error("rationalization_alpha: the input is not a rationalization of f");
    }
    const PieceStructure ps = pieces(f, Trust::trusted);
    const int ny = y_order.ground().size();
    std::vector<int> images(static_cast<std::size_t>(ny), -1);
    for (int y = 0; y < ny; ++y) {
        // The complement of the principal filter of y is an ideal; its full
        // image is a convex set avoiding psi(y), so it sits inside a piece.
        mask_t filter = 0;
        for (int z = 0; z < ny; ++z) {
            if (y_order.leq(y, z)) {
                filter |= mask_t{1} << z;
            }
        }
        const Subset ideal = Subset(filter).complement(y_order.ground());
        const Subset convex = full_image(psi, ideal);
        const int owner = psi.apply(y);
        for (int i = 0; i < ps.size(); ++i) {
            if (ps.owner(i) == owner && convex.subset_of(ps.pieces()[static_cast<std::size_t>(i)].set)) {
                images[static_cast<std::size_t>(y)] = i;
                break;
            }
        }
        if (images[static_cast<std::size_t>(y)] < 0) {
            throw validation_error("rationalization_alpha: no piece contains the projected ideal");
        }
    }
    return SetMap(y_order.ground(), ps.piece_ground(), std::move(images));
}

}  // namespace plott
