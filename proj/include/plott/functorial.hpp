#pragma once

#include "plott/core.hpp"
#include "plott/setmap.hpp"

namespace plott {

/// Push-forward of a choice function: B ↦ φ(f(φ⁻¹B)). Path independence is
/// preserved.
ChoiceFunction direct_image(const SetMap& phi, const ChoiceFunction& f);

/// Letterwise image followed by first-occurrence simplification.
SimpleWord word_image(const SetMap& phi, const SimpleWord& w);

/// { y : φ⁻¹(y) ⊆ A }; targets with empty fiber are always included.
Subset full_image(const SetMap& phi, Subset a);

/// Extension of f along an injective embedding: B ↦ f(B ∩ X).
ChoiceFunction trivial_extension(const ChoiceFunction& f, const GroundSet& target, const SetMap& embed);

/// The componentwise function on the concatenated (disjoint) ground sets.
ChoiceFunction direct_sum(const ChoiceFunction& f, const ChoiceFunction& g);

/// The greatest path-independent function on the source whose direct image
/// lies below g. Computed by a pruned word search: a source word belongs to
/// the result's basement exactly when its word image lies in the basement of
/// g, and prefixes map to prefixes.
ChoiceFunction inverse_image(const SetMap& phi, const ChoiceFunction& g);

/// The cartesian ground with its two projections. Symbols read "(x,y)".
struct ProductBase {
    GroundSet ground;
    SetMap onto_first;
    SetMap onto_second;
};

ProductBase product_base(const GroundSet& x, const GroundSet& y);

/// Meet of the two pulled-back functions on the product ground.
ChoiceFunction direct_product(const ChoiceFunction& f, const ChoiceFunction& g, Trust trust = Trust::verify);

/// Transformation through a span Z with legs phi: Z→X, psi: Z→Y:
/// f ↦ ψ₊(h ∧ φ*(f)).
ChoiceFunction apply_correspondence(const ChoiceFunction& h, const SetMap& phi, const SetMap& psi,
                                    const ChoiceFunction& f, Trust trust = Trust::verify);

}  // namespace plott
