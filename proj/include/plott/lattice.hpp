#pragma once

#include "plott/core.hpp"
#include "plott/order.hpp"
#include "plott/wordset.hpp"

namespace plott {

/// Pointwise union; the least upper bound of two path-independent functions.
ChoiceFunction join(const ChoiceFunction& f, const ChoiceFunction& g, Trust trust = Trust::verify);

/// All simple words w with l_w ≤ f, in canonical order. Defined for any
/// choice function; found by depth-first prefix extension, which is sound
/// because the collection is prefix-closed.
WordSet basement(const ChoiceFunction& f);

/// The prefix-order-maximal words of the basement.
WordSet socle(const ChoiceFunction& f);

/// Pointwise union of the linear functions of all words in the set.
ChoiceFunction join_of_words(const WordSet& words);

/// The greatest path-independent function below f.
ChoiceFunction plottize(const ChoiceFunction& f);

/// The greatest path-independent lower bound of two path-independent
/// functions. Computed as the join of the basement of the pointwise
/// intersection, which is exactly the intersection of the two basements.
ChoiceFunction meet(const ChoiceFunction& f, const ChoiceFunction& g, Trust trust = Trust::verify);

/// Maximal elements of the argument under a partial order.
ChoiceFunction max_choice(const PartialOrder& order);

/// The k best elements of the argument under a complete word order.
ChoiceFunction top_k_choice(const SimpleWord& order, int k);

/// A ↦ A ∩ S.
ChoiceFunction identity_on(const GroundSet& ground, Subset s);

enum class EnumerationStrategy {
    /// Filter every contraction table by path independence. Ground size ≤ 3.
    brute_force,
    /// Closure of the chain geometries under family join. Ground size ≤ 5.
    geometry_search,
};

/// Every path-independent function on the ground set exactly once, sorted by
/// ascending table (lexicographic). Both strategies return identical lists.
std::vector<ChoiceFunction> enumerate_plott(const GroundSet& ground, EnumerationStrategy strategy,
                                            Exec exec = Exec::parallel);

}  // namespace plott
