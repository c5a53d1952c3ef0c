#pragma once

#include "plott/choice.hpp"
#include "plott/parallel.hpp"
#include "plott/word.hpp"

namespace plott {

/// Whether an operation re-checks a path-independence precondition (an
/// O(4^n) scan) or takes the caller's word for it.
enum class Trust { verify, trusted };

/// Outcome of a pointwise comparison of two choice functions. less_equal and
/// greater_equal are strict; equality is reported separately.
enum class Comparison { equal, less_equal, greater_equal, incomparable };

/// True iff f(A ∪ B) = f(f(A) ∪ B) for every ordered pair of subsets.
bool is_path_independent(const ChoiceFunction& f, Exec exec = Exec::parallel);

/// Throws validation_error when trust requests a check and f fails it.
void require_path_independent(const ChoiceFunction& f, Trust trust, const char* where);

/// { x : f({x}) = {x} }
Subset support(const ChoiceFunction& f);

/// The linear choice function of a simple word: the first letter of w
/// present in the argument, or the empty set when none is.
ChoiceFunction linear_from_word(const SimpleWord& w);

/// Inverse of linear_from_word. Throws not_linear_error when some value has
/// two or more elements, validation_error when f is not path independent.
SimpleWord word_from_linear(const ChoiceFunction& f, Trust trust = Trust::verify);

/// f ≤ g pointwise.
bool is_leq(const ChoiceFunction& f, const ChoiceFunction& g);

Comparison compare(const ChoiceFunction& f, const ChoiceFunction& g);

/// True iff prefix is an initial segment of word (both over the same ground).
bool word_prefix_order(const SimpleWord& prefix, const SimpleWord& word);

}  // namespace plott
