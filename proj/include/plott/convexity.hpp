#pragma once

#include "plott/family.hpp"
#include "plott/wordset.hpp"

namespace plott {

/// All interleavings of two words with disjoint supports, preserving both
/// internal orders.
WordSet shuffle(const SimpleWord& w, const SimpleWord& v);

/// Shuffles of the two words taken as disjoint tagged copies, simplified by
/// keeping the first occurrence of every letter.
WordSet melange(const SimpleWord& w, const SimpleWord& v);

/// The n-ary melange, computed directly over tagged copies of all words.
WordSet melange_family(const std::vector<SimpleWord>& words);

/// All prefixes of all melanges of the two words; the segment between them.
WordSet segment(const SimpleWord& w, const SimpleWord& v);

/// True iff the set contains the segment between every pair of its members;
/// equivalently, iff it is its own convex hull.
bool is_convex(const WordSet& c);

/// The smallest convex superset: the basement of the join of the linear
/// functions of the members.
WordSet convex_hull(const WordSet& c);

/// The complements of the supports of the members of a convex word set.
ConvexFamily geometry_from_convex_set(const WordSet& c);

}  // namespace plott
