#pragma once

#include "plott/core.hpp"
#include "plott/family.hpp"
#include "plott/order.hpp"
#include "plott/setmap.hpp"

namespace plott {

/// { x : f(A ∪ {x}) = f(A) }; always contains A, idempotent for
/// path-independent f.
Subset closure(const ChoiceFunction& f, Subset a, Trust trust = Trust::verify);

/// The family of closure-fixed subsets of a path-independent function.
ConvexFamily to_geometry(const ChoiceFunction& f, Trust trust = Trust::verify, Exec exec = Exec::parallel);

/// { a ∈ A : a outside the closure of A \ {a} }.
Subset extreme_points(const ConvexFamily& family, Subset a);

/// The extreme-point choice function of a convex geometry. Throws
/// validation_error when the family fails the Minkowski–Krein–Mil'man check.
ChoiceFunction from_geometry(const ConvexFamily& family, Exec exec = Exec::parallel);

/// True iff the closure of every subset equals the closure of its extreme
/// points (the family is intersection-closed and contains X by construction).
bool is_convex_geometry(const ConvexFamily& family, Exec exec = Exec::parallel);

/// All maximal descending chains of a convex geometry, from the full set to
/// the minimal member. Consecutive members differ by exactly one element;
/// the deleted elements read off a socle word.
std::vector<std::vector<Subset>> maximal_chains(const ConvexFamily& family);

/// A maximal convex set not containing its owner.
struct Piece {
    Subset set;
    int owner;

    bool operator==(const Piece&) const = default;
};

/// All pieces of a path-independent function, in ascending bitmask order,
/// with a freshly named ground set (owner symbol plus prime marks) and the
/// inclusion order on it.
class PieceStructure {
public:
    PieceStructure(GroundSet base, std::vector<Piece> pieces);

    const GroundSet& base() const { return base_; }
    int size() const { return static_cast<int>(pieces_.size()); }
    const std::vector<Piece>& pieces() const { return pieces_; }
    const GroundSet& piece_ground() const { return piece_ground_; }
    const PartialOrder& order() const { return order_; }
    int owner(int piece_index) const { return pieces_[static_cast<std::size_t>(piece_index)].owner; }

private:
    GroundSet base_;
    std::vector<Piece> pieces_;
    GroundSet piece_ground_;
    PartialOrder order_;
};

PieceStructure pieces(const ChoiceFunction& f, Trust trust = Trust::verify);

struct CanonicalRationalization {
    GroundSet piece_ground;
    PartialOrder order;
    SetMap to_owner;
};

/// The piece poset with the owner projection; maximization over the order
/// pushes forward to f.
CanonicalRationalization canonical_rationalization(const ChoiceFunction& f, Trust trust = Trust::verify);

/// True iff the direct image under psi of the maximization of y_order is
/// exactly f.
bool verify_ss_rationalization(const PartialOrder& y_order, const SetMap& psi, const ChoiceFunction& f);

/// The comparison map from a verified rationalization onto the canonical
/// piece poset: psi factors through it, and its direct image dominates the
/// canonical piece choice function.
SetMap rationalization_alpha(const PartialOrder& y_order, const SetMap& psi, const ChoiceFunction& f);

}  // namespace plott
