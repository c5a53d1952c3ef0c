#include <doctest.h>

#include <map>
#include <optional>
#include <set>

#include "plott/functorial.hpp"
#include "plott/geometry.hpp"
#include "plott/lattice.hpp"
#include "util.hpp"

using namespace plott;
using namespace plott::testutil;

namespace {

std::vector<mask_t> masks(const GroundSet& g, const std::vector<std::string>& keys) {
    std::vector<mask_t> out;
    for (const std::string& k : keys) {
        out.push_back(parse_subset_key(g, k).bits());
    }
    return out;
}

// The two disjoint three-element chains projecting onto {a,b,c}.
struct CloneChains {
    GroundSet ground = GroundSet({"a′", "b′", "c′", "a″", "b″", "c″"});
    PartialOrder order = PartialOrder::from_covers(ground, {{0, 1}, {1, 2}, {5, 4}, {4, 3}});
    SetMap projection = SetMap(ground, testutil::ground_of("abc"), {0, 1, 2, 0, 1, 2});
};

}  // namespace

TEST_SUITE_BEGIN("geometry");

TEST_CASE("closure") {
    const GroundSet g = ground_of("abc");
    const ChoiceFunction top = identity_on(g, Subset(g.full_mask()));
    for (mask_t a = 0; a < top.subset_count(); ++a) {
        CHECK(closure(top, Subset(a)) == Subset(a));
    }

    const ChoiceFunction labc = linear_from_word(word(g, "abc"));
    CHECK(closure(labc, sub(g, "b")) == sub(g, "bc"));

    CHECK(closure(four_element_example(), Subset(0)) == Subset(0));
    CHECK_THROWS_AS(closure(ChoiceFunction(ground_of("ab"), {0, 1, 2, 0}), Subset(0)), validation_error);

    // Idempotence and extensivity on random inputs.
    std::mt19937 rng(23);
    const GroundSet g4 = ground_n(4);
    for (int trial = 0; trial < 20; ++trial) {
        const ChoiceFunction f = random_plott(g4, rng);
        for (mask_t a = 0; a < f.subset_count(); ++a) {
            const Subset cl = closure(f, Subset(a), Trust::trusted);
            CHECK(Subset(a).subset_of(cl));
            CHECK(closure(f, cl, Trust::trusted) == cl);
        }
    }
}

TEST_CASE("to_geometry") {
    const GroundSet g = ground_of("abc");
    const SimpleWord w = word(g, "bac");
    const ConvexFamily chain = to_geometry(linear_from_word(w));
    CHECK(chain.members() == masks(g, {"", "c", "a,c", "a,b,c"}));

    const ConvexFamily ex6 = to_geometry(four_element_example());
    CHECK(ex6.members() ==
          masks(ground_of("abcd"), {"", "d", "a,d", "b,d", "c,d", "a,c,d", "b,c,d", "a,b,c,d"}));

    const ConvexFamily zero_family = to_geometry(ChoiceFunction::zero(g));
    CHECK(zero_family.members() == masks(g, {"a,b,c"}));
}

TEST_CASE("extreme points") {
    const GroundSet g = ground_of("abc");
    std::vector<mask_t> all;
    for (mask_t a = 0; a <= g.full_mask(); ++a) {
        all.push_back(a);
    }
    const ConvexFamily power(g, all);
    for (mask_t a = 0; a <= g.full_mask(); ++a) {
        CHECK(extreme_points(power, Subset(a)) == Subset(a));
    }

    const ConvexFamily chain = to_geometry(linear_from_word(word(g, "abc")));
    CHECK(extreme_points(chain, sub(g, "bc")) == sub(g, "b"));

    const ConvexFamily ex6 = to_geometry(four_element_example());
    CHECK(extreme_points(ex6, Subset(ex6.ground().full_mask())) == sub(ex6.ground(), "ab"));
}

TEST_CASE("from_geometry") {
    const GroundSet g = ground_of("abc");
    const SimpleWord w = word(g, "cab");
    CHECK(from_geometry(to_geometry(linear_from_word(w))) == linear_from_word(w));

    std::vector<mask_t> all;
    for (mask_t a = 0; a <= g.full_mask(); ++a) {
        all.push_back(a);
    }
    CHECK(from_geometry(ConvexFamily(g, all)) == identity_on(g, Subset(g.full_mask())));

    CHECK_THROWS_AS(from_geometry(ConvexFamily(ground_of("ab"), {0, 0b11})), validation_error);
}

TEST_CASE("geometry round trips on every function for n = 3") {
    const GroundSet g = ground_n(3);
    std::set<std::vector<mask_t>> families;
    for (const ChoiceFunction& f : enumerate_plott(g, EnumerationStrategy::brute_force)) {
        const ConvexFamily family = to_geometry(f, Trust::trusted);
        CHECK(is_convex_geometry(family));
        CHECK(from_geometry(family) == f);
        families.insert(family.members());
        CHECK(to_geometry(from_geometry(family), Trust::trusted) == family);
    }
    CHECK(families.size() == 35);
}

TEST_CASE("is_convex_geometry") {
    const GroundSet g2 = ground_of("ab");
    CHECK_FALSE(is_convex_geometry(ConvexFamily(g2, {0, 0b11})));
    CHECK(is_convex_geometry(ConvexFamily(g2, {0, 0b01, 0b11})));

    const GroundSet g = ground_of("abc");
    std::vector<mask_t> all;
    for (mask_t a = 0; a <= g.full_mask(); ++a) {
        all.push_back(a);
    }
    CHECK(is_convex_geometry(ConvexFamily(g, all)));

    // Chains are geometries exactly when their steps delete single elements.
    CHECK(is_convex_geometry(ConvexFamily(g, masks(g, {"a,b,c", "b,c", "b"}))));
    CHECK_FALSE(is_convex_geometry(ConvexFamily(g, masks(g, {"a,b,c", "b"}))));
}

TEST_CASE("mkm agrees with the single-step chain criterion") {
    // On every intersection-closed family over three elements, MKM holds iff
    // each non-full member has a one-element-larger member.
    const GroundSet g = ground_n(3);
    const mask_t full = g.full_mask();
    for (mask_t pick = 0; pick < (mask_t{1} << full); ++pick) {
        std::vector<mask_t> members{full};
        for (int m = 0; m < static_cast<int>(full); ++m) {
            if ((pick >> m) & 1u) {
                members.push_back(static_cast<mask_t>(m));
            }
        }
        std::vector<bool> present(std::size_t{1} << 3, false);
        for (mask_t m : members) {
            present[m] = true;
        }
        bool closed = true;
        for (mask_t a : members) {
            for (mask_t b : members) {
                closed = closed && present[a & b];
            }
        }
        if (!closed) {
            continue;
        }
        bool stepwise = true;
        for (mask_t m : members) {
            if (m == full) {
                continue;
            }
            bool up = false;
            for (int x = 0; x < 3; ++x) {
                up = up || (((m >> x) & 1u) == 0 && present[m | (mask_t{1} << x)]);
            }
            stepwise = stepwise && up;
        }
        CHECK(is_convex_geometry(ConvexFamily(g, members)) == stepwise);
    }
}

TEST_CASE("maximal chains") {
    const GroundSet g = ground_of("abc");
    CHECK(maximal_chains(to_geometry(linear_from_word(word(g, "bca")))).size() == 1);
    CHECK(maximal_chains(to_geometry(identity_on(g, Subset(g.full_mask())))).size() == 6);

    const ConvexFamily family = to_geometry(two_order_join());
    const auto chains = maximal_chains(family);
    REQUIRE(chains.size() == 4);
    std::set<std::vector<int>> words;
    for (const auto& chain : chains) {
        std::vector<int> deleted;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            CHECK((chain[i] - chain[i + 1]).count() == 1);
            deleted.push_back(elements(chain[i] - chain[i + 1]).front());
        }
        words.insert(deleted);
    }
    std::set<std::vector<int>> socle_words;
    const WordSet soc = socle(two_order_join());
    for (const SimpleWord& w : soc.words()) {
        socle_words.insert(w.letters());
    }
    CHECK(words == socle_words);
}

TEST_CASE("pieces of the two-order join") {
    const PieceStructure ps = pieces(two_order_join());
    const GroundSet g = ground_of("abc");
    REQUIRE(ps.size() == 4);
    CHECK(ps.pieces()[0] == Piece{sub(g, "a"), 1});
    CHECK(ps.pieces()[1] == Piece{sub(g, "ab"), 2});
    CHECK(ps.pieces()[2] == Piece{sub(g, "c"), 1});
    CHECK(ps.pieces()[3] == Piece{sub(g, "bc"), 0});
    CHECK(ps.piece_ground().symbols() == std::vector<std::string>{"b′", "c′", "b″", "a′"});
    const auto covers = ps.order().covers();
    CHECK(covers == std::vector<std::pair<int, int>>{{1, 0}, {3, 2}});  // c′>b′, a′>b″
}

TEST_CASE("pieces of the four-element example") {
    const PieceStructure ps = pieces(four_element_example());
    const GroundSet g = ground_of("abcd");
    REQUIRE(ps.size() == 5);
    CHECK(ps.piece_ground().symbols() == std::vector<std::string>{"d′", "c′", "c″", "b′", "a′"});
    CHECK(ps.pieces()[0].set == Subset(0));
    CHECK(ps.pieces()[1].set == sub(g, "ad"));
    CHECK(ps.pieces()[2].set == sub(g, "bd"));
    CHECK(ps.pieces()[3].set == sub(g, "acd"));
    CHECK(ps.pieces()[4].set == sub(g, "bcd"));
    // a′ > c″, b′ > c′, c′ > d′, c″ > d′.
    const auto covers = ps.order().covers();
    const std::set<std::pair<std::string, std::string>> named = [&] {
        std::set<std::pair<std::string, std::string>> out;
        for (auto [hi, lo] : covers) {
            out.insert({ps.piece_ground().symbol(hi), ps.piece_ground().symbol(lo)});
        }
        return out;
    }();
    CHECK(named == std::set<std::pair<std::string, std::string>>{
                       {"a′", "c″"}, {"b′", "c′"}, {"c′", "d′"}, {"c″", "d′"}});
}

TEST_CASE("order maximization yields one piece per element") {
    std::mt19937 rng(29);
    const GroundSet g = ground_n(4);
    for (int trial = 0; trial < 30; ++trial) {
        // A random partial order from random covers; ill-formed draws are skipped.
        std::vector<std::pair<int, int>> covers;
        std::uniform_int_distribution<int> pick(0, 3);
        for (int i = 0; i < 3; ++i) {
            covers.emplace_back(pick(rng), pick(rng));
        }
        std::optional<PartialOrder> r;
        try {
            r = PartialOrder::from_covers(g, covers);
        } catch (const validation_error&) {
            continue;
        }
        const PieceStructure ps = pieces(max_choice(*r));
        REQUIRE(ps.size() == g.size());
        std::map<int, int> piece_of;
        for (int i = 0; i < ps.size(); ++i) {
            CHECK(piece_of.emplace(ps.owner(i), i).second);
        }
        for (int x = 0; x < g.size(); ++x) {
            for (int y = 0; y < g.size(); ++y) {
                CHECK(r->leq(x, y) == ps.order().leq(piece_of[x], piece_of[y]));
            }
        }
    }
}

TEST_CASE("piece structure properties for every function on n = 3") {
    const GroundSet g = ground_n(3);
    for (const ChoiceFunction& f : enumerate_plott(g, EnumerationStrategy::brute_force)) {
        const ConvexFamily family = to_geometry(f, Trust::trusted);
        const PieceStructure ps = pieces(f, Trust::trusted);
        std::set<mask_t> piece_masks;
        for (const Piece& p : ps.pieces()) {
            // Adjoining the owner to a piece lands back in the family.
            CHECK(family.contains(p.set.bits() | (mask_t{1} << p.owner)));
            CHECK_FALSE(p.set.contains(p.owner));
            CHECK(piece_masks.insert(p.set.bits()).second);
        }
        // Every convex set is the intersection of the pieces above it.
        for (mask_t member : family.members()) {
            mask_t acc = g.full_mask();
            for (const Piece& p : ps.pieces()) {
                if ((member & ~p.set.bits()) == 0) {
                    acc &= p.set.bits();
                }
            }
            CHECK(acc == member);
        }
        // No piece is an intersection of strictly larger convex sets.
        for (const Piece& p : ps.pieces()) {
            mask_t acc = g.full_mask();
            for (mask_t member : family.members()) {
                if (member != p.set.bits() && (p.set.bits() & ~member) == 0) {
                    acc &= member;
                }
            }
            CHECK(acc != p.set.bits());
        }
    }
}

TEST_CASE("verify_ss_rationalization on the clone chains") {
    const CloneChains cc;
    CHECK(verify_ss_rationalization(cc.order, cc.projection, two_order_join()));

    // The smaller two-pair poset also rationalizes the same function.
    const GroundSet y({"a′", "b′", "b″", "c′"});
    const PartialOrder small = PartialOrder::from_covers(y, {{0, 1}, {3, 2}});
    const SetMap psi(y, ground_of("abc"), {0, 1, 1, 2});
    CHECK(verify_ss_rationalization(small, psi, two_order_join()));

    // A wrong projection is rejected.
    const SetMap wrong(y, ground_of("abc"), {0, 1, 1, 1});
    CHECK_FALSE(verify_ss_rationalization(small, wrong, two_order_join()));
}

TEST_CASE("canonical rationalization for every function on n = 3") {
    const GroundSet g = ground_n(3);
    for (const ChoiceFunction& f : enumerate_plott(g, EnumerationStrategy::brute_force)) {
        const CanonicalRationalization cr = canonical_rationalization(f, Trust::trusted);
        CHECK(verify_ss_rationalization(cr.order, cr.to_owner, f));
    }
}

TEST_CASE("canonical rationalization sampled at n = 4") {
    std::mt19937 rng(31);
    const GroundSet g = ground_n(4);
    for (int trial = 0; trial < 25; ++trial) {
        const ChoiceFunction f = random_plott(g, rng);
        const CanonicalRationalization cr = canonical_rationalization(f, Trust::trusted);
        CHECK(verify_ss_rationalization(cr.order, cr.to_owner, f));
    }
}

TEST_CASE("alpha factors a rationalization through the pieces") {
    const ChoiceFunction f = two_order_join();
    const CanonicalRationalization cr = canonical_rationalization(f);

    // A triple that fails verification is rejected.
    const SetMap wrong(cr.piece_ground, f.ground(), {0, 0, 0, 0});
    CHECK_THROWS_AS(rationalization_alpha(cr.order, wrong, f), validation_error);

    // Fed to itself, the comparison map is the identity.
    const SetMap self_alpha = rationalization_alpha(cr.order, cr.to_owner, f);
    CHECK(self_alpha == SetMap::identity(cr.piece_ground));

    const CloneChains cc;
    const SetMap alpha = rationalization_alpha(cc.order, cc.projection, f);
    CHECK(compose(cr.to_owner, alpha) == cc.projection);
    // α pushes the rationalizing function onto a dominant of the piece function.
    const ChoiceFunction pushed = direct_image(alpha, max_choice(cc.order));
    CHECK(is_leq(max_choice(cr.order), pushed));
    CHECK(cc.ground.size() >= cr.piece_ground.size());
}

TEST_CASE("alpha on random rationalizations") {
    // Any pushed-forward order maximization rationalizes its own image, and
    // the comparison map always lands on the canonical pieces.
    std::mt19937 rng(211);
    const GroundSet x = ground_of("abc");
    std::uniform_int_distribution<int> ysize(1, 4);
    for (int trial = 0; trial < 60; ++trial) {
        const GroundSet y = ground_n(ysize(rng));
        std::vector<std::pair<int, int>> covers;
        std::uniform_int_distribution<int> pick(0, y.size() - 1);
        for (int i = 0; i + 1 < y.size(); ++i) {
            covers.emplace_back(pick(rng), pick(rng));
        }
        std::optional<PartialOrder> r;
        try {
            r = PartialOrder::from_covers(y, covers);
        } catch (const validation_error&) {
            continue;
        }
        const SetMap psi = random_map(y, x, rng);
        const ChoiceFunction g = max_choice(*r);
        const ChoiceFunction f = direct_image(psi, g);
        REQUIRE(verify_ss_rationalization(*r, psi, f));

        const CanonicalRationalization cr = canonical_rationalization(f, Trust::trusted);
        const SetMap alpha = rationalization_alpha(*r, psi, f);
        CHECK(compose(cr.to_owner, alpha) == psi);
        CHECK(is_leq(max_choice(cr.order), direct_image(alpha, g)));
        CHECK(y.size() >= cr.piece_ground.size());
    }
}

TEST_CASE("alpha on the weaker four-element poset") {
    const ChoiceFunction f = four_element_example();
    const CanonicalRationalization cr = canonical_rationalization(f);
    // Same five splinters, but c″ no longer dominates d′; a′ covers d′ directly.
    const PartialOrder weaker = PartialOrder::from_covers(
        cr.piece_ground, {{3, 1}, {1, 0}, {4, 2}, {4, 0}});  // b′>c′, c′>d′, a′>c″, a′>d′
    CHECK(verify_ss_rationalization(weaker, cr.to_owner, f));

    const SetMap alpha = rationalization_alpha(weaker, cr.to_owner, f);
    CHECK(alpha == SetMap::identity(cr.piece_ground));

    const ChoiceFunction tilde = max_choice(cr.order);
    const ChoiceFunction pushed = direct_image(alpha, max_choice(weaker));
    CHECK(is_leq(tilde, pushed));
    // The domination is strict at {d′, c″}.
    const Subset probe = Subset((mask_t{1} << 0) | (mask_t{1} << 2));
    CHECK(tilde.evaluate(probe) == Subset(mask_t{1} << 2));
    CHECK(pushed.evaluate(probe) == probe);
    CHECK(cr.piece_ground.size() >= pieces(f).size());
}

TEST_SUITE_END();
