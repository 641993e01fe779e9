#include <doctest.h>

#include "ufx/error.hpp"
#include "ufx/paper_suite.hpp"
#include "ufx/random.hpp"
#include "ufx/symbolic.hpp"

using namespace ufx;

namespace {

EPSet random_epset(Rng& rng) {
    const std::uint64_t threshold = rng.below(13), period = rng.between(1, 8);
    std::vector<bool> prefix(threshold), residues(period);
    for (std::uint64_t i = 0; i < threshold; ++i)
        prefix[i] = rng.coin();
    for (std::uint64_t i = 0; i < period; ++i)
        residues[i] = rng.coin();
    return EPSet(threshold, prefix, period, residues);
}

// membership straight from the representation, without normalization
std::vector<bool> brute(std::uint64_t threshold, const std::vector<bool>& prefix, std::uint64_t period,
                        const std::vector<bool>& residues, std::uint64_t limit) {
    std::vector<bool> out(limit);
    for (std::uint64_t x = 0; x < limit; ++x)
        out[x] = x < threshold ? prefix[x] : residues[x % period];
    return out;
}

std::vector<bool> bits(const EPSet& s, std::uint64_t limit) {
    std::vector<bool> out(limit);
    for (std::uint64_t x = 0; x < limit; ++x)
        out[x] = s.contains(x);
    return out;
}

const EPSet evens = EPSet::residue_class(2, 0);
const EPSet odds = EPSet::residue_class(2, 1);

} // namespace

TEST_CASE("EPSet literals") {
    CHECK(parse_epset("ep(0; ; 2; 0)") == evens);
    CHECK(evens.to_string() == "ep(0; ; 2; 0)");
    CHECK(parse_epset("ep(3; 1; 1; )") == EPSet::finite({1}));
    CHECK(parse_epset("ep(5; 0,2,4; 2; 0)") == evens);  // normalized to the minimal threshold
    CHECK(parse_epset("ep(0; ; 4; 0,2)") == evens);     // and minimal period
    CHECK(EPSet::finite({1, 5}).to_string() == "ep(6; 1,5; 1; )");
    CHECK(EPSet::all().to_string() == "ep(0; ; 1; 0)");
    CHECK_THROWS_AS(parse_epset("ep(0; ; 2"), ParseError);
    CHECK_THROWS_AS(parse_epset("ep(2; 3; 1; )"), PreconditionError);
    CHECK_THROWS_AS(parse_epset("ep(0; ; 0; )"), PreconditionError);
    CHECK_THROWS_AS(EPSet(2, {true}, 1, {false}), PreconditionError);

    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        const EPSet s = random_epset(rng);
        CHECK(parse_epset(s.to_string()) == s);
    }
}

TEST_CASE("EPSet canonical form is unique: equal sets have equal representations") {
    Rng rng(6);
    for (int i = 0; i < 300; ++i) {
        const std::uint64_t t = rng.below(10), p = rng.between(1, 6), k = rng.between(1, 4);
        std::vector<bool> prefix(t), res(p);
        for (auto&& b : prefix)
            b = rng.coin();
        for (auto&& b : res)
            b = rng.coin();
        // the same set with a longer threshold and a multiplied period
        std::vector<bool> prefix2 = brute(t, prefix, p, res, t + 3);
        std::vector<bool> res2(p * k);
        for (std::uint64_t r = 0; r < p * k; ++r)
            res2[r] = res[r % p];
        const EPSet a(t, prefix, p, res);
        const EPSet b(t + 3, prefix2, p * k, res2);
        CHECK(a == b);
        CHECK(bits(a, 200) == brute(t, prefix, p, res, 200));
    }
}

TEST_CASE("EPSet algebra agrees with enumeration on [0, 10^4)") {
    constexpr std::uint64_t L = 10000;
    Rng rng(2);
    for (int i = 0; i < 120; ++i) {
        const EPSet a = random_epset(rng), b = random_epset(rng);
        const auto ab = bits(a, L), bb = bits(b, L);
        const auto u = bits(set_union(a, b), L), n = bits(set_intersect(a, b), L), c = bits(set_complement(a), L),
                   m = bits(set_minus(a, b), L);
        const std::uint64_t cut = rng.below(40);
        const auto gt = bits(epset_cut(a, CutBound::Greater, cut), L), lt = bits(epset_cut(a, CutBound::Less, cut), L);
        bool ok = true, finite_ok = true;
        for (std::uint64_t x = 0; x < L; ++x) {
            ok = ok && u[x] == (ab[x] || bb[x]) && n[x] == (ab[x] && bb[x]) && c[x] == !ab[x] &&
                 m[x] == (ab[x] && !bb[x]) && gt[x] == (ab[x] && x > cut) && lt[x] == (ab[x] && x < cut);
        }
        CHECK(ok);
        // a set is infinite iff it has a member in its last full period window
        bool late = false;
        for (std::uint64_t x = L - 840; x < L; ++x)
            late = late || ab[x];
        finite_ok = late == a.is_infinite();
        CHECK(finite_ok);
        CHECK(is_subset(set_intersect(a, b), a));
        CHECK(set_union(a, b) == epset_algebra(SetOp::Union, {a, b}));
    }
    CHECK_THROWS_AS(epset_algebra(SetOp::Complement, {evens, odds}), PreconditionError);
    CHECK_THROWS_AS(epset_algebra(SetOp::Minus, {evens}), PreconditionError);
}

TEST_CASE("measure examples") {
    const auto d = SymbolicUF::frechet_on(evens);
    CHECK(measure(d, set_minus(EPSet::all(), EPSet::finite({0, 2, 4}))) == Kleene::True);
    CHECK(measure(d, EPSet::residue_class(4, 0)) == Kleene::Unknown);
    CHECK(measure(d, odds) == Kleene::False);
    CHECK(measure(SymbolicUF::principal(4), evens) == Kleene::True);
    CHECK(measure(SymbolicUF::principal(3), evens) == Kleene::False);
    CHECK_THROWS_AS(SymbolicUF::frechet_on(EPSet::finite({1, 2})), PreconditionError);
    CHECK(parse_symbolic_uf("frechet:ep(0; ; 2; 0)") == d);
    CHECK(parse_symbolic_uf(" principal:12 ") == SymbolicUF::principal(12));
    CHECK(d.to_string() == "frechet:ep(0; ; 2; 0)");
    CHECK_THROWS_AS(parse_symbolic_uf("nonprincipal"), ParseError);
}

TEST_CASE("measure is monotone and decisive on the concentration algebra") {
    Rng rng(3);
    int unknown = 0;
    for (int i = 0; i < 400; ++i) {
        EPSet a = random_epset(rng);
        if (a.is_finite())
            a = set_union(a, EPSet::residue_class(3, 1));
        const auto d = SymbolicUF::frechet_on(a);
        const EPSet s = random_epset(rng), t = set_union(s, random_epset(rng));
        const Kleene ms = measure(d, s), mt = measure(d, t);
        if (ms == Kleene::True)
            CHECK(mt == Kleene::True);
        if (mt == Kleene::False)
            CHECK(ms == Kleene::False);
        const bool both_infinite = set_intersect(a, s).is_infinite() && set_minus(a, s).is_infinite();
        CHECK((ms == Kleene::Unknown) == both_infinite);
        CHECK(measure(d, set_complement(s)) == kleene_not(ms));
        unknown += ms == Kleene::Unknown;
    }
    CHECK(unknown > 20);
}

TEST_CASE("Kleene connectives") {
    CHECK(kleene_and(Kleene::True, Kleene::Unknown) == Kleene::Unknown);
    CHECK(kleene_and(Kleene::False, Kleene::Unknown) == Kleene::False);
    CHECK(kleene_or(Kleene::True, Kleene::Unknown) == Kleene::True);
    CHECK(kleene_or(Kleene::False, Kleene::Unknown) == Kleene::Unknown);
    CHECK(to_string(Kleene::Unknown) == "Unknown");
}

TEST_CASE("eval_two_level examples") {
    using C = ParamFamily::Constraint;
    const auto d1 = SymbolicUF::frechet_on(evens), d2 = SymbolicUF::frechet_on(odds);
    CHECK(eval_two_level(d1, d2, {odds, C::Greater}, evens) == Kleene::True);
    CHECK(eval_two_level(d1, d2, {evens, C::Less}, evens) == Kleene::False);
    // D1 principal: the verdict is the inner decision at that point
    for (std::uint64_t p : {0u, 5u, 6u}) {
        const Kleene got = eval_two_level(SymbolicUF::principal(p), d2, {odds, C::Greater}, EPSet::all());
        CHECK(got == measure(d2, ParamFamily{odds, C::Greater}.at(p)));
    }
    // a principal D2 at 7 sees {x in odds : x > t} exactly for t < 7
    CHECK(eval_two_level(SymbolicUF::principal(3), SymbolicUF::principal(7), {odds, C::Greater}, EPSet::all()) ==
          Kleene::True);
    CHECK(eval_two_level(SymbolicUF::principal(9), SymbolicUF::principal(7), {odds, C::Greater}, EPSet::all()) ==
          Kleene::False);
    // inner verdict depends on which member of D2's class is meant
    CHECK(eval_two_level(d1, SymbolicUF::frechet_on(EPSet::all()), {evens, C::None}, evens) == Kleene::Unknown);
}

TEST_CASE("inner_decision regions agree with measuring fam(t) pointwise") {
    using C = ParamFamily::Constraint;
    Rng rng(10);
    for (int i = 0; i < 150; ++i) {
        const EPSet base = random_epset(rng);
        const C con = static_cast<C>(rng.below(3));
        EPSet a = random_epset(rng);
        if (a.is_finite())
            a = EPSet::residue_class(2, rng.below(2));
        const SymbolicUF d = rng.coin() ? SymbolicUF::principal(rng.below(30)) : SymbolicUF::frechet_on(a);
        const ParamFamily fam{base, con};
        const InnerDecision r = inner_decision(d, fam);
        for (std::uint64_t t = 0; t < 60; ++t) {
            const Kleene k = measure(d, fam.at(t));
            CHECK(r.true_region.contains(t) == (k == Kleene::True));
            CHECK(r.unknown_region.contains(t) == (k == Kleene::Unknown));
            CHECK(r.false_region.contains(t) == (k == Kleene::False));
        }
    }
}

TEST_CASE("pair image membership") {
    const auto d1 = SymbolicUF::frechet_on(evens), d2 = SymbolicUF::frechet_on(odds);
    CHECK(pair_image_membership(evens, odds, PairOrder::FirstLess, d1, d2) == Kleene::True);
    CHECK(pair_image_membership(evens, odds, PairOrder::SecondLess, d1, d2) == Kleene::False);
    CHECK(pair_image_membership(evens, odds, PairOrder::FirstLess, SymbolicUF::principal(2),
                                SymbolicUF::principal(7)) == Kleene::True);
    CHECK_THROWS_AS(pair_image_membership(evens, EPSet::all(), PairOrder::FirstLess, d1, d2), PreconditionError);
    const PairingCode first{"first", [](std::uint64_t a, std::uint64_t) { return a; }};
    CHECK_THROWS_AS(pair_image_membership(evens, odds, PairOrder::FirstLess, d1, d2, first), PreconditionError);
}

TEST_CASE("principal pairs reduce to a single code lookup") {
    Rng rng(17);
    const PairingCode code = PairingCode::cantor_unordered();
    for (int i = 0; i < 20; ++i) {
        const EPSet a1 = random_partition(rng), a2 = set_complement(a1);
        for (PairOrder order : {PairOrder::FirstLess, PairOrder::SecondLess})
            for (std::uint64_t p = 0; p < 20; ++p)
                for (std::uint64_t q = 0; q < 20; ++q) {
                    // code(p,q) is in B iff {p,q} = {b1,b2} with b1 in A1, b2 in A2 in the right order
                    auto ordered = [&](std::uint64_t b1, std::uint64_t b2) {
                        return a1.contains(b1) && a2.contains(b2) && (order == PairOrder::FirstLess ? b1 < b2 : b2 < b1);
                    };
                    const bool in_b = ordered(p, q) || ordered(q, p);
                    CHECK(pair_image_membership(a1, a2, order, SymbolicUF::principal(p), SymbolicUF::principal(q), code) ==
                          (in_b ? Kleene::True : Kleene::False));
                }
    }
}

TEST_CASE("pair_image_cases match decoding B by brute force") {
    Rng rng(23);
    constexpr std::uint64_t R = 96;
    for (int i = 0; i < 30; ++i) {
        const EPSet a1 = random_partition(rng), a2 = set_complement(a1);
        for (PairOrder order : {PairOrder::FirstLess, PairOrder::SecondLess}) {
            const auto cases = pair_image_cases(a1, a2, order);
            for (std::uint64_t t = 0; t < R; ++t)
                for (std::uint64_t x = 0; x < R; ++x) {
                    const bool direct =
                        (a1.contains(t) && a2.contains(x) && (order == PairOrder::FirstLess ? t < x : x < t)) ||
                        (a2.contains(t) && a1.contains(x) && (order == PairOrder::FirstLess ? x < t : t < x));
                    bool predicted = false;
                    for (const auto& c : cases)
                        predicted = predicted || (c.outer.contains(t) && c.inner.at(t).contains(x));
                    CHECK(direct == predicted);
                }
        }
    }
}

TEST_CASE("pair-image verdicts are symmetric under swapping the ultrafilters") {
    Rng rng(41);
    for (int i = 0; i < 40; ++i) {
        const EPSet a1 = random_partition(rng), a2 = set_complement(a1);
        const auto d1 = SymbolicUF::frechet_on(a1), d2 = SymbolicUF::frechet_on(a2);
        for (PairOrder o : {PairOrder::FirstLess, PairOrder::SecondLess}) {
            const Kleene k = pair_image_membership(a1, a2, o, d1, d2);
            CHECK(k != Kleene::Unknown);
            CHECK(pair_image_membership(a1, a2, o, d2, d1) == kleene_not(k));
        }
        CHECK(pair_image_membership(a1, a2, PairOrder::FirstLess, d1, d2) ==
              pair_image_membership(a1, a2, PairOrder::SecondLess, d2, d1));
    }
}
