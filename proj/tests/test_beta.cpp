#include <doctest.h>

#include "oracles.hpp"
#include "ufx/beta.hpp"
#include "ufx/error.hpp"
#include "ufx/model_io.hpp"
#include "ufx/random.hpp"

using namespace ufx;

TEST_CASE("finite ultrafilters are exactly the principal ones") {
    CHECK(enumerate_ultrafilters(1).size() == 1);
    CHECK(enumerate_ultrafilters(3).size() == 3);
    CHECK_THROWS_AS(enumerate_ultrafilters(0), PreconditionError);
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto families = oracle::all_ultrafilters(n);  // all 2^(2^n) families searched
        const auto ufs = enumerate_ultrafilters(n);
        REQUIRE(families.size() == ufs.size());
        for (std::size_t i = 0; i < n; ++i)
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
                CHECK(ufs[i].contains(subset_from_mask(n, s)) == (families[i].count(s) > 0));
    }
    CHECK_FALSE(FiniteUltrafilter(4, 1) == FiniteUltrafilter(4, 2));
    CHECK(FiniteUltrafilter::principal(4, 0).point() == 0);
    CHECK_THROWS_AS(FiniteUltrafilter(2, 2), PreconditionError);
    CHECK_THROWS_AS(FiniteUltrafilter(3, 0).contains(Subset(2)), PreconditionError);
}

TEST_CASE("beta_extend matches the defining clauses computed over explicit families") {
    Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        const Vocabulary v = random_vocabulary(rng);
        const std::size_t n = rng.between(1, 3);
        const Model m = random_model(rng, v, n);
        const auto families = oracle::all_ultrafilters(n);
        const auto expected = oracle::beta(m, families);
        for (BetaMode mode : {BetaMode::Literal, BetaMode::Fast}) {
            const BetaModel b = beta_extend(m, mode);
            REQUIRE(b.points.size() == families.size());
            // match library points to oracle families extensionally
            std::vector<std::size_t> to_oracle(n);
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t q = 0; q < n; ++q)
                    if (families[q] == oracle::principal(n, b.points[p].point()))
                        to_oracle[p] = q;
            for (std::size_t r = 0; r < v.predicates().size(); ++r)
                for_each_tuple(n, v.predicates()[r].arity, [&](const Tuple& t) {
                    std::vector<std::size_t> ot;
                    for (auto x : t)
                        ot.push_back(to_oracle[x]);
                    CHECK(b.model.holds(r, t) == (expected.relations.at(v.predicates()[r].name).count(ot) > 0));
                });
            for (std::size_t f = 0; f < v.functions().size(); ++f)
                for_each_tuple(n, v.functions()[f].arity, [&](const Tuple& t) {
                    std::vector<std::size_t> ot;
                    for (auto x : t)
                        ot.push_back(to_oracle[x]);
                    CHECK(to_oracle[b.model.apply(f, t)] == expected.functions.at(v.functions()[f].name).at(ot));
                });
        }
    }
}

TEST_CASE("literal mode reports uniqueness and refuses large models") {
    Rng rng(4);
    Vocabulary v;
    v.add_function("F", 2);
    v.add_predicate("P", 1);
    const Model m = random_model(rng, v, 5);
    BetaStats stats;
    beta_extend(m, BetaMode::Literal, &stats);
    CHECK(stats.tuples_checked == 25);
    CHECK(stats.min_candidates == 1);
    CHECK(stats.max_candidates == 1);
    CHECK_THROWS_AS(beta_extend(Model::empty(v, kLiteralMaxSize + 1), BetaMode::Literal), PreconditionError);
    CHECK_NOTHROW(beta_extend(random_model(rng, v, 40), BetaMode::Fast));
}

TEST_CASE("natural embedding and serialization") {
    Rng rng(12);
    const Vocabulary v = random_vocabulary(rng);
    const Model m = random_model(rng, v, 3);
    const MapWitness j = natural_embedding(m);
    CHECK(classify_map(j) == MapClass::Isomorphism);
    const BetaModel b = beta_extend(m);
    const std::string text = serialize_beta(b);
    CHECK(text.rfind("# u0 = principal(0)\n# u1 = principal(1)\n# u2 = principal(2)\n", 0) == 0);
    CHECK(parse_model(text) == b.model);
    CHECK(locate(b.points, FiniteUltrafilter(3, 2)) == 2);
}

TEST_CASE("pushforward") {
    const Model two = Model::empty(Vocabulary{}, 2), three = Model::empty(Vocabulary{}, 3);
    const MapWitness id = identity_map(three);
    for (Element a = 0; a < 3; ++a)
        CHECK(pushforward(id, FiniteUltrafilter(3, a)) == FiniteUltrafilter(3, a));
    const MapWitness constant{three, two, {1, 1, 1}};
    for (Element a = 0; a < 3; ++a)
        CHECK(pushforward(constant, FiniteUltrafilter(3, a)) == FiniteUltrafilter(2, 1));
    const MapWitness collapse{two, two, {1, 1}};
    CHECK(pushforward(collapse, FiniteUltrafilter(2, 0)) == FiniteUltrafilter(2, 1));
}

TEST_CASE("lift_check preserves every property of the source map") {
    Rng rng(2);
    int embeddings = 0, epis = 0;
    for (int i = 0; i < 150; ++i) {
        const Vocabulary v = random_vocabulary(rng);
        const MapWitness h = random_homomorphism(rng, v, 4);
        const LiftReport r = lift_check(h);
        CHECK(r.pass);
        CHECK(r.source == classify_map(h));
        // the lifted map, re-checked against the oracle on the beta models
        const unsigned want = oracle::map_properties(h.source, h.target, h.map);
        const unsigned got = oracle::map_properties(beta_extend(h.source).model, beta_extend(h.target).model,
                                                    r.lifted_map);
        CHECK((got & want) == want);
        embeddings += at_least(r.source, MapClass::IsomorphicEmbedding);
        epis += at_least(r.source, MapClass::Epimorphism);
    }
    CHECK(embeddings > 20);
    CHECK(epis > 20);

    const Model a = Model::empty(Vocabulary({{"P", 1}}, {}), 2);
    Model b = a;
    b.relations[0] = {{0}};
    Model c = a;
    c.relations[0] = {{1}};
    const LiftReport bad = lift_check({b, c, {0, 1}});
    CHECK(bad.source == MapClass::NotHomomorphism);
    CHECK(bad.pass);
    CHECK(bad.note.find("precondition unmet") != std::string::npos);

    const LiftReport id = lift_check(identity_map(b), BetaMode::Literal);
    CHECK(id.source == MapClass::Isomorphism);
    CHECK(id.lifted == MapClass::Isomorphism);
    CHECK(id.pass);
}
