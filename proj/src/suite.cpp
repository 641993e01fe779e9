#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "ufx/error.hpp"
#include "ufx/paper_suite.hpp"

namespace ufx {

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

const CheckResult* SuiteReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {

// Each check draws from its own stream so adding a check never shifts the
// others.
Rng stream(std::uint64_t seed, std::uint64_t check) { return Rng(seed * 0x9E3779B97F4A7C15ULL + check); }

std::string elements(const std::vector<Element>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? "," : "") + std::to_string(xs[i]);
    return s + "}";
}

class Checker {
public:
    explicit Checker(SuiteReport& r) : report_(r) {}

    template <class Fn>
    void run(const std::string& name, Fn&& fn) {
        CheckResult c{name, true, {}};
        failures_ = 0;
        first_.clear();
        try {
            std::string detail = fn(*this);
            c.pass = failures_ == 0;
            c.detail = c.pass ? detail : std::to_string(failures_) + " failure(s); first: " + first_;
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        report_.checks.push_back(std::move(c));
    }

    void expect(bool ok, const std::string& what) {
        if (ok)
            return;
        if (failures_++ == 0)
            first_ = what;
    }

private:
    SuiteReport& report_;
    std::size_t failures_ = 0;
    std::string first_;
};

TruncatedM1 suite_m1(const SuiteOptions& o, std::size_t k) {
    TruncatedM1 m1 = build_m1(k);
    return o.asymmetric_mutant ? with_asymmetric_pairing(std::move(m1)) : m1;
}

Subset sort_subset(const Model& m, const std::vector<Element>& xs) {
    Subset s(m.size, false);
    for (Element x : xs)
        s[x] = true;
    return s;
}

} // namespace

SuiteReport run_suite(const SuiteOptions& o) {
    if (o.k < 1 || o.k > kMaxTruncation)
        throw PreconditionError("suite: k must lie in [1, " + std::to_string(kMaxTruncation) + "]");
    SuiteReport report;
    report.options = o;
    Checker ck(report);
    const TruncatedM1 m1 = suite_m1(o, o.k);
    report.deviations = m1.deviations;

    ck.run("beta.ultrafilters", [&](Checker& c) {
        // every enumerated family is an ultrafilter and they are pairwise distinct
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto ufs = enumerate_ultrafilters(n);
            c.expect(ufs.size() == n, "n=" + std::to_string(n) + ": wrong count");
            const std::uint64_t subsets = std::uint64_t{1} << n;
            for (const auto& u : ufs) {
                c.expect(!u.contains(subset_from_mask(n, 0)), "empty set is a member");
                for (std::uint64_t a = 0; a < subsets; ++a) {
                    const bool in_a = u.contains(subset_from_mask(n, a));
                    c.expect(in_a != u.contains(subset_from_mask(n, ~a & (subsets - 1))), "not ultra");
                    for (std::uint64_t b = 0; b < subsets; ++b) {
                        const bool in_b = u.contains(subset_from_mask(n, b));
                        c.expect((in_a && in_b) == u.contains(subset_from_mask(n, a & b)), "not a filter");
                    }
                }
            }
            for (std::size_t i = 0; i < ufs.size(); ++i)
                for (std::size_t j = i + 1; j < ufs.size(); ++j)
                    c.expect(!(ufs[i] == ufs[j]), "duplicate ultrafilter");
        }
        return std::string("n = 1..4, axioms checked on every subset");
    });

    ck.run("beta.embedding", [&](Checker& c) {
        Rng rng = stream(o.seed, 1);
        for (std::size_t i = 0; i < o.random_models; ++i) {
            const Vocabulary v = random_vocabulary(rng);
            const Model m = random_model(rng, v, rng.between(1, 5));
            const MapWitness j = natural_embedding(m);
            c.expect(validate_model(j.target).empty(), "beta model invalid (case " + std::to_string(i) + ")");
            c.expect(classify_map(j) == MapClass::Isomorphism,
                     "j_M is " + std::string(to_string(classify_map(j))) + " (case " + std::to_string(i) + ")");
        }
        return std::to_string(o.random_models) + " random models; j_M is an isomorphism onto beta(M)";
    });

    ck.run("beta.literal_fast_agreement", [&](Checker& c) {
        Rng rng = stream(o.seed, 2);
        std::size_t tuples = 0;
        for (std::size_t i = 0; i < o.literal_models; ++i) {
            const Vocabulary v = random_vocabulary(rng);
            const Model m = random_model(rng, v, rng.between(1, 6));
            BetaStats stats;
            const BetaModel lit = beta_extend(m, BetaMode::Literal, &stats);
            const BetaModel fast = beta_extend(m, BetaMode::Fast);
            c.expect(lit == fast, "literal and fast disagree (case " + std::to_string(i) + ")");
            c.expect(stats.tuples_checked == 0 || (stats.min_candidates == 1 && stats.max_candidates == 1),
                     "function value not unique (case " + std::to_string(i) + ")");
            tuples += stats.tuples_checked;
        }
        return std::to_string(o.literal_models) + " models, " + std::to_string(tuples) +
               " function tuples each with exactly one candidate";
    });

    ck.run("beta.first_extension", [&](Checker& c) {
        Rng rng = stream(o.seed, 3);
        std::size_t vacuous = 0;
        for (std::size_t i = 0; i < o.lift_witnesses; ++i) {
            const Vocabulary v = random_vocabulary(rng);
            const MapWitness h = random_homomorphism(rng, v, 4);
            const LiftReport r = lift_check(h);
            c.expect(r.source != MapClass::NotHomomorphism, "generator produced a non-homomorphism");
            c.expect(r.pass && at_least(r.lifted, r.source),
                     "lift of a " + std::string(to_string(r.source)) + " is " + std::string(to_string(r.lifted)));
            const MapWitness g = random_map(rng, h.source, h.target);
            if (lift_check(g).source == MapClass::NotHomomorphism)
                ++vacuous;
            c.expect(lift_check(g).pass, "lift check failed on a random map");
        }
        return std::to_string(o.lift_witnesses) + " homomorphisms preserved; " + std::to_string(vacuous) +
               " random non-homomorphisms reported as precondition unmet";
    });

    ck.run("beta.naturality", [&](Checker& c) {
        Rng rng = stream(o.seed, 4);
        for (std::size_t i = 0; i < o.lift_witnesses; ++i) {
            const Vocabulary v = random_vocabulary(rng);
            const MapWitness h = random_homomorphism(rng, v, 4);
            for (Element a = 0; a < h.source.size; ++a)
                c.expect(pushforward(h, FiniteUltrafilter(h.source.size, a)) ==
                             FiniteUltrafilter(h.target.size, h.map[a]),
                         "h~ j(a) != j(h a)");
        }
        return std::string("h~ after j_A equals j_B after h on every witness");
    });

    ck.run("formula.quantifier_laws", [&](Checker& c) {
        Rng rng = stream(o.seed, 5);
        for (std::size_t i = 0; i < o.formula_cases; ++i) {
            const Vocabulary v = random_vocabulary(rng);
            const std::size_t n = rng.between(1, 4);
            const Model m = random_model(rng, v, n);
            const Formula phi = random_formula(rng, v);
            const Element a = static_cast<Element>(rng.below(n));
            Assignment base;
            base.ufs.emplace("e", FiniteUltrafilter(n, static_cast<Element>(rng.below(n))));
            Assignment at_a = base;
            at_a.vars["x"] = a;
            Assignment with_u = base;
            with_u.ufs.emplace("u", FiniteUltrafilter(n, a));
            const bool direct = evaluate(m, phi, at_a);
            const bool forall = evaluate(m, Formula::uf_forall("u", "x", phi), with_u);
            const bool exists = evaluate(m, Formula::uf_exists("u", "x", phi), with_u);
            c.expect(direct == forall, "principal collapse fails for " + to_string(phi));
            c.expect(forall == exists, "self-duality fails for " + to_string(phi));
        }
        return std::to_string(o.formula_cases) + " random formulas: principal collapse and self-duality";
    });

    ck.run("m1.valid", [&](Checker& c) {
        for (std::size_t k = 1; k <= o.k; ++k) {
            const TruncatedM1 t = suite_m1(o, k);
            const Model& m = t.model;
            const auto violations = validate_model(m);
            c.expect(violations.empty(), "k=" + std::to_string(k) + ": " +
                                             (violations.empty() ? "" : violations.front().message));
            c.expect(t.num_sort.size() + t.set_sort.size() == m.size, "sorts do not partition the universe");
            for (Element a = 0; a < m.size; ++a)
                c.expect(m.holds(0, {a}) != m.holds(1, {a}), "P1/P2 not a partition at " + std::to_string(a));
            for (const auto& tuple : m.relations[2])
                c.expect(m.holds(0, {tuple[0]}) && m.holds(1, {tuple[1]}), "R1 leaves P1 x P2");
            // R2 is a strict linear order on each sort
            for (const auto* sort : {&t.num_sort, &t.set_sort})
                for (Element a : *sort)
                    for (Element b : *sort)
                        c.expect(a == b ? !m.holds(3, {a, b}) : m.holds(3, {a, b}) != m.holds(3, {b, a}),
                                 "R2 not linear on a sort");
        }
        return "k = 1.." + std::to_string(o.k) + "; universe " + std::to_string(m1.model.size) + " at k=" +
               std::to_string(o.k);
    });

    ck.run("m1.phi_characterization", [&](Checker& c) {
        const Model& m = m1.model;
        const BetaModel beta = beta_extend(m);
        const std::size_t F = 0;
        for (int i : {1, 2}) {
            const Formula phi = formula_phi(i);
            const auto& sort = i == 1 ? m1.num_sort : m1.set_sort;
            const Subset in_sort = sort_subset(m, sort);
            for (Element d = 0; d < beta.model.size; ++d) {
                const bool concentrated = beta.points[d].contains(in_sort);
                const bool holds = evaluate(beta.model, phi, {{{"x", d}}, {}});
                c.expect(holds == concentrated, "phi_" + std::to_string(i) + " at u" + std::to_string(d) +
                                                    (holds ? " holds outside " : " fails inside ") + "P" +
                                                    std::to_string(i) + "^beta");
                c.expect(evaluate(m, phi, {{{"x", d}}, {}}) == in_sort[d], "phi_" + std::to_string(i) + " on M1");
                if (!concentrated)
                    continue;
                // F^beta commutes with principal arguments from the same sort
                for (Element a : sort)
                    c.expect(beta.model.apply(F, {d, a}) == beta.model.apply(F, {a, d}),
                             "F^beta(u" + std::to_string(d) + ", j(" + std::to_string(a) + ")) not symmetric");
            }
            // unordered pairing on the bases
            const auto& base = i == 1 ? m1.num_base : m1.set_base;
            std::vector<Element> codes;
            for (std::size_t x = 0; x < base.size(); ++x)
                for (std::size_t y = x; y < base.size(); ++y)
                    codes.push_back(m.apply(F, {base[x], base[y]}));
            std::sort(codes.begin(), codes.end());
            c.expect(std::adjacent_find(codes.begin(), codes.end()) == codes.end(),
                     "F not injective on unordered pairs of the P" + std::to_string(i) + " base");
        }
        return "phi_i holds exactly on P_i^beta over " + std::to_string(beta.model.size) + " ultrafilters";
    });

    ck.run("m1.psi", [&](Checker& c) {
        const Formula psi = formula_psi();
        for (std::size_t k = 1; k <= o.k; ++k) {
            const TruncatedM1 t = suite_m1(o, k);
            const bool on_model = evaluate(t.model, psi);
            const bool on_beta = evaluate(beta_extend(t.model).model, psi);
            c.expect(on_model, "psi fails in M1 at k=" + std::to_string(k));
            c.expect(on_beta, "psi fails in beta(M1) at k=" + std::to_string(k));
            if (k == o.k)
                report.observations.push_back("psi at k=" + std::to_string(k) + ": M1 " + (on_model ? "true" : "false") +
                                              ", beta(M1) " + (on_beta ? "true" : "false"));
        }
        return "psi holds in M1 and beta(M1) for k = 1.." + std::to_string(o.k);
    });

    ck.run("m1.G_principal", [&](Checker& c) {
        const Model& m = m1.model;
        std::vector<std::vector<Element>> images;
        for (Element a : m1.num_sort) {
            std::vector<Element> expected;
            for (Element b : m1.set_sort)
                if (m.holds(2, {a, b}))
                    expected.push_back(b);
            const auto g = compute_G(m, FiniteUltrafilter(m.size, a));
            c.expect(g == expected, "G(j(" + std::to_string(a) + ")) = " + elements(g));
            images.push_back(g);
        }
        std::sort(images.begin(), images.end());
        c.expect(std::adjacent_find(images.begin(), images.end()) == images.end(), "G is not injective on P1");
        return "G(j(a)) = {b : R1(a,b)} and G is injective on " + std::to_string(m1.num_sort.size()) + " points";
    });

    ck.run("lemma3.finite", [&](Checker& c) {
        const std::size_t k = m1.num_base.size();
        std::size_t splits = 0;
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
            std::vector<Element> a1;
            for (Element x = 0; x < k; ++x)
                if ((mask >> x) & 1u)
                    a1.push_back(x);
            const auto r = lemma3_finite(m1, a1);
            c.expect(r.disjoint, "B1 and B2 meet for A1 = " + elements(r.a1));
            ++splits;
        }
        return std::to_string(splits) + " splits of numBase, B1 and B2 always disjoint";
    });

    ck.run("lemma3.mutant_detected", [&](Checker& c) {
        if (o.k < 3)
            return std::string("skipped: a detecting split needs k >= 3");
        const TruncatedM1 mutant = with_asymmetric_pairing(build_m1(o.k));
        bool detected = false;
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << o.k) && !detected; ++mask) {
            std::vector<Element> a1;
            for (Element x = 0; x < o.k; ++x)
                if ((mask >> x) & 1u)
                    a1.push_back(x);
            detected = !lemma3_finite(mutant, a1).disjoint;
        }
        c.expect(detected, "first-projection pairing passes the finite check");
        return std::string("first-projection pairing breaks disjointness");
    });

    ck.run("lemma3.symbolic", [&](Checker& c) {
        Rng rng = stream(o.seed, 6);
        std::vector<EPSet> partitions{EPSet::residue_class(2, 0), EPSet::residue_class(3, 0)};
        for (std::size_t i = 0; i < o.symbolic_partitions; ++i)
            partitions.push_back(random_partition(rng));
        std::size_t rows = 0;
        for (const EPSet& a1 : partitions) {
            const auto r = lemma3_symbolic(a1);
            const auto s = lemma3_symbolic(r.a2);
            c.expect(r.extensions_differ, "verdicts for " + a1.to_string() + ": " +
                                              std::string(to_string(r.b1_in_f12)) + "," +
                                              std::string(to_string(r.b2_in_f12)) + "," +
                                              std::string(to_string(r.b2_in_f21)) + "," +
                                              std::string(to_string(r.b1_in_f21)));
            // swapping the roles of A1 and A2 swaps B1 and B2
            c.expect(s.b1_in_f12 == r.b2_in_f21 && s.b2_in_f12 == r.b1_in_f21, "asymmetric under swap: " +
                                                                                  a1.to_string());
            for (PairOrder order : {PairOrder::FirstLess, PairOrder::SecondLess})
                for (std::uint64_t range : {128u, 1024u}) {
                    const auto t = truncation_oracle(r.a1, r.a2, order, range);
                    rows += t.rows_checked;
                    c.expect(t.agree(), "truncation disagrees for " + a1.to_string() + " at (" +
                                            std::to_string(t.first_mismatch->first) + "," +
                                            std::to_string(t.first_mismatch->second) + ")");
                }
            if (report.observations.size() < 4 && &a1 - partitions.data() < 2)
                report.observations.push_back("A1 = " + a1.to_string() + ": B1 in F(D1,D2) " +
                                              std::string(to_string(r.b1_in_f12)) + ", B2 in F(D1,D2) " +
                                              std::string(to_string(r.b2_in_f12)) + ", B2 in F(D2,D1) " +
                                              std::string(to_string(r.b2_in_f21)) + ", B1 in F(D2,D1) " +
                                              std::string(to_string(r.b1_in_f21)));
        }
        return std::to_string(partitions.size()) + " partitions; " + std::to_string(rows) +
               " truncated rows agree with the symbolic inner sets";
    });

    ck.run("lemma4.principal_cuts", [&](Checker& c) {
        Rng rng = stream(o.seed, 7);
        std::size_t cases = 0;
        for (std::size_t n = 1; n <= 6; ++n)
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<Element> perm(n);
                for (Element i = 0; i < n; ++i)
                    perm[i] = i;
                if (trial > 0)
                    for (std::size_t i = n; i > 1; --i)
                        std::swap(perm[i - 1], perm[rng.below(i)]);
                const StrictOrder order = StrictOrder::from_ranking(perm);
                for (Element x = 0; x < n; ++x) {
                    const CutPair cut = cut_segments(order, FiniteUltrafilter(n, x));
                    for (Element y = 0; y < n; ++y) {
                        c.expect(cut.initial[y] == (y == x || order(y, x)), "I_D is not the closed ray below x");
                        c.expect(cut.final[y] == (y == x || order(x, y)), "J_D is not the closed ray above x");
                        c.expect((cut.initial[y] && cut.final[y]) == (y == x), "I_D ∩ J_D is not {x}");
                    }
                    ++cases;
                }
            }
        return std::to_string(cases) + " principal ultrafilters; I_D ∩ J_D = {x} in each";
    });

    return report;
}

std::string format_text(const SuiteReport& r) {
    std::ostringstream out;
    out << "ufx paper suite  k=" << r.options.k << " seed=" << r.options.seed
        << (r.options.asymmetric_mutant ? " (asymmetric pairing mutant)" : "") << "\n";
    for (const auto& c : r.checks)
        out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    out << "truncation deviations:\n";
    for (const auto& d : r.deviations)
        out << "  - " << d << "\n";
    if (!r.observations.empty()) {
        out << "observations:\n";
        for (const auto& s : r.observations)
            out << "  - " << s << "\n";
    }
    std::size_t passed = 0;
    for (const auto& c : r.checks)
        passed += c.pass;
    out << passed << "/" << r.checks.size() << " checks passed\n";
    return out.str();
}

std::string format_json(const SuiteReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = "ufx.suite";
    j["schema_version"] = 1;
    j["options"] = {{"k", r.options.k},
                    {"seed", r.options.seed},
                    {"asymmetric_mutant", r.options.asymmetric_mutant}};
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["deviations"] = r.deviations;
    j["observations"] = r.observations;
    j["all_pass"] = r.all_pass();
    return j.dump(2) + "\n";
}

} // namespace ufx
