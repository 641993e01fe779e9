#include <algorithm>
#include <bit>

#include "ufx/error.hpp"
#include "ufx/paper_suite.hpp"

namespace ufx {

Vocabulary tau() {
    return Vocabulary({{"P1", 1}, {"P2", 1}, {"R1", 2}, {"R2", 2}}, {{"F", 2}});
}

namespace {

// Index of the unordered pair {a, b}, a < b, among C(n,2) pairs.
std::size_t pair_index(std::size_t a, std::size_t b) { return b * (b - 1) / 2 + a; }

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

std::size_t pred_index(const Model& m, const char* name) {
    auto p = m.vocab.find_predicate(name);
    if (!p)
        throw PreconditionError(std::string("model does not declare ") + name);
    return *p;
}

} // namespace

TruncatedM1 build_m1(std::size_t k) {
    if (k < 1 || k > kMaxTruncation)
        throw PreconditionError("build_m1: k must lie in [1, " + std::to_string(kMaxTruncation) + "], got " +
                                std::to_string(k));
    TruncatedM1 out;
    out.k = k;
    const std::size_t nums = k + choose2(k);
    const std::size_t sets = std::size_t{1} << k;
    std::size_t s = 1;
    while (s + 1 + choose2(s + 1) <= sets)
        ++s;

    for (Element i = 0; i < nums; ++i)
        out.num_sort.push_back(i);
    for (Element i = 0; i < sets; ++i)
        out.set_sort.push_back(static_cast<Element>(nums + i));
    for (Element i = 0; i < k; ++i)
        out.num_base.push_back(i);
    for (Element i = 0; i < s; ++i)
        out.set_base.push_back(static_cast<Element>(nums + i));

    const Vocabulary v = tau();
    Model& m = out.model;
    m = Model::empty(v, nums + sets);
    const std::size_t P1 = 0, P2 = 1, R1 = 2, R2 = 3, F = 0;

    // N-sort members of the set with bitmask `mask`: the numbers in it, and
    // the code of each base pair it splits.
    auto member = [&](Element n, std::uint64_t mask) {
        if (n < k)
            return ((mask >> n) & 1u) != 0;
        for (std::size_t b = 1; b < k; ++b)
            for (std::size_t a = 0; a < b; ++a)
                if (k + pair_index(a, b) == n)
                    return (((mask >> a) ^ (mask >> b)) & 1u) != 0;
        return false;
    };

    for (Element n : out.num_sort)
        m.relations[P1].insert({n});
    for (Element b : out.set_sort)
        m.relations[P2].insert({b});
    for (Element n : out.num_sort)
        for (std::uint64_t mask = 0; mask < sets; ++mask)
            if (member(n, mask))
                m.relations[R1].insert({n, out.set_element(mask)});
    for (Element a : out.num_sort)
        for (Element b : out.num_sort)
            if (a < b)
                m.relations[R2].insert({a, b});
    for (Element a : out.set_sort)
        for (Element b : out.set_sort)
            if (a < b)
                m.relations[R2].insert({a, b});

    for (Element a = 0; a < m.size; ++a) {
        for (Element b = 0; b < m.size; ++b) {
            const bool a_num = a < nums, b_num = b < nums;
            const Element lo = std::min(a, b), hi = std::max(a, b);
            Element value;
            if (a_num != b_num) {
                value = a;
            } else if (a_num) {
                if (hi < k)
                    value = lo == hi ? lo : static_cast<Element>(k + pair_index(lo, hi));
                else
                    value = lo;
            } else {
                const std::size_t ml = lo - nums, mh = hi - nums;
                if (mh < s)
                    value = ml == mh ? lo : static_cast<Element>(nums + s + pair_index(ml, mh));
                else
                    value = lo;
            }
            m.set_value(F, {a, b}, value);
        }
    }

    out.deviations = {
        "R2 on the set sort is the colexicographic order of P([0,k)); it has a least and a greatest element, "
        "while the infinite model needs a linear order without endpoints",
        "F is injective on unordered pairs only over numBase and setBase; other same-sort pairs map to the "
        "smaller element",
        "mixed-sort pairs are fixed: F returns its first argument and R2 does not hold",
    };
    return out;
}

TruncatedM1 with_asymmetric_pairing(TruncatedM1 m1) {
    for (Element a : m1.num_sort)
        for (Element b : m1.num_sort)
            m1.model.set_value(0, {a, b}, a);
    return m1;
}

Formula formula_phi(int i, const std::string& free_var, const std::string& bound_var) {
    if (i != 1 && i != 2)
        throw PreconditionError("formula_phi: i must be 1 or 2");
    const Vocabulary v = tau();
    const std::string p = "P" + std::to_string(i);
    auto x = Term::variable(free_var);
    auto y = Term::variable(bound_var);
    return Formula::conjunction(
        Formula::predicate(v, p, {x}),
        Formula::forall(bound_var,
                        Formula::implication(Formula::predicate(v, p, {y}),
                                             Formula::equal(Term::apply(v, "F", {x, y}), Term::apply(v, "F", {y, x})))));
}

Formula formula_psi() {
    const Vocabulary v = tau();
    auto x1 = Term::variable("x1");
    auto x2 = Term::variable("x2");
    auto y = Term::variable("y");
    Formula antecedent = Formula::conjunction(
        Formula::conjunction(Formula::predicate(v, "P1", {x1}), Formula::predicate(v, "P1", {x2})),
        Formula::negation(Formula::equal(x1, x2)));
    Formula witness = Formula::conjunction(
        Formula::conjunction(formula_phi(2, "y", "z"), Formula::predicate(v, "R1", {x1, y})),
        Formula::negation(Formula::predicate(v, "R1", {x2, y})));
    return Formula::forall("x1", Formula::forall("x2", Formula::implication(antecedent, Formula::exists("y", witness))));
}

std::vector<Element> compute_G(const Model& m, const FiniteUltrafilter& d) {
    const std::size_t P1 = pred_index(m, "P1"), P2 = pred_index(m, "P2"), R1 = pred_index(m, "R1");
    if (d.universe() != m.size)
        throw PreconditionError("compute_G: ultrafilter lives on a different universe");
    Subset p1(m.size, false);
    for (Element a = 0; a < m.size; ++a)
        p1[a] = m.holds(P1, {a});
    if (!d.contains(p1))
        throw PreconditionError("compute_G: ultrafilter is not concentrated on P1");
    std::vector<Element> out;
    for (Element b = 0; b < m.size; ++b) {
        if (!m.holds(P2, {b}))
            continue;
        Subset s(m.size, false);
        for (Element a = 0; a < m.size; ++a)
            s[a] = p1[a] && m.holds(R1, {a, b});
        if (d.contains(s))
            out.push_back(b);
    }
    return out;
}

Lemma3FiniteReport lemma3_finite(const TruncatedM1& m1, const std::vector<Element>& a1) {
    Lemma3FiniteReport r;
    for (Element a : a1)
        if (std::find(m1.num_base.begin(), m1.num_base.end(), a) == m1.num_base.end())
            throw PreconditionError("lemma3_finite: " + std::to_string(a) + " is not in numBase");
    r.a1 = a1;
    std::sort(r.a1.begin(), r.a1.end());
    r.a1.erase(std::unique(r.a1.begin(), r.a1.end()), r.a1.end());
    for (Element a : m1.num_base)
        if (!std::binary_search(r.a1.begin(), r.a1.end(), a))
            r.a2.push_back(a);
    if (r.a1.empty() || r.a2.empty())
        throw PreconditionError("lemma3_finite: A1 must be a nonempty proper subset of numBase");

    const Model& m = m1.model;
    const std::size_t R2 = pred_index(m, "R2");
    const std::size_t F = *m.vocab.find_function("F");
    for (Element n1 : r.a1)
        for (Element n2 : r.a2) {
            if (m.holds(R2, {n1, n2}))
                r.b1.push_back(m.apply(F, {n1, n2}));
            if (m.holds(R2, {n2, n1}))
                r.b2.push_back(m.apply(F, {n1, n2}));
        }
    for (auto* b : {&r.b1, &r.b2}) {
        std::sort(b->begin(), b->end());
        b->erase(std::unique(b->begin(), b->end()), b->end());
    }
    std::vector<Element> common;
    std::set_intersection(r.b1.begin(), r.b1.end(), r.b2.begin(), r.b2.end(), std::back_inserter(common));
    r.disjoint = common.empty();
    return r;
}

Lemma3FiniteReport lemma3_finite(std::size_t k, const std::vector<Element>& a1) { return lemma3_finite(build_m1(k), a1); }

Lemma3SymbolicReport lemma3_symbolic(const EPSet& a1) {
    EPSet a2 = set_complement(a1);
    if (a1.is_finite() || a2.is_finite())
        throw PreconditionError("lemma3_symbolic: " + a1.to_string() +
                                " and its complement must both be infinite (non-principal on both sides)");
    Lemma3SymbolicReport r{a1, a2, SymbolicUF::frechet_on(a1), SymbolicUF::frechet_on(a2)};
    r.b1_in_f12 = pair_image_membership(a1, a2, PairOrder::FirstLess, r.d1, r.d2);
    r.b2_in_f12 = pair_image_membership(a1, a2, PairOrder::SecondLess, r.d1, r.d2);
    r.b2_in_f21 = pair_image_membership(a1, a2, PairOrder::SecondLess, r.d2, r.d1);
    r.b1_in_f21 = pair_image_membership(a1, a2, PairOrder::FirstLess, r.d2, r.d1);
    r.extensions_differ = r.b1_in_f12 == Kleene::True && r.b2_in_f12 == Kleene::False &&
                          r.b2_in_f21 == Kleene::True && r.b1_in_f21 == Kleene::False;
    return r;
}

namespace {

using Words = std::vector<std::uint64_t>;

Words materialize(const EPSet& s, std::uint64_t range) {
    Words w((range + 63) / 64, 0);
    for (std::uint64_t x = 0; x < range; ++x)
        if (s.contains(x))
            w[x / 64] |= std::uint64_t{1} << (x % 64);
    return w;
}

bool bit(const Words& w, std::uint64_t i) { return (w[i / 64] >> (i % 64)) & 1u; }

// 64 bits of w starting at bit offset `from` (zero beyond the end).
std::uint64_t window(const Words& w, std::uint64_t from) {
    const std::uint64_t q = from / 64, r = from % 64;
    std::uint64_t lo = q < w.size() ? w[q] : 0;
    if (r == 0)
        return lo;
    std::uint64_t hi = q + 1 < w.size() ? w[q + 1] : 0;
    return (lo >> r) | (hi << (64 - r));
}

} // namespace

TruncationCheck truncation_oracle(const EPSet& a1, const EPSet& a2, PairOrder order, std::uint64_t range,
                                  const PairingCode& pairing) {
    if (pairing.name.rfind("cantor-unordered", 0) != 0)
        throw PreconditionError("truncation_oracle: only the unordered Cantor code is supported");
    const std::uint64_t offset = pairing.code(0, 0);
    auto cantor = [](std::uint64_t lo, std::uint64_t hi) { return hi * (hi + 1) / 2 + lo; };
    for (std::uint64_t hi = 0; hi < range; ++hi)
        for (std::uint64_t lo : {std::uint64_t{0}, hi / 2, hi})
            if (pairing.code(lo, hi) != offset + cantor(lo, hi) || pairing.code(hi, lo) != offset + cantor(lo, hi))
                throw PreconditionError("truncation_oracle: pairing does not follow the Cantor layout");

    TruncationCheck out;
    out.range = range;

    // B restricted to codes of pairs below range, straight from its definition.
    Words b((range * (range + 1) / 2 + 63) / 64, 0);
    const auto m1 = a1.members_below(range);
    const auto m2 = a2.members_below(range);
    for (std::uint64_t x1 : m1)
        for (std::uint64_t x2 : m2) {
            if (order == PairOrder::FirstLess ? !(x1 < x2) : !(x2 < x1))
                continue;
            const std::uint64_t c = cantor(std::min(x1, x2), std::max(x1, x2));
            b[c / 64] |= std::uint64_t{1} << (c % 64);
        }

    const auto cases = pair_image_cases(a1, a2, order);
    std::vector<Words> outer, base;
    for (const auto& c : cases) {
        outer.push_back(materialize(c.outer, range));
        base.push_back(materialize(c.inner.base, range));
    }
    using C = ParamFamily::Constraint;

    auto record = [&](std::uint64_t t, std::uint64_t x) {
        ++out.mismatches;
        if (!out.first_mismatch || std::make_pair(t, x) < *out.first_mismatch)
            out.first_mismatch = std::make_pair(t, x);
    };

    // Column `hi` holds the codes of {lo, hi} for lo <= hi contiguously. A
    // bit there answers both "hi in inner(lo)" and "lo in inner(hi)".
    for (std::uint64_t hi = 0; hi < range; ++hi) {
        const std::uint64_t start = cantor(0, hi);
        for (std::uint64_t w = 0; w * 64 < hi; ++w) {
            const std::uint64_t valid = hi - w * 64 >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << (hi - w * 64)) - 1;
            const std::uint64_t actual = window(b, start + w * 64) & valid;
            std::uint64_t as_row_lo = 0, as_row_hi = 0;  // predicted for t = lo, x = hi / t = hi, x = lo
            for (std::size_t i = 0; i < cases.size(); ++i) {
                const C con = cases[i].inner.constraint;
                if (con != C::Less && bit(base[i], hi))
                    as_row_lo |= outer[i][w];
                if (con != C::Greater && bit(outer[i], hi))
                    as_row_hi |= base[i][w];
            }
            for (std::uint64_t diff = (actual ^ as_row_lo) & valid; diff; diff &= diff - 1)
                record(w * 64 + static_cast<std::uint64_t>(std::countr_zero(diff)), hi);
            for (std::uint64_t diff = (actual ^ as_row_hi) & valid; diff; diff &= diff - 1)
                record(hi, w * 64 + static_cast<std::uint64_t>(std::countr_zero(diff)));
        }
        // diagonal: is hi in inner(hi)?
        bool predicted = false;
        for (std::size_t i = 0; i < cases.size(); ++i)
            predicted = predicted || (bit(outer[i], hi) && cases[i].inner.constraint == C::None && bit(base[i], hi));
        if (predicted != bit(b, cantor(hi, hi)))
            record(hi, hi);
        ++out.rows_checked;
    }
    return out;
}

StrictOrder StrictOrder::from_ranking(const std::vector<Element>& perm) {
    StrictOrder o;
    o.size = perm.size();
    o.less.assign(o.size * o.size, false);
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            o.less[perm[i] * o.size + perm[j]] = true;
    return o;
}

CutPair cut_segments(const StrictOrder& order, const FiniteUltrafilter& d) {
    const std::size_t n = order.size;
    if (n != d.universe())
        throw PreconditionError("cut_segments: order and ultrafilter live on different universes");
    if (n > 20)
        throw PreconditionError("cut_segments: at most 20 points");
    for (Element a = 0; a < n; ++a) {
        if (order(a, a))
            throw PreconditionError("cut_segments: order is not irreflexive at " + std::to_string(a));
        for (Element b = 0; b < n; ++b) {
            if (a != b && order(a, b) == order(b, a))
                throw PreconditionError("cut_segments: order is not linear on {" + std::to_string(a) + "," +
                                        std::to_string(b) + "}");
            for (Element c = 0; c < n; ++c)
                if (order(a, b) && order(b, c) && !order(a, c))
                    throw PreconditionError("cut_segments: order is not transitive");
        }
    }

    CutPair cut{Subset(n, true), Subset(n, true)};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Subset s = subset_from_mask(n, mask);
        bool initial = true, final = true;
        for (Element a = 0; a < n; ++a) {
            if (!s[a])
                continue;
            for (Element b = 0; b < n; ++b) {
                if (order(b, a) && !s[b])
                    initial = false;
                if (order(a, b) && !s[b])
                    final = false;
            }
        }
        if (!d.contains(s))
            continue;
        for (Element a = 0; a < n; ++a) {
            if (initial)
                cut.initial[a] = cut.initial[a] && s[a];
            if (final)
                cut.final[a] = cut.final[a] && s[a];
        }
    }
    return cut;
}

EPSet random_partition(Rng& rng) {
    const std::uint64_t period = rng.between(2, 6);
    std::vector<bool> residues(period, false);
    // a nonempty proper residue set keeps both sides infinite
    const std::uint64_t pick = rng.between(1, (std::uint64_t{1} << period) - 2);
    for (std::uint64_t r = 0; r < period; ++r)
        residues[r] = (pick >> r) & 1u;
    const std::uint64_t threshold = rng.below(9);
    std::vector<bool> prefix(threshold);
    for (std::uint64_t x = 0; x < threshold; ++x)
        prefix[x] = rng.coin();
    return EPSet(threshold, std::move(prefix), period, std::move(residues));
}

} // namespace ufx
