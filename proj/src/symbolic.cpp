#include "ufx/symbolic.hpp"

#include <cctype>
#include <unordered_map>

#include "ufx/error.hpp"

namespace ufx {

Kleene kleene_not(Kleene a) {
    switch (a) {
    case Kleene::True: return Kleene::False;
    case Kleene::False: return Kleene::True;
    default: return Kleene::Unknown;
    }
}

Kleene kleene_and(Kleene a, Kleene b) {
    if (a == Kleene::False || b == Kleene::False)
        return Kleene::False;
    if (a == Kleene::True && b == Kleene::True)
        return Kleene::True;
    return Kleene::Unknown;
}

Kleene kleene_or(Kleene a, Kleene b) { return kleene_not(kleene_and(kleene_not(a), kleene_not(b))); }

std::string_view to_string(Kleene k) {
    switch (k) {
    case Kleene::True: return "True";
    case Kleene::False: return "False";
    default: return "Unknown";
    }
}

SymbolicUF SymbolicUF::principal(std::uint64_t point) { return SymbolicUF(true, point, EPSet::finite({point})); }

SymbolicUF SymbolicUF::frechet_on(EPSet a) {
    if (!a.is_infinite())
        throw PreconditionError("frechet_on: concentration set " + a.to_string() + " is finite");
    return SymbolicUF(false, 0, std::move(a));
}

std::string SymbolicUF::to_string() const {
    return principal_ ? "principal:" + std::to_string(point_) : "frechet:" + set_.to_string();
}

SymbolicUF parse_symbolic_uf(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.rfind("principal:", 0) == 0) {
        std::string_view rest = trim(text.substr(10));
        if (rest.empty())
            throw ParseError("symbolic ultrafilter: expected point after 'principal:'", 1, 11);
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(rest[i])))
                throw ParseError("symbolic ultrafilter: expected digits", 1, 11 + i);
            v = v * 10 + static_cast<std::uint64_t>(rest[i] - '0');
        }
        return SymbolicUF::principal(v);
    }
    if (text.rfind("frechet:", 0) == 0)
        return SymbolicUF::frechet_on(parse_epset(text.substr(8)));
    throw ParseError("symbolic ultrafilter: expected 'principal:<n>' or 'frechet:<ep literal>'", 1, 1);
}

Kleene measure(const SymbolicUF& d, const EPSet& s) {
    if (d.is_principal())
        return s.contains(d.point()) ? Kleene::True : Kleene::False;
    const EPSet& a = d.concentration();
    if (set_minus(a, s).is_finite())
        return Kleene::True;
    if (set_intersect(a, s).is_finite())
        return Kleene::False;
    return Kleene::Unknown;
}

EPSet ParamFamily::at(std::uint64_t t) const {
    switch (constraint) {
    case Constraint::Greater: return epset_cut(base, CutBound::Greater, t);
    case Constraint::Less: return epset_cut(base, CutBound::Less, t);
    default: return base;
    }
}

namespace {

InnerDecision constant(Kleene k) {
    InnerDecision d;
    if (k == Kleene::True)
        d.true_region = EPSet::all();
    else if (k == Kleene::Unknown)
        d.unknown_region = EPSet::all();
    else
        d.false_region = EPSet::all();
    return d;
}

} // namespace

InnerDecision inner_decision(const SymbolicUF& d, const ParamFamily& fam) {
    using C = ParamFamily::Constraint;
    if (d.is_principal()) {
        // m in fam(t) <=> m in base and (m > t | m < t | true)
        const std::uint64_t m = d.point();
        if (!fam.base.contains(m) || fam.constraint == C::None)
            return constant(fam.base.contains(m) ? Kleene::True : Kleene::False);
        InnerDecision out;
        out.true_region = fam.constraint == C::Greater ? EPSet::less_than(m) : EPSet::greater_than(m);
        out.false_region = set_complement(out.true_region);
        return out;
    }
    // For an infinite A: A \ (base ∩ {x > t}) is finite iff A \ base is, and
    // A ∩ base ∩ {x > t} is finite iff A ∩ base is, so the verdict does not
    // depend on t. base ∩ {x < t} is finite for every t.
    if (fam.constraint == C::Less)
        return constant(Kleene::False);
    return constant(measure(d, fam.base));
}

Kleene eval_two_level(const SymbolicUF& d1, const SymbolicUF& d2, const ParamFamily& fam, const EPSet& outer) {
    InnerDecision inner = inner_decision(d2, fam);
    // For any particular D2 in its class the set of good t lies between
    // these two bounds; D1-membership is upward closed.
    EPSet lower = set_intersect(outer, inner.true_region);
    EPSet upper = set_intersect(outer, set_union(inner.true_region, inner.unknown_region));
    if (measure(d1, lower) == Kleene::True)
        return Kleene::True;
    if (measure(d1, upper) == Kleene::False)
        return Kleene::False;
    return Kleene::Unknown;
}

PairingCode PairingCode::cantor_unordered(std::uint64_t offset) {
    return {"cantor-unordered+" + std::to_string(offset), [offset](std::uint64_t a, std::uint64_t b) {
                const std::uint64_t hi = a > b ? a : b;
                const std::uint64_t lo = a > b ? b : a;
                return offset + hi * (hi + 1) / 2 + lo;
            }};
}

std::vector<PairCase> pair_image_cases(const EPSet& a1, const EPSet& a2, PairOrder order) {
    using C = ParamFamily::Constraint;
    // With code injective on unordered pairs, code(t, x) is in B iff {t, x}
    // = {b1, b2} for some b1 in A1, b2 in A2 in the required order. For t in
    // A1 that forces x = b2 in A2; for t in A2 it forces x = b1 in A1.
    const bool first_less = order == PairOrder::FirstLess;
    return {
        {a1, {a2, first_less ? C::Greater : C::Less}},
        {a2, {a1, first_less ? C::Less : C::Greater}},
    };
}

namespace {

void check_pairing(const PairingCode& pairing) {
    constexpr std::uint64_t window = 48;
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> seen;
    for (std::uint64_t hi = 0; hi < window; ++hi)
        for (std::uint64_t lo = 0; lo <= hi; ++lo) {
            const std::uint64_t c = pairing.code(lo, hi);
            if (pairing.code(hi, lo) != c)
                throw PreconditionError("pairing " + pairing.name + " is not symmetric");
            if (auto [it, fresh] = seen.emplace(c, std::make_pair(lo, hi)); !fresh)
                throw PreconditionError("pairing " + pairing.name + " identifies {" + std::to_string(lo) + "," +
                                        std::to_string(hi) + "} with {" + std::to_string(it->second.first) + "," +
                                        std::to_string(it->second.second) + "}");
        }
}

} // namespace

Kleene pair_image_membership(const EPSet& a1, const EPSet& a2, PairOrder order, const SymbolicUF& d1,
                             const SymbolicUF& d2, const PairingCode& pairing) {
    if (!set_intersect(a1, a2).is_empty())
        throw PreconditionError("pair_image_membership: A1 and A2 intersect");
    check_pairing(pairing);
    // B is in F(D1, D2) iff {t : {x : code(t, x) in B} in D2} is in D1. The
    // t-set splits over the disjoint cases, and an ultrafilter contains a
    // disjoint union iff it contains one of the parts.
    Kleene verdict = Kleene::False;
    for (const auto& c : pair_image_cases(a1, a2, order))
        verdict = kleene_or(verdict, eval_two_level(d1, d2, c.inner, c.outer));
    return verdict;
}

} // namespace ufx
