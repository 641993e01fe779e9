#include "ufx/beta.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ufx/error.hpp"
#include "ufx/model_io.hpp"

namespace ufx {

std::vector<FiniteUltrafilter> enumerate_ultrafilters(std::size_t n) {
    if (n == 0)
        throw PreconditionError("enumerate_ultrafilters: the empty set carries no ultrafilter");
    std::vector<FiniteUltrafilter> out;
    out.reserve(n);
    for (Element p = 0; p < n; ++p)
        out.emplace_back(n, p);
    return out;
}

std::size_t locate(const std::vector<FiniteUltrafilter>& points, const FiniteUltrafilter& u) {
    // An ultrafilter on a finite set is fixed by the one singleton it contains.
    const std::size_t n = u.universe();
    Subset s(n, false);
    std::optional<Element> atom;
    for (Element a = 0; a < n && !atom; ++a) {
        s[a] = true;
        if (u.contains(s))
            atom = a;
        s[a] = false;
    }
    if (!atom)
        throw Error("locate: ultrafilter contains no singleton");
    s[*atom] = true;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].universe() == n && points[i].contains(s))
            return i;
    throw Error("locate: ultrafilter is not among the given points");
}

namespace {

std::string param(std::size_t i) { return "d" + std::to_string(i + 1); }
std::string var(std::size_t i) { return "x" + std::to_string(i + 1); }

// (U-forall d1 x1)...(U-forall dk xk) inner
Formula nest(std::size_t arity, Formula inner) {
    for (std::size_t i = arity; i-- > 0;)
        inner = Formula::uf_forall(param(i), var(i), std::move(inner));
    return inner;
}

std::vector<Term> variables(std::size_t arity) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < arity; ++i)
        out.push_back(Term::variable(var(i)));
    return out;
}

Assignment bind(const std::vector<FiniteUltrafilter>& points, const Tuple& args) {
    Assignment a;
    for (std::size_t i = 0; i < args.size(); ++i)
        a.ufs.emplace(param(i), points[args[i]]);
    return a;
}

// A fresh unary predicate name, not declared in vocab.
std::string fresh_name(const Vocabulary& vocab) {
    std::string name = "InA";
    while (vocab.declares(name))
        name += "_";
    return name;
}

void extend_literal(const Model& m, BetaModel& out, BetaStats& stats) {
    const std::size_t n = m.size;
    const auto& points = out.points;

    for (std::size_t p = 0; p < m.vocab.predicates().size(); ++p) {
        const auto& sym = m.vocab.predicates()[p];
        const std::size_t k = static_cast<std::size_t>(sym.arity);
        Formula f = nest(k, Formula::predicate(m.vocab, sym.name, variables(k)));
        for_each_tuple(points.size(), sym.arity, [&](const Tuple& args) {
            if (evaluate(m, f, bind(points, args)))
                out.model.relations[p].insert(args);
        });
    }

    if (m.vocab.functions().empty())
        return;

    // "F(x1..xk) in A" becomes InA(F(x1..xk)) over a private copy of m
    // whose extra predicate is reinterpreted as each A in turn.
    Vocabulary ext_vocab = m.vocab;
    const std::string in_a = fresh_name(m.vocab);
    ext_vocab.add_predicate(in_a, 1);
    Model ext = Model::empty(ext_vocab, n);
    for (std::size_t p = 0; p < m.relations.size(); ++p)
        ext.relations[p] = m.relations[p];
    ext.functions = m.functions;
    const std::size_t in_a_index = ext.relations.size() - 1;
    const std::uint64_t subsets = std::uint64_t{1} << n;

    for (std::size_t f = 0; f < m.vocab.functions().size(); ++f) {
        const auto& sym = m.vocab.functions()[f];
        const std::size_t k = static_cast<std::size_t>(sym.arity);
        Formula cond = nest(k, Formula::predicate(ext_vocab, in_a,
                                                  {Term::apply(ext_vocab, sym.name, variables(k))}));
        for_each_tuple(points.size(), sym.arity, [&](const Tuple& args) {
            Assignment a = bind(points, args);
            // condition[A] for A in increasing order as n-bit integers
            std::vector<bool> condition(subsets);
            for (std::uint64_t mask = 0; mask < subsets; ++mask) {
                auto& rel = ext.relations[in_a_index];
                rel.clear();
                for (Element e = 0; e < n; ++e)
                    if ((mask >> e) & 1u)
                        rel.insert({e});
                condition[mask] = evaluate(ext, cond, a);
            }
            std::vector<std::size_t> matches;
            for (std::size_t c = 0; c < points.size(); ++c) {
                bool agrees = true;
                for (std::uint64_t mask = 0; mask < subsets && agrees; ++mask)
                    agrees = points[c].contains(subset_from_mask(n, mask)) == condition[mask];
                if (agrees)
                    matches.push_back(c);
            }
            ++stats.tuples_checked;
            stats.min_candidates = std::min(stats.min_candidates, matches.size());
            stats.max_candidates = std::max(stats.max_candidates, matches.size());
            if (matches.size() != 1) {
                std::ostringstream os;
                os << "beta_extend: " << matches.size() << " ultrafilters satisfy the defining condition of "
                   << sym.name << " at (";
                for (std::size_t i = 0; i < args.size(); ++i)
                    os << (i ? "," : "") << 'u' << args[i];
                os << ')';
                throw Error(os.str());
            }
            out.model.set_value(f, args, static_cast<Element>(matches[0]));
        });
    }
}

void extend_fast(const Model& m, BetaModel& out) {
    auto witnesses = [&](const Tuple& args) {
        Tuple t(args.size());
        for (std::size_t i = 0; i < args.size(); ++i)
            t[i] = out.points[args[i]].point();
        return t;
    };
    for (std::size_t p = 0; p < m.relations.size(); ++p)
        for_each_tuple(out.points.size(), m.vocab.predicates()[p].arity, [&](const Tuple& args) {
            if (m.holds(p, witnesses(args)))
                out.model.relations[p].insert(args);
        });
    for (std::size_t f = 0; f < m.functions.size(); ++f)
        for_each_tuple(out.points.size(), m.vocab.functions()[f].arity, [&](const Tuple& args) {
            FiniteUltrafilter image(m.size, m.apply(f, witnesses(args)));
            out.model.set_value(f, args, static_cast<Element>(locate(out.points, image)));
        });
}

} // namespace

BetaModel beta_extend(const Model& m, BetaMode mode, BetaStats* stats) {
    if (auto v = validate_model(m); !v.empty())
        throw PreconditionError("beta_extend: invalid model: " + v.front().message);
    if (mode == BetaMode::Literal && m.size > kLiteralMaxSize)
        throw PreconditionError("beta_extend: literal mode is limited to universes of size " +
                                std::to_string(kLiteralMaxSize) + ", got " + std::to_string(m.size));
    BetaModel out;
    out.base = m;
    out.points = enumerate_ultrafilters(m.size);
    out.model = Model::empty(m.vocab, out.points.size());

    BetaStats local{0, std::numeric_limits<std::size_t>::max(), 0};
    if (mode == BetaMode::Literal)
        extend_literal(m, out, local);
    else
        extend_fast(m, out);
    if (local.tuples_checked == 0)
        local.min_candidates = 0;
    if (stats)
        *stats = local;
    return out;
}

MapWitness natural_embedding(const Model& m) {
    BetaModel b = beta_extend(m, BetaMode::Fast);
    MapWitness w{m, b.model, std::vector<Element>(m.size)};
    for (Element a = 0; a < m.size; ++a)
        w.map[a] = static_cast<Element>(locate(b.points, FiniteUltrafilter::principal(m.size, a)));
    return w;
}

FiniteUltrafilter pushforward(const MapWitness& h, const FiniteUltrafilter& d) {
    const std::size_t n = h.source.size;
    const std::size_t t = h.target.size;
    if (h.map.size() != n || d.universe() != n)
        throw PreconditionError("pushforward: map or ultrafilter does not match the source universe");
    for (Element v : h.map)
        if (v >= t)
            throw PreconditionError("pushforward: map value outside target");
    // The image is principal at the unique q whose fibre is a member of d.
    for (Element q = 0; q < t; ++q) {
        Subset fibre(n, false);
        for (Element a = 0; a < n; ++a)
            fibre[a] = h.map[a] == q;
        if (d.contains(fibre))
            return FiniteUltrafilter(t, q);
    }
    throw Error("pushforward: no fibre is a member of the ultrafilter");
}

LiftReport lift_check(const MapWitness& w, BetaMode mode) {
    LiftReport r;
    r.source = classify_map(w);
    BetaModel src = beta_extend(w.source, mode);
    BetaModel dst = beta_extend(w.target, mode);
    r.lifted_map.resize(src.points.size());
    for (std::size_t i = 0; i < src.points.size(); ++i)
        r.lifted_map[i] = static_cast<Element>(locate(dst.points, pushforward(w, src.points[i])));
    r.lifted = classify_map(MapWitness{src.model, dst.model, r.lifted_map});
    if (r.source == MapClass::NotHomomorphism) {
        r.pass = true;
        r.note = "precondition unmet: source map is not a homomorphism";
    } else {
        r.pass = at_least(r.lifted, r.source);
        if (!r.pass)
            r.note = "lifted map is weaker than the source map";
    }
    return r;
}

std::string serialize_beta(const BetaModel& b) {
    std::ostringstream os;
    for (std::size_t i = 0; i < b.points.size(); ++i)
        os << "# u" << i << " = principal(" << b.points[i].point() << ")\n";
    os << serialize_model(b.model);
    return os.str();
}

} // namespace ufx
