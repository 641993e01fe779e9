#pragma once
// Independent second implementations used as test oracles. They work on
// explicit families of bitmasks and direct recursion over the AST, sharing
// nothing with the library beyond the data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "ufx/formula.hpp"
#include "ufx/model.hpp"

namespace oracle {

using ufx::Element;
using Family = std::set<std::uint64_t>;  // subsets of {0..n-1} as bitmasks

inline bool is_ultrafilter(const Family& f, std::size_t n) {
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    if (f.count(0) || !f.count(full))
        return false;
    for (std::uint64_t a = 0; a <= full; ++a) {
        if (f.count(a) == f.count(full & ~a))
            return false;
        for (std::uint64_t b = 0; b <= full; ++b) {
            if (f.count(a) && (a & b) == a && !f.count(b))
                return false;
            if (f.count(a) && f.count(b) && !f.count(a & b))
                return false;
        }
    }
    return true;
}

/// Every ultrafilter on n <= 4 points, found by testing all 2^(2^n)
/// families of subsets.
inline std::vector<Family> all_ultrafilters(std::size_t n) {
    if (n > 4)
        throw std::invalid_argument("all_ultrafilters: n <= 4");
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<Family> out;
    for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
        Family f;
        for (std::uint64_t s = 0; s < subsets; ++s)
            if ((fam >> s) & 1u)
                f.insert(s);
        if (is_ultrafilter(f, n))
            out.push_back(f);
    }
    return out;
}

inline Family principal(std::size_t n, Element a) {
    Family f;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
        if ((s >> a) & 1u)
            f.insert(s);
    return f;
}

struct Env {
    std::map<std::string, Element> vars;
    std::map<std::string, Family> ufs;
};

inline Element term_value(const ufx::Model& m, const ufx::Term& t, const Env& env) {
    if (t.kind == ufx::Term::Kind::Variable)
        return env.vars.at(t.name);
    std::vector<Element> args;
    for (const auto& a : t.args)
        args.push_back(term_value(m, a, env));
    return m.apply(t.symbol, args);
}

/// Direct Tarski recursion; ultrafilter quantifiers look the witness set up
/// in an explicit family.
inline bool holds(const ufx::Model& m, const ufx::Formula& f, Env env) {
    using K = ufx::Formula::Kind;
    switch (f.kind) {
    case K::Equal: return term_value(m, f.terms[0], env) == term_value(m, f.terms[1], env);
    case K::Predicate: {
        ufx::Tuple t;
        for (const auto& a : f.terms)
            t.push_back(term_value(m, a, env));
        return m.relations[f.symbol].count(t) > 0;
    }
    case K::Not: return !holds(m, f.sub[0], env);
    case K::And: return holds(m, f.sub[0], env) && holds(m, f.sub[1], env);
    case K::Or: return holds(m, f.sub[0], env) || holds(m, f.sub[1], env);
    case K::Implies: return !holds(m, f.sub[0], env) || holds(m, f.sub[1], env);
    case K::Forall:
    case K::Exists: {
        bool all = true, any = false;
        for (Element a = 0; a < m.size; ++a) {
            env.vars[f.name] = a;
            const bool v = holds(m, f.sub[0], env);
            all = all && v;
            any = any || v;
        }
        return f.kind == K::Forall ? all : any;
    }
    case K::UfForall:
    case K::UfExists: {
        std::uint64_t yes = 0, no = 0;
        for (Element a = 0; a < m.size; ++a) {
            env.vars[f.name] = a;
            (holds(m, f.sub[0], env) ? yes : no) |= std::uint64_t{1} << a;
        }
        const Family& d = env.ufs.at(f.uf);
        // exists is the dual: not (forall not)
        return f.kind == K::UfForall ? d.count(yes) > 0 : d.count(no) == 0;
    }
    }
    return false;
}

/// The defining clauses of beta(M) over explicit families: universe = the given ultrafilters.
struct BetaOracle {
    std::vector<Family> points;
    std::map<std::string, std::set<std::vector<std::size_t>>> relations;
    std::map<std::string, std::map<std::vector<std::size_t>, std::size_t>> functions;
};

namespace detail {

// Iterated measure: is {x1 : {x2 : ... inner(x1..xk) ...} in D2} in D1?
template <class Inner>
bool nested(const std::vector<const Family*>& ds, std::size_t n, std::vector<Element>& xs, Inner&& inner) {
    const std::size_t depth = xs.size();
    if (depth == ds.size())
        return inner(xs);
    std::uint64_t set = 0;
    for (Element a = 0; a < n; ++a) {
        xs.push_back(a);
        if (nested(ds, n, xs, inner))
            set |= std::uint64_t{1} << a;
        xs.pop_back();
    }
    return ds[depth]->count(set) > 0;
}

inline void for_each_index_tuple(std::size_t base, std::size_t arity, auto&& fn) {
    std::vector<std::size_t> t(arity, 0);
    while (true) {
        fn(t);
        std::size_t i = arity;
        while (i > 0 && ++t[i - 1] == base)
            t[--i] = 0;
        if (i == 0)
            return;
    }
}

} // namespace detail

inline BetaOracle beta(const ufx::Model& m, const std::vector<Family>& points) {
    BetaOracle out{points, {}, {}};
    const std::size_t n = m.size;
    for (std::size_t p = 0; p < m.vocab.predicates().size(); ++p) {
        const auto& sym = m.vocab.predicates()[p];
        auto& rel = out.relations[sym.name];
        detail::for_each_index_tuple(points.size(), sym.arity, [&](const std::vector<std::size_t>& t) {
            std::vector<const Family*> ds;
            for (auto i : t)
                ds.push_back(&points[i]);
            std::vector<Element> xs;
            if (detail::nested(ds, n, xs, [&](const std::vector<Element>& x) {
                    return m.relations[p].count(ufx::Tuple(x.begin(), x.end())) > 0;
                }))
                rel.insert(t);
        });
    }
    for (std::size_t f = 0; f < m.vocab.functions().size(); ++f) {
        const auto& sym = m.vocab.functions()[f];
        auto& fun = out.functions[sym.name];
        detail::for_each_index_tuple(points.size(), sym.arity, [&](const std::vector<std::size_t>& t) {
            std::vector<const Family*> ds;
            for (auto i : t)
                ds.push_back(&points[i]);
            std::vector<std::size_t> candidates;
            for (std::size_t c = 0; c < points.size(); ++c) {
                bool ok = true;
                for (std::uint64_t a = 0; a < (std::uint64_t{1} << n) && ok; ++a) {
                    std::vector<Element> xs;
                    const bool image_in_a = detail::nested(ds, n, xs, [&](const std::vector<Element>& x) {
                        return ((a >> m.apply(f, ufx::Tuple(x.begin(), x.end()))) & 1u) != 0;
                    });
                    ok = image_in_a == (points[c].count(a) > 0);
                }
                if (ok)
                    candidates.push_back(c);
            }
            if (candidates.size() != 1)
                throw std::runtime_error("oracle: function value not unique");
            fun[t] = candidates.front();
        });
    }
    return out;
}

enum class Props : unsigned { Hom = 1, Injective = 2, Reflects = 4, Surjective = 8 };

/// Homomorphism / injective / reflecting relations on the image / surjective,
/// straight from the definitions, as a bit set of Props.
inline unsigned map_properties(const ufx::Model& a, const ufx::Model& b, const std::vector<Element>& h) {
    unsigned p = 0;
    bool hom = true, reflects = true;
    for (std::size_t r = 0; r < a.vocab.predicates().size(); ++r)
        ufx::for_each_tuple(a.size, a.vocab.predicates()[r].arity, [&](const ufx::Tuple& t) {
            ufx::Tuple img;
            for (auto x : t)
                img.push_back(h[x]);
            const bool src = a.relations[r].count(t) > 0, dst = b.relations[r].count(img) > 0;
            hom = hom && (!src || dst);
            reflects = reflects && (src || !dst);
        });
    for (std::size_t f = 0; f < a.vocab.functions().size(); ++f)
        ufx::for_each_tuple(a.size, a.vocab.functions()[f].arity, [&](const ufx::Tuple& t) {
            ufx::Tuple img;
            for (auto x : t)
                img.push_back(h[x]);
            hom = hom && h[a.apply(f, t)] == b.apply(f, img);
        });
    std::set<Element> image(h.begin(), h.end());
    if (hom)
        p |= unsigned(Props::Hom);
    if (image.size() == h.size())
        p |= unsigned(Props::Injective);
    if (reflects)
        p |= unsigned(Props::Reflects);
    if (image.size() == b.size)
        p |= unsigned(Props::Surjective);
    return p;
}

} // namespace oracle
