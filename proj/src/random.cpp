#include "ufx/random.hpp"

#include <algorithm>

namespace ufx {

Vocabulary random_vocabulary(Rng& rng, const VocabularyShape& shape) {
    Vocabulary v;
    const auto preds = rng.below(static_cast<std::uint64_t>(shape.max_predicates) + 1);
    const auto funcs = rng.below(static_cast<std::uint64_t>(shape.max_functions) + 1);
    for (std::uint64_t i = 0; i < preds; ++i)
        v.add_predicate("P" + std::to_string(i), static_cast<int>(rng.between(1, static_cast<std::uint64_t>(shape.max_arity))));
    for (std::uint64_t i = 0; i < funcs; ++i)
        v.add_function("F" + std::to_string(i), static_cast<int>(rng.between(1, static_cast<std::uint64_t>(shape.max_arity))));
    return v;
}

Model random_model(Rng& rng, const Vocabulary& vocab, std::size_t size) {
    Model m = Model::empty(vocab, size);
    for (std::size_t p = 0; p < vocab.predicates().size(); ++p)
        for_each_tuple(size, vocab.predicates()[p].arity, [&](const Tuple& t) {
            if (rng.coin())
                m.relations[p].insert(t);
        });
    for (std::size_t f = 0; f < vocab.functions().size(); ++f)
        for (auto& cell : m.functions[f])
            cell = static_cast<Element>(rng.below(size));
    return m;
}

MapWitness random_map(Rng& rng, const Model& source, const Model& target) {
    MapWitness w{source, target, std::vector<Element>(source.size)};
    for (auto& v : w.map)
        v = static_cast<Element>(rng.below(target.size));
    return w;
}

namespace {

Tuple image(const std::vector<Element>& h, const Tuple& t) {
    Tuple out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        out[i] = h[t[i]];
    return out;
}

// A random target and a surjection onto it from a source built as a
// preimage: source relations are random subsets of the pulled-back ones and
// source function values are random points of the required fibre.
MapWitness random_epimorphism(Rng& rng, const Vocabulary& vocab, std::size_t max_size) {
    const std::size_t t_size = rng.between(1, max_size);
    const std::size_t s_size = rng.between(t_size, max_size);
    Model target = random_model(rng, vocab, t_size);

    std::vector<Element> h(s_size);
    for (Element i = 0; i < s_size; ++i)
        h[i] = i < t_size ? i : static_cast<Element>(rng.below(t_size));
    for (std::size_t i = s_size; i > 1; --i)
        std::swap(h[i - 1], h[rng.below(i)]);

    std::vector<std::vector<Element>> fibre(t_size);
    for (Element i = 0; i < s_size; ++i)
        fibre[h[i]].push_back(i);

    Model source = Model::empty(vocab, s_size);
    for (std::size_t p = 0; p < vocab.predicates().size(); ++p)
        for_each_tuple(s_size, vocab.predicates()[p].arity, [&](const Tuple& t) {
            if (target.holds(p, image(h, t)) && rng.coin(3, 4))
                source.relations[p].insert(t);
        });
    for (std::size_t f = 0; f < vocab.functions().size(); ++f)
        for_each_tuple(s_size, vocab.functions()[f].arity, [&](const Tuple& t) {
            const auto& choices = fibre[target.apply(f, image(h, t))];
            source.set_value(f, t, choices[rng.below(choices.size())]);
        });
    return {std::move(source), std::move(target), std::move(h)};
}

// A random source placed injectively into a larger target; structure on the
// image copies the source exactly, structure touching new points is random.
MapWitness random_embedding(Rng& rng, const Vocabulary& vocab, std::size_t max_size) {
    const std::size_t s_size = rng.between(1, max_size);
    const std::size_t t_size = rng.between(s_size, max_size);
    Model source = random_model(rng, vocab, s_size);

    std::vector<Element> slots(t_size);
    for (Element i = 0; i < t_size; ++i)
        slots[i] = i;
    for (std::size_t i = t_size; i > 1; --i)
        std::swap(slots[i - 1], slots[rng.below(i)]);
    std::vector<Element> h(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(s_size));
    std::vector<std::optional<Element>> back(t_size);
    for (Element i = 0; i < s_size; ++i)
        back[h[i]] = i;
    auto preimage = [&](const Tuple& t) -> std::optional<Tuple> {
        Tuple out(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (!back[t[i]])
                return std::nullopt;
            out[i] = *back[t[i]];
        }
        return out;
    };

    Model target = Model::empty(vocab, t_size);
    for (std::size_t p = 0; p < vocab.predicates().size(); ++p)
        for_each_tuple(t_size, vocab.predicates()[p].arity, [&](const Tuple& t) {
            auto pre = preimage(t);
            if (pre ? source.holds(p, *pre) : rng.coin())
                target.relations[p].insert(t);
        });
    for (std::size_t f = 0; f < vocab.functions().size(); ++f)
        for_each_tuple(t_size, vocab.functions()[f].arity, [&](const Tuple& t) {
            auto pre = preimage(t);
            target.set_value(f, t, pre ? h[source.apply(f, *pre)] : static_cast<Element>(rng.below(t_size)));
        });
    return {std::move(source), std::move(target), std::move(h)};
}

} // namespace

MapWitness random_homomorphism(Rng& rng, const Vocabulary& vocab, std::size_t max_size) {
    switch (rng.below(3)) {
    case 0: return random_epimorphism(rng, vocab, max_size);
    case 1: return random_embedding(rng, vocab, max_size);
    default: {
        // epimorphism onto a middle model, then an embedding of that model
        MapWitness outer = random_embedding(rng, vocab, max_size);
        const Model& middle = outer.source;
        std::vector<std::vector<Element>> fibre(middle.size);
        const std::size_t s_size = rng.between(middle.size, max_size);
        std::vector<Element> h(s_size);
        for (Element i = 0; i < s_size; ++i)
            h[i] = i < middle.size ? i : static_cast<Element>(rng.below(middle.size));
        for (Element i = 0; i < s_size; ++i)
            fibre[h[i]].push_back(i);
        Model source = Model::empty(vocab, s_size);
        for (std::size_t p = 0; p < vocab.predicates().size(); ++p)
            for_each_tuple(s_size, vocab.predicates()[p].arity, [&](const Tuple& t) {
                if (middle.holds(p, image(h, t)) && rng.coin(3, 4))
                    source.relations[p].insert(t);
            });
        for (std::size_t f = 0; f < vocab.functions().size(); ++f)
            for_each_tuple(s_size, vocab.functions()[f].arity, [&](const Tuple& t) {
                const auto& choices = fibre[middle.apply(f, image(h, t))];
                source.set_value(f, t, choices[rng.below(choices.size())]);
            });
        return compose(MapWitness{std::move(source), middle, std::move(h)}, outer);
    }
    }
}

namespace {

class FormulaGenerator {
public:
    FormulaGenerator(Rng& rng, const Vocabulary& vocab, const FormulaShape& shape)
        : rng_(rng), vocab_(vocab), shape_(shape), scope_(shape.free_vars) {}

    Formula formula(int qdepth, int cdepth) {
        const std::uint64_t roll = rng_.below(10);
        if ((qdepth == 0 && cdepth == 0) || roll < 2)
            return atom();
        if (qdepth > 0 && roll < 6)
            return quantified(qdepth, cdepth);
        if (cdepth == 0)
            return atom();
        switch (rng_.below(4)) {
        case 0: return Formula::negation(formula(qdepth, cdepth - 1));
        case 1: return Formula::conjunction(formula(qdepth, cdepth - 1), formula(qdepth, cdepth - 1));
        case 2: return Formula::disjunction(formula(qdepth, cdepth - 1), formula(qdepth, cdepth - 1));
        default: return Formula::implication(formula(qdepth, cdepth - 1), formula(qdepth, cdepth - 1));
        }
    }

private:
    Formula quantified(int qdepth, int cdepth) {
        std::string v = "v" + std::to_string(counter_++);
        scope_.push_back(v);
        Formula body = formula(qdepth - 1, cdepth);
        scope_.pop_back();
        const std::uint64_t kind = rng_.below(shape_.uf_params.empty() ? 2 : 4);
        switch (kind) {
        case 0: return Formula::forall(v, std::move(body));
        case 1: return Formula::exists(v, std::move(body));
        case 2: return Formula::uf_forall(pick(shape_.uf_params), v, std::move(body));
        default: return Formula::uf_exists(pick(shape_.uf_params), v, std::move(body));
        }
    }

    const std::string& pick(const std::vector<std::string>& xs) { return xs[rng_.below(xs.size())]; }

    Term term(int depth) {
        if (scope_.empty() && vocab_.functions().empty())
            return Term::variable("x");  // unreachable with a non-empty scope
        if (depth > 0 && !vocab_.functions().empty() && rng_.coin(1, 3)) {
            const auto& f = vocab_.functions()[rng_.below(vocab_.functions().size())];
            std::vector<Term> args;
            for (int i = 0; i < f.arity; ++i)
                args.push_back(term(depth - 1));
            return Term::apply(vocab_, f.name, std::move(args));
        }
        return Term::variable(pick(scope_));
    }

    Formula atom() {
        if (vocab_.predicates().empty() || rng_.coin(1, 4))
            return Formula::equal(term(1), term(1));
        const auto& p = vocab_.predicates()[rng_.below(vocab_.predicates().size())];
        std::vector<Term> args;
        for (int i = 0; i < p.arity; ++i)
            args.push_back(term(1));
        return Formula::predicate(vocab_, p.name, std::move(args));
    }

    Rng& rng_;
    const Vocabulary& vocab_;
    const FormulaShape& shape_;
    std::vector<std::string> scope_;
    int counter_ = 0;
};

} // namespace

Formula random_formula(Rng& rng, const Vocabulary& vocab, const FormulaShape& shape) {
    FormulaGenerator gen(rng, vocab, shape);
    return gen.formula(static_cast<int>(rng.below(static_cast<std::uint64_t>(shape.max_quantifier_depth) + 1)),
                       shape.max_connective_depth);
}

} // namespace ufx
