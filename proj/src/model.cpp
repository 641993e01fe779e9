#include "ufx/model.hpp"

#include <algorithm>
#include <sstream>

#include "ufx/error.hpp"

namespace ufx {

Vocabulary::Vocabulary(std::vector<Symbol> predicates, std::vector<Symbol> functions) {
    for (auto& p : predicates)
        add_predicate(std::move(p.name), p.arity);
    for (auto& f : functions)
        add_function(std::move(f.name), f.arity);
}

namespace {

void check_symbol(const Vocabulary& v, const std::string& name, int arity) {
    if (name.empty())
        throw SemanticError("empty symbol name");
    if (name == "=")
        throw SemanticError("equality is built in and cannot be declared");
    if (arity < 1)
        throw SemanticError("symbol " + name + " has non-positive arity " + std::to_string(arity));
    if (v.declares(name))
        throw SemanticError("duplicate symbol " + name);
}

std::optional<std::size_t> find_in(const std::vector<Symbol>& syms, std::string_view name) {
    for (std::size_t i = 0; i < syms.size(); ++i)
        if (syms[i].name == name)
            return i;
    return std::nullopt;
}

std::string tuple_text(const Tuple& t) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < t.size(); ++i)
        os << (i ? "," : "") << t[i];
    os << ')';
    return os.str();
}

} // namespace

void Vocabulary::add_predicate(std::string name, int arity) {
    check_symbol(*this, name, arity);
    predicates_.push_back({std::move(name), arity});
}

void Vocabulary::add_function(std::string name, int arity) {
    check_symbol(*this, name, arity);
    functions_.push_back({std::move(name), arity});
}

std::optional<std::size_t> Vocabulary::find_predicate(std::string_view name) const {
    return find_in(predicates_, name);
}

std::optional<std::size_t> Vocabulary::find_function(std::string_view name) const {
    return find_in(functions_, name);
}

bool Vocabulary::declares(std::string_view name) const {
    return find_predicate(name) || find_function(name);
}

Model Model::empty(Vocabulary vocab, std::size_t size) {
    Model m;
    m.size = size;
    m.relations.resize(vocab.predicates().size());
    for (const auto& f : vocab.functions())
        m.functions.emplace_back(m.table_size(f.arity), kUndefined);
    m.vocab = std::move(vocab);
    return m;
}

std::size_t Model::table_size(int arity) const {
    std::size_t n = 1;
    for (int i = 0; i < arity; ++i)
        n *= size;
    return n;
}

std::size_t Model::table_index(const Tuple& args) const {
    std::size_t idx = 0;
    for (Element a : args)
        idx = idx * size + a;
    return idx;
}

bool Model::holds(std::size_t pred, const Tuple& args) const {
    return relations[pred].count(args) != 0;
}

Element Model::apply(std::size_t func, const Tuple& args) const {
    return functions[func][table_index(args)];
}

void Model::set_value(std::size_t func, const Tuple& args, Element value) {
    functions[func][table_index(args)] = value;
}

std::vector<Violation> validate_model(const Model& m) {
    std::vector<Violation> out;
    if (m.size == 0)
        out.push_back({Violation::Kind::EmptyUniverse, "", {}, "universe is empty"});

    const auto& preds = m.vocab.predicates();
    if (m.relations.size() != preds.size())
        out.push_back({Violation::Kind::TableShape, "", {},
                       "relation count " + std::to_string(m.relations.size()) + " does not match vocabulary"});
    for (std::size_t p = 0; p < std::min(preds.size(), m.relations.size()); ++p) {
        for (const Tuple& t : m.relations[p]) {
            if (t.size() != static_cast<std::size_t>(preds[p].arity)) {
                out.push_back({Violation::Kind::ArityMismatch, preds[p].name, t,
                               preds[p].name + ": tuple " + tuple_text(t) + " has arity " +
                                   std::to_string(t.size()) + ", expected " + std::to_string(preds[p].arity)});
                continue;
            }
            if (std::any_of(t.begin(), t.end(), [&](Element e) { return e >= m.size; }))
                out.push_back({Violation::Kind::OutOfRange, preds[p].name, t,
                               preds[p].name + ": tuple " + tuple_text(t) + " leaves universe of size " +
                                   std::to_string(m.size)});
        }
    }

    const auto& funcs = m.vocab.functions();
    if (m.functions.size() != funcs.size())
        out.push_back({Violation::Kind::TableShape, "", {},
                       "function count " + std::to_string(m.functions.size()) + " does not match vocabulary"});
    for (std::size_t f = 0; f < std::min(funcs.size(), m.functions.size()); ++f) {
        const auto& table = m.functions[f];
        if (table.size() != m.table_size(funcs[f].arity)) {
            out.push_back({Violation::Kind::TableShape, funcs[f].name, {},
                           funcs[f].name + ": table has " + std::to_string(table.size()) + " cells, expected " +
                               std::to_string(m.table_size(funcs[f].arity))});
            continue;
        }
        for_each_tuple(m.size, funcs[f].arity, [&](const Tuple& t) {
            Element v = table[m.table_index(t)];
            if (v == kUndefined)
                out.push_back({Violation::Kind::NotTotal, funcs[f].name, t,
                               funcs[f].name + ": no value for " + tuple_text(t)});
            else if (v >= m.size)
                out.push_back({Violation::Kind::OutOfRange, funcs[f].name, t,
                               funcs[f].name + tuple_text(t) + " = " + std::to_string(v) +
                                   " leaves universe of size " + std::to_string(m.size)});
        });
    }
    return out;
}

std::string_view to_string(MapClass c) {
    switch (c) {
    case MapClass::NotHomomorphism: return "not-homomorphism";
    case MapClass::Homomorphism: return "homomorphism";
    case MapClass::Epimorphism: return "epimorphism";
    case MapClass::IsomorphicEmbedding: return "isomorphic-embedding";
    case MapClass::Isomorphism: return "isomorphism";
    }
    return "?";
}

namespace {

struct Properties {
    bool hom = false;
    bool surjective = false;
    bool embedding = false;
};

Properties properties_of(MapClass c) {
    switch (c) {
    case MapClass::NotHomomorphism: return {};
    case MapClass::Homomorphism: return {true, false, false};
    case MapClass::Epimorphism: return {true, true, false};
    case MapClass::IsomorphicEmbedding: return {true, false, true};
    case MapClass::Isomorphism: return {true, true, true};
    }
    return {};
}

} // namespace

bool at_least(MapClass actual, MapClass required) {
    Properties a = properties_of(actual);
    Properties r = properties_of(required);
    return (a.hom || !r.hom) && (a.surjective || !r.surjective) && (a.embedding || !r.embedding);
}

MapClass classify_map(const MapWitness& w) {
    if (!(w.source.vocab == w.target.vocab))
        throw SemanticError("classify_map: source and target vocabularies differ");
    if (!validate_model(w.source).empty() || !validate_model(w.target).empty())
        throw PreconditionError("classify_map: source or target model is invalid");
    if (w.map.size() != w.source.size)
        throw PreconditionError("classify_map: map has " + std::to_string(w.map.size()) +
                                " entries for a source of size " + std::to_string(w.source.size));
    for (Element v : w.map)
        if (v >= w.target.size)
            throw PreconditionError("classify_map: map value " + std::to_string(v) + " outside target");

    const Model& s = w.source;
    const Model& t = w.target;
    auto image = [&](const Tuple& args) {
        Tuple out(args.size());
        for (std::size_t i = 0; i < args.size(); ++i)
            out[i] = w.map[args[i]];
        return out;
    };

    for (std::size_t p = 0; p < s.relations.size(); ++p)
        for (const Tuple& tup : s.relations[p])
            if (!t.holds(p, image(tup)))
                return MapClass::NotHomomorphism;
    for (std::size_t f = 0; f < s.functions.size(); ++f) {
        bool ok = true;
        for_each_tuple(s.size, s.vocab.functions()[f].arity, [&](const Tuple& args) {
            if (ok && w.map[s.apply(f, args)] != t.apply(f, image(args)))
                ok = false;
        });
        if (!ok)
            return MapClass::NotHomomorphism;
    }

    std::vector<bool> hit(t.size, false);
    std::vector<std::optional<Element>> preimage(t.size);
    bool injective = true;
    for (Element a = 0; a < s.size; ++a) {
        if (hit[w.map[a]])
            injective = false;
        hit[w.map[a]] = true;
        preimage[w.map[a]] = a;
    }
    bool surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });

    bool reflects = injective;
    for (std::size_t p = 0; reflects && p < t.relations.size(); ++p) {
        for (const Tuple& tup : t.relations[p]) {
            Tuple back(tup.size());
            bool in_image = true;
            for (std::size_t i = 0; i < tup.size() && in_image; ++i) {
                if (!preimage[tup[i]])
                    in_image = false;
                else
                    back[i] = *preimage[tup[i]];
            }
            if (in_image && !s.holds(p, back)) {
                reflects = false;
                break;
            }
        }
    }

    if (reflects && surjective)
        return MapClass::Isomorphism;
    if (reflects)
        return MapClass::IsomorphicEmbedding;
    if (surjective)
        return MapClass::Epimorphism;
    return MapClass::Homomorphism;
}

MapWitness compose(const MapWitness& h, const MapWitness& g) {
    if (!(h.target == g.source))
        throw PreconditionError("compose: maps are not composable");
    MapWitness out{h.source, g.target, std::vector<Element>(h.map.size())};
    for (std::size_t i = 0; i < h.map.size(); ++i)
        out.map[i] = g.map[h.map[i]];
    return out;
}

MapWitness identity_map(const Model& m) {
    MapWitness w{m, m, std::vector<Element>(m.size)};
    for (Element i = 0; i < m.size; ++i)
        w.map[i] = i;
    return w;
}

} // namespace ufx
