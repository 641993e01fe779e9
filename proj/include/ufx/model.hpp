#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ufx {

using Element = std::uint32_t;
using Tuple = std::vector<Element>;

/// Marks a function-table cell that has no value (a totality violation).
inline constexpr Element kUndefined = static_cast<Element>(-1);

struct Symbol {
    std::string name;
    int arity = 1;

    friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Predicate and function symbols. Equality is built in and never declared.
class Vocabulary {
public:
    Vocabulary() = default;
    Vocabulary(std::vector<Symbol> predicates, std::vector<Symbol> functions);

    /// Throws SemanticError on duplicate names, non-positive arities or a
    /// symbol named "=".
    void add_predicate(std::string name, int arity);
    void add_function(std::string name, int arity);

    const std::vector<Symbol>& predicates() const { return predicates_; }
    const std::vector<Symbol>& functions() const { return functions_; }

    std::optional<std::size_t> find_predicate(std::string_view name) const;
    std::optional<std::size_t> find_function(std::string_view name) const;
    bool declares(std::string_view name) const;

    friend bool operator==(const Vocabulary&, const Vocabulary&) = default;

private:
    std::vector<Symbol> predicates_;
    std::vector<Symbol> functions_;
};

/// A finite structure on the universe {0, ..., size-1}.
///
/// Relations are explicit tuple sets indexed like vocab.predicates().
/// Function tables are flat row-major arrays of length size^arity indexed
/// like vocab.functions(); tuple (a_1..a_k) lives at sum a_i * size^(k-i).
/// Cells may hold kUndefined or out-of-range values while a model is being
/// assembled; validate_model reports them.
struct Model {
    Vocabulary vocab;
    std::size_t size = 0;
    std::vector<std::set<Tuple>> relations;
    std::vector<std::vector<Element>> functions;

    /// Empty interpretations for every symbol; function cells kUndefined.
    static Model empty(Vocabulary vocab, std::size_t size);

    bool holds(std::size_t pred, const Tuple& args) const;
    Element apply(std::size_t func, const Tuple& args) const;
    void set_value(std::size_t func, const Tuple& args, Element value);

    /// Row-major offset of args in a table of the given arity.
    std::size_t table_index(const Tuple& args) const;
    std::size_t table_size(int arity) const;

    friend bool operator==(const Model&, const Model&) = default;
};

/// Calls fn(tuple) for every tuple in {0..size-1}^arity in lexicographic
/// order. The tuple reference is reused between calls.
template <typename Fn>
void for_each_tuple(std::size_t size, int arity, Fn&& fn) {
    Tuple t(static_cast<std::size_t>(arity), 0);
    if (arity > 0 && size == 0)
        return;
    while (true) {
        fn(static_cast<const Tuple&>(t));
        int i = arity - 1;
        while (i >= 0 && ++t[static_cast<std::size_t>(i)] == size) {
            t[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0)
            return;
    }
}

struct Violation {
    enum class Kind { ArityMismatch, OutOfRange, NotTotal, TableShape, EmptyUniverse };
    Kind kind;
    std::string symbol;
    Tuple tuple;
    std::string message;
};

/// Lists every broken Model invariant; empty iff the model is valid.
std::vector<Violation> validate_model(const Model& m);

/// A total map between the universes of two models.
struct MapWitness {
    Model source;
    Model target;
    std::vector<Element> map;
};

/// Strongest applicable label. Epimorphism and isomorphic embedding are
/// incomparable; a map that is both is an isomorphism.
enum class MapClass { NotHomomorphism, Homomorphism, Epimorphism, IsomorphicEmbedding, Isomorphism };

std::string_view to_string(MapClass c);

/// True when a map of class `actual` has every property that `required`
/// names (homomorphism, surjectivity, injective reflection).
bool at_least(MapClass actual, MapClass required);

/// Throws SemanticError on vocabulary mismatch and PreconditionError when
/// the map is not total, out of range, or either model is invalid.
MapClass classify_map(const MapWitness& w);

/// Composition g after h; requires h.target == g.source.
MapWitness compose(const MapWitness& h, const MapWitness& g);

MapWitness identity_map(const Model& m);

} // namespace ufx
