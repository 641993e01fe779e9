#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ufx/formula.hpp"
#include "ufx/model.hpp"

namespace ufx {

/// Seeded generator with platform-independent draws (the standard
/// distributions are implementation-defined, std::mt19937_64 is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    bool coin(std::uint64_t num = 1, std::uint64_t den = 2) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

struct VocabularyShape {
    int max_predicates = 2;
    int max_functions = 2;
    int max_arity = 2;
};

/// Predicates P0.. and functions F0.. with arities in [1, max_arity].
Vocabulary random_vocabulary(Rng& rng, const VocabularyShape& shape = {});

/// Each tuple enters each relation with probability 1/2; function values
/// are uniform.
Model random_model(Rng& rng, const Vocabulary& vocab, std::size_t size);

/// Random map witnesses that are homomorphisms by construction, cycling
/// through epimorphisms, isomorphic embeddings and their composites.
MapWitness random_homomorphism(Rng& rng, const Vocabulary& vocab, std::size_t max_size);

/// Uniform random total map (usually not a homomorphism).
MapWitness random_map(Rng& rng, const Model& source, const Model& target);

struct FormulaShape {
    int max_quantifier_depth = 3;
    int max_connective_depth = 3;
    std::vector<std::string> free_vars{"x"};
    /// Ultrafilter parameters the generator may quantify with.
    std::vector<std::string> uf_params{"e"};
};

/// A formula over vocab whose free variables are among shape.free_vars and
/// whose bound variables are fresh on every path.
Formula random_formula(Rng& rng, const Vocabulary& vocab, const FormulaShape& shape = {});

} // namespace ufx
