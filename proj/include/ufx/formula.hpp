#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ufx/model.hpp"
#include "ufx/ultrafilter.hpp"

namespace ufx {

/// A variable or a function application. Applications carry both the
/// symbol name and its index in the vocabulary they were resolved against.
struct Term {
    enum class Kind { Variable, Apply };

    Kind kind = Kind::Variable;
    std::string name;
    std::size_t symbol = 0;
    std::vector<Term> args;

    static Term variable(std::string name);
    /// Throws SemanticError on an unknown function or an arity mismatch.
    static Term apply(const Vocabulary& vocab, std::string_view function, std::vector<Term> args);

    friend bool operator==(const Term&, const Term&) = default;
};

/// First-order formula with classical and ultrafilter quantifiers.
///
/// Ultrafilter quantifiers name their ultrafilter by a parameter (`uf`) that
/// is bound at evaluation time through Assignment::ufs.
struct Formula {
    enum class Kind { Equal, Predicate, Not, And, Or, Implies, Forall, Exists, UfForall, UfExists };

    Kind kind = Kind::Equal;
    std::string name;          // predicate name, or the bound variable of a quantifier
    std::size_t symbol = 0;    // predicate index
    std::string uf;            // ultrafilter parameter of UfForall / UfExists
    std::vector<Term> terms;   // operands of Equal / Predicate
    std::vector<Formula> sub;  // children

    static Formula equal(Term lhs, Term rhs);
    static Formula predicate(const Vocabulary& vocab, std::string_view pred, std::vector<Term> args);
    static Formula negation(Formula f);
    static Formula conjunction(Formula a, Formula b);
    static Formula disjunction(Formula a, Formula b);
    static Formula implication(Formula a, Formula b);
    static Formula forall(std::string var, Formula body);
    static Formula exists(std::string var, Formula body);
    static Formula uf_forall(std::string uf, std::string var, Formula body);
    static Formula uf_exists(std::string uf, std::string var, Formula body);

    bool is_quantifier() const;

    friend bool operator==(const Formula&, const Formula&) = default;
};

std::set<std::string> free_variables(const Formula& f);
std::set<std::string> uf_parameters(const Formula& f);
int quantifier_depth(const Formula& f);
bool has_uf_quantifier(const Formula& f);

/// Throws SemanticError if some variable is bound twice on one path.
void check_bindings(const Formula& f);

/// Throws SemanticError unless every symbol of f resolves, by name and
/// index, to a symbol of the same arity in vocab.
void check_symbols(const Formula& f, const Vocabulary& vocab);

/// Concrete syntax (docs/formula_grammar.md):
///   ~ binds tighter than &, & than |, | than ->; -> is right associative;
///   forall/exists/Uforall[d]/Uexists[d] scope as far right as possible;
///   `t != s` abbreviates `~(t = s)`.
/// Throws ParseError (with 1-based line/column) or SemanticError.
Formula parse_formula(std::string_view text, const Vocabulary& vocab);

/// Fully parenthesized text that parses back to an equal AST.
std::string to_string(const Formula& f);
std::string to_string(const Term& t);

struct Assignment {
    std::map<std::string, Element> vars;
    std::map<std::string, FiniteUltrafilter> ufs;
};

/// Two-valued satisfaction. An ultrafilter quantifier (U-forall d x) phi
/// holds iff {i : phi(i)} is a member of a.ufs[d]; (U-exists d x) phi is
/// evaluated as ~(U-forall d x) ~phi. Throws SemanticError for missing
/// assignment entries, PreconditionError for an ultrafilter on a universe
/// of the wrong size or an invalid model.
bool evaluate(const Model& m, const Formula& f, const Assignment& a = {});

} // namespace ufx
