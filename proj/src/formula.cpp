#include "ufx/formula.hpp"

#include <algorithm>

#include "ufx/error.hpp"

namespace ufx {

Term Term::variable(std::string name) {
    Term t;
    t.kind = Kind::Variable;
    t.name = std::move(name);
    return t;
}

Term Term::apply(const Vocabulary& vocab, std::string_view function, std::vector<Term> args) {
    auto idx = vocab.find_function(function);
    if (!idx)
        throw SemanticError("unknown function symbol " + std::string(function));
    const int arity = vocab.functions()[*idx].arity;
    if (args.size() != static_cast<std::size_t>(arity))
        throw SemanticError("function " + std::string(function) + " expects " + std::to_string(arity) +
                            " arguments, got " + std::to_string(args.size()));
    Term t;
    t.kind = Kind::Apply;
    t.name = std::string(function);
    t.symbol = *idx;
    t.args = std::move(args);
    return t;
}

namespace {

Formula node(Formula::Kind kind, std::vector<Formula> sub) {
    Formula f;
    f.kind = kind;
    f.sub = std::move(sub);
    return f;
}

Formula quant(Formula::Kind kind, std::string uf, std::string var, Formula body) {
    Formula f = node(kind, {});
    f.sub.push_back(std::move(body));
    f.name = std::move(var);
    f.uf = std::move(uf);
    return f;
}

void term_variables(const Term& t, std::set<std::string>& out) {
    if (t.kind == Term::Kind::Variable)
        out.insert(t.name);
    for (const auto& a : t.args)
        term_variables(a, out);
}

void free_vars(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    if (f.kind == Formula::Kind::Equal || f.kind == Formula::Kind::Predicate) {
        std::set<std::string> vs;
        for (const auto& t : f.terms)
            term_variables(t, vs);
        for (const auto& v : vs)
            if (!bound.count(v))
                out.insert(v);
        return;
    }
    if (f.is_quantifier()) {
        bool fresh = bound.insert(f.name).second;
        free_vars(f.sub[0], bound, out);
        if (fresh)
            bound.erase(f.name);
        return;
    }
    for (const auto& s : f.sub)
        free_vars(s, bound, out);
}

void check_term(const Term& t, const Vocabulary& vocab) {
    if (t.kind == Term::Kind::Variable)
        return;
    const auto& fs = vocab.functions();
    if (t.symbol >= fs.size() || fs[t.symbol].name != t.name)
        throw SemanticError("function symbol " + t.name + " is not declared in the model's vocabulary");
    if (t.args.size() != static_cast<std::size_t>(fs[t.symbol].arity))
        throw SemanticError("function " + t.name + " applied to " + std::to_string(t.args.size()) +
                            " arguments, expected " + std::to_string(fs[t.symbol].arity));
    for (const auto& a : t.args)
        check_term(a, vocab);
}

void bindings(const Formula& f, std::set<std::string>& bound) {
    if (f.is_quantifier()) {
        if (!bound.insert(f.name).second)
            throw SemanticError("variable " + f.name + " is bound twice on one path");
        bindings(f.sub[0], bound);
        bound.erase(f.name);
        return;
    }
    for (const auto& s : f.sub)
        bindings(s, bound);
}

} // namespace

Formula Formula::equal(Term lhs, Term rhs) {
    Formula f;
    f.kind = Kind::Equal;
    f.name = "=";
    f.terms = {std::move(lhs), std::move(rhs)};
    return f;
}

Formula Formula::predicate(const Vocabulary& vocab, std::string_view pred, std::vector<Term> args) {
    auto idx = vocab.find_predicate(pred);
    if (!idx)
        throw SemanticError("unknown predicate symbol " + std::string(pred));
    const int arity = vocab.predicates()[*idx].arity;
    if (args.size() != static_cast<std::size_t>(arity))
        throw SemanticError("predicate " + std::string(pred) + " expects " + std::to_string(arity) +
                            " arguments, got " + std::to_string(args.size()));
    Formula f;
    f.kind = Kind::Predicate;
    f.name = std::string(pred);
    f.symbol = *idx;
    f.terms = std::move(args);
    return f;
}

Formula Formula::negation(Formula f) { return node(Kind::Not, {std::move(f)}); }
Formula Formula::conjunction(Formula a, Formula b) { return node(Kind::And, {std::move(a), std::move(b)}); }
Formula Formula::disjunction(Formula a, Formula b) { return node(Kind::Or, {std::move(a), std::move(b)}); }
Formula Formula::implication(Formula a, Formula b) { return node(Kind::Implies, {std::move(a), std::move(b)}); }
Formula Formula::forall(std::string var, Formula body) { return quant(Kind::Forall, "", std::move(var), std::move(body)); }
Formula Formula::exists(std::string var, Formula body) { return quant(Kind::Exists, "", std::move(var), std::move(body)); }

Formula Formula::uf_forall(std::string uf, std::string var, Formula body) {
    return quant(Kind::UfForall, std::move(uf), std::move(var), std::move(body));
}

Formula Formula::uf_exists(std::string uf, std::string var, Formula body) {
    return quant(Kind::UfExists, std::move(uf), std::move(var), std::move(body));
}

bool Formula::is_quantifier() const {
    return kind == Kind::Forall || kind == Kind::Exists || kind == Kind::UfForall || kind == Kind::UfExists;
}

std::set<std::string> free_variables(const Formula& f) {
    std::set<std::string> bound, out;
    free_vars(f, bound, out);
    return out;
}

std::set<std::string> uf_parameters(const Formula& f) {
    std::set<std::string> out;
    if (f.kind == Formula::Kind::UfForall || f.kind == Formula::Kind::UfExists)
        out.insert(f.uf);
    for (const auto& s : f.sub)
        out.merge(uf_parameters(s));
    return out;
}

int quantifier_depth(const Formula& f) {
    int d = 0;
    for (const auto& s : f.sub)
        d = std::max(d, quantifier_depth(s));
    return d + (f.is_quantifier() ? 1 : 0);
}

bool has_uf_quantifier(const Formula& f) {
    if (f.kind == Formula::Kind::UfForall || f.kind == Formula::Kind::UfExists)
        return true;
    return std::any_of(f.sub.begin(), f.sub.end(), [](const Formula& s) { return has_uf_quantifier(s); });
}

void check_bindings(const Formula& f) {
    std::set<std::string> bound;
    bindings(f, bound);
}

void check_symbols(const Formula& f, const Vocabulary& vocab) {
    if (f.kind == Formula::Kind::Predicate) {
        const auto& ps = vocab.predicates();
        if (f.symbol >= ps.size() || ps[f.symbol].name != f.name)
            throw SemanticError("predicate symbol " + f.name + " is not declared in the model's vocabulary");
        if (f.terms.size() != static_cast<std::size_t>(ps[f.symbol].arity))
            throw SemanticError("predicate " + f.name + " applied to " + std::to_string(f.terms.size()) +
                                " arguments, expected " + std::to_string(ps[f.symbol].arity));
    }
    for (const auto& t : f.terms)
        check_term(t, vocab);
    for (const auto& s : f.sub)
        check_symbols(s, vocab);
}

std::string to_string(const Term& t) {
    if (t.kind == Term::Kind::Variable)
        return t.name;
    std::string out = t.name + "(";
    for (std::size_t i = 0; i < t.args.size(); ++i)
        out += (i ? ", " : "") + to_string(t.args[i]);
    return out + ")";
}

namespace {

// Quantifiers scope maximally right, so one on the left of a binary
// connective needs its own parentheses.
std::string left_operand(const Formula& f) { return f.is_quantifier() ? "(" + to_string(f) + ")" : to_string(f); }

} // namespace

std::string to_string(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind) {
    case K::Equal:
        return to_string(f.terms[0]) + " = " + to_string(f.terms[1]);
    case K::Predicate: {
        std::string out = f.name + "(";
        for (std::size_t i = 0; i < f.terms.size(); ++i)
            out += (i ? ", " : "") + to_string(f.terms[i]);
        return out + ")";
    }
    case K::Not: {
        const Formula& s = f.sub[0];
        bool atomic = s.kind == K::Predicate;
        return atomic ? "~" + to_string(s) : "~(" + to_string(s) + ")";
    }
    case K::And: return "(" + left_operand(f.sub[0]) + " & " + to_string(f.sub[1]) + ")";
    case K::Or: return "(" + left_operand(f.sub[0]) + " | " + to_string(f.sub[1]) + ")";
    case K::Implies: return "(" + left_operand(f.sub[0]) + " -> " + to_string(f.sub[1]) + ")";
    case K::Forall: return "forall " + f.name + " (" + to_string(f.sub[0]) + ")";
    case K::Exists: return "exists " + f.name + " (" + to_string(f.sub[0]) + ")";
    case K::UfForall: return "Uforall[" + f.uf + "] " + f.name + " (" + to_string(f.sub[0]) + ")";
    case K::UfExists: return "Uexists[" + f.uf + "] " + f.name + " (" + to_string(f.sub[0]) + ")";
    }
    return {};
}

} // namespace ufx
