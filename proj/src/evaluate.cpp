#include <map>

#include "ufx/error.hpp"
#include "ufx/formula.hpp"

namespace ufx {

namespace {

// Formula compiled against one model and assignment: variables become slots
// in a flat environment, ultrafilter parameters become pointers.
class Evaluator {
public:
    Evaluator(const Model& m, const Formula& f, const Assignment& a) : model_(m) {
        for (const auto& v : free_variables(f)) {
            auto it = a.vars.find(v);
            if (it == a.vars.end())
                throw SemanticError("no value assigned to free variable " + v);
            if (it->second >= m.size)
                throw PreconditionError("variable " + v + " assigned " + std::to_string(it->second) +
                                        " outside universe of size " + std::to_string(m.size));
        }
        root_ = compile(f, a);
        env_.assign(slots_.size(), 0);
        for (const auto& [name, slot] : slots_)
            if (auto it = a.vars.find(name); it != a.vars.end())
                env_[static_cast<std::size_t>(slot)] = it->second;
    }

    bool run() { return eval(root_); }

private:
    struct CTerm {
        int slot = -1;
        std::size_t func = 0;
        std::vector<CTerm> args;
    };

    struct CNode {
        Formula::Kind kind = Formula::Kind::Equal;
        int slot = -1;
        std::size_t pred = 0;
        const FiniteUltrafilter* uf = nullptr;
        std::vector<CTerm> terms;
        std::vector<CNode> sub;
        std::vector<int> context;  // free slots of a U-quantifier body, minus the bound one
        std::map<std::vector<Element>, Subset> memo;
    };

    int slot_of(const std::string& name) {
        auto [it, fresh] = slots_.emplace(name, static_cast<int>(slots_.size()));
        return it->second;
    }

    CTerm compile(const Term& t) {
        CTerm c;
        if (t.kind == Term::Kind::Variable) {
            c.slot = slot_of(t.name);
            return c;
        }
        c.func = t.symbol;
        for (const auto& a : t.args)
            c.args.push_back(compile(a));
        return c;
    }

    CNode compile(const Formula& f, const Assignment& a) {
        CNode c;
        c.kind = f.kind;
        c.pred = f.symbol;
        for (const auto& t : f.terms)
            c.terms.push_back(compile(t));
        if (f.is_quantifier())
            c.slot = slot_of(f.name);
        if (f.kind == Formula::Kind::UfForall || f.kind == Formula::Kind::UfExists) {
            auto it = a.ufs.find(f.uf);
            if (it == a.ufs.end())
                throw SemanticError("no ultrafilter assigned to parameter " + f.uf);
            if (it->second.universe() != model_.size)
                throw PreconditionError("ultrafilter " + f.uf + " lives on a universe of size " +
                                        std::to_string(it->second.universe()) + ", model has " +
                                        std::to_string(model_.size));
            c.uf = &it->second;
            for (const auto& v : free_variables(f))
                c.context.push_back(slot_of(v));
        }
        for (const auto& s : f.sub)
            c.sub.push_back(compile(s, a));
        return c;
    }

    Element value(const CTerm& t) const {
        if (t.slot >= 0)
            return env_[static_cast<std::size_t>(t.slot)];
        std::size_t idx = 0;
        for (const auto& a : t.args)
            idx = idx * model_.size + value(a);
        return model_.functions[t.func][idx];
    }

    bool eval(CNode& n) {
        using K = Formula::Kind;
        switch (n.kind) {
        case K::Equal: return value(n.terms[0]) == value(n.terms[1]);
        case K::Predicate: {
            Tuple args(n.terms.size());
            for (std::size_t i = 0; i < args.size(); ++i)
                args[i] = value(n.terms[i]);
            return model_.holds(n.pred, args);
        }
        case K::Not: return !eval(n.sub[0]);
        case K::And: return eval(n.sub[0]) && eval(n.sub[1]);
        case K::Or: return eval(n.sub[0]) || eval(n.sub[1]);
        case K::Implies: return !eval(n.sub[0]) || eval(n.sub[1]);
        case K::Forall:
        case K::Exists: {
            const bool want = n.kind == K::Exists;
            Element& x = env_[static_cast<std::size_t>(n.slot)];
            const Element saved = x;
            bool result = !want;
            for (Element i = 0; i < model_.size; ++i) {
                x = i;
                if (eval(n.sub[0]) == want) {
                    result = want;
                    break;
                }
            }
            x = saved;
            return result;
        }
        case K::UfForall:
            return n.uf->contains(definable_set(n));
        case K::UfExists: {
            Subset s = definable_set(n);
            s.flip();
            return !n.uf->contains(s);
        }
        }
        return false;
    }

    // {i < n : body holds with the bound variable set to i}
    const Subset& definable_set(CNode& n) {
        std::vector<Element> key;
        key.reserve(n.context.size());
        for (int s : n.context)
            key.push_back(env_[static_cast<std::size_t>(s)]);
        auto it = n.memo.find(key);
        if (it != n.memo.end())
            return it->second;
        Element& x = env_[static_cast<std::size_t>(n.slot)];
        const Element saved = x;
        Subset set(model_.size, false);
        for (Element i = 0; i < model_.size; ++i) {
            x = i;
            set[i] = eval(n.sub[0]);
        }
        x = saved;
        return n.memo.emplace(std::move(key), std::move(set)).first->second;
    }

    const Model& model_;
    std::map<std::string, int> slots_;
    CNode root_;
    std::vector<Element> env_;
};

} // namespace

bool evaluate(const Model& m, const Formula& f, const Assignment& a) {
    if (!validate_model(m).empty())
        throw PreconditionError("evaluate: model is invalid");
    check_symbols(f, m.vocab);
    return Evaluator(m, f, a).run();
}

} // namespace ufx
