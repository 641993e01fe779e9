#include "ufx/model_io.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ufx/error.hpp"

namespace ufx {

namespace {

using json = nlohmann::json;

class LineCursor {
public:
    LineCursor(std::string_view line, std::size_t lineno) : line_(line), lineno_(lineno) {}

    void skip_ws() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_])))
            ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= line_.size();
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < line_.size() && line_[pos_] == c;
    }
    void expect(std::string_view lit) {
        skip_ws();
        if (line_.substr(pos_, lit.size()) != lit)
            fail("expected '" + std::string(lit) + "'");
        pos_ += lit.size();
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < line_.size() &&
               (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_'))
            ++pos_;
        if (start == pos_)
            fail("expected identifier");
        return std::string(line_.substr(start, pos_ - start));
    }
    std::uint64_t number() {
        skip_ws();
        std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(line_[pos_] - '0');
            if (v > 0xFFFFFFFEull)
                fail("number too large");
            ++pos_;
        }
        if (start == pos_)
            fail("expected number");
        return v;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, lineno_, pos_ + 1); }
    std::size_t lineno() const { return lineno_; }

private:
    std::string_view line_;
    std::size_t lineno_;
    std::size_t pos_ = 0;
};

[[noreturn]] void semantic(std::size_t lineno, const std::string& what) {
    throw SemanticError("line " + std::to_string(lineno) + ": " + what);
}

Tuple read_group(LineCursor& c) {
    Tuple t;
    t.push_back(static_cast<Element>(c.number()));
    while (c.peek(',')) {
        c.expect(",");
        t.push_back(static_cast<Element>(c.number()));
    }
    return t;
}

void check_range(const Tuple& t, std::size_t size, std::size_t lineno, const std::string& sym) {
    for (Element e : t)
        if (e >= size)
            semantic(lineno, sym + ": index " + std::to_string(e) + " outside universe of size " +
                                 std::to_string(size));
}

void check_complete(const Model& m) {
    for (const auto& v : validate_model(m)) {
        if (v.kind == Violation::Kind::NotTotal)
            throw SemanticError("function " + v.message + " (non-total function)");
        throw SemanticError(v.message);
    }
}

} // namespace

Model parse_model(std::string_view text) {
    Vocabulary vocab;
    std::optional<Model> model;
    bool in_vocab = false;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_lines;

    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        LineCursor c(line, lineno);
        if (c.at_end())
            continue;
        std::string kw = c.word();

        if (kw == "vocab") {
            if (in_vocab || model || !vocab.predicates().empty() || !vocab.functions().empty())
                c.fail("duplicate vocab block");
            in_vocab = true;
        } else if (kw == "pred" || kw == "func") {
            if (!in_vocab)
                c.fail("'" + kw + "' outside the vocab block");
            std::string name = c.word();
            auto arity = c.number();
            if (!c.at_end())
                c.fail("trailing input");
            try {
                if (kw == "pred")
                    vocab.add_predicate(name, static_cast<int>(arity));
                else
                    vocab.add_function(name, static_cast<int>(arity));
            } catch (const SemanticError& e) {
                semantic(lineno, e.what());
            }
        } else if (kw == "universe") {
            if (model)
                c.fail("duplicate universe line");
            auto n = c.number();
            if (!c.at_end())
                c.fail("trailing input");
            in_vocab = false;
            model = Model::empty(vocab, n);
        } else if (kw == "rel") {
            if (!model)
                c.fail("'rel' before 'universe'");
            std::string name = c.word();
            c.expect(":");
            auto p = model->vocab.find_predicate(name);
            if (!p)
                semantic(lineno, "unknown predicate " + name);
            const int arity = model->vocab.predicates()[*p].arity;
            while (!c.at_end()) {
                Tuple t = read_group(c);
                if (t.size() != static_cast<std::size_t>(arity))
                    semantic(lineno, name + ": tuple of arity " + std::to_string(t.size()) + ", expected " +
                                         std::to_string(arity) + " (arity mismatch)");
                check_range(t, model->size, lineno, name);
                model->relations[*p].insert(std::move(t));
            }
        } else if (kw == "fun") {
            if (!model)
                c.fail("'fun' before 'universe'");
            std::string name = c.word();
            c.expect(":");
            auto f = model->vocab.find_function(name);
            if (!f)
                semantic(lineno, "unknown function " + name);
            const int arity = model->vocab.functions()[*f].arity;
            c.expect("(");
            Tuple args = read_group(c);
            c.expect(")");
            c.expect("->");
            auto value = static_cast<Element>(c.number());
            if (!c.at_end())
                c.fail("trailing input");
            if (args.size() != static_cast<std::size_t>(arity))
                semantic(lineno, name + ": row of arity " + std::to_string(args.size()) + ", expected " +
                                     std::to_string(arity) + " (arity mismatch)");
            check_range(args, model->size, lineno, name);
            check_range({value}, model->size, lineno, name);
            auto key = std::make_pair(*f, model->table_index(args));
            if (auto [it, fresh] = row_lines.emplace(key, lineno); !fresh)
                semantic(lineno, name + ": duplicate row (first given on line " + std::to_string(it->second) + ")");
            model->set_value(*f, args, value);
        } else {
            c.fail("unknown keyword '" + kw + "'");
        }
    }
    if (!model)
        throw ParseError("missing 'universe' line", lineno, 1);
    check_complete(*model);
    return std::move(*model);
}

std::string serialize_model(const Model& m) {
    std::ostringstream os;
    os << "vocab\n";
    for (const auto& p : m.vocab.predicates())
        os << "  pred " << p.name << ' ' << p.arity << '\n';
    for (const auto& f : m.vocab.functions())
        os << "  func " << f.name << ' ' << f.arity << '\n';
    os << "universe " << m.size << '\n';
    for (std::size_t p = 0; p < m.relations.size(); ++p) {
        os << "rel " << m.vocab.predicates()[p].name << ':';
        for (const Tuple& t : m.relations[p]) {
            os << ' ';
            for (std::size_t i = 0; i < t.size(); ++i)
                os << (i ? "," : "") << t[i];
        }
        os << '\n';
    }
    for (std::size_t f = 0; f < m.functions.size(); ++f) {
        const auto& sym = m.vocab.functions()[f];
        for_each_tuple(m.size, sym.arity, [&](const Tuple& args) {
            os << "fun " << sym.name << ": (";
            for (std::size_t i = 0; i < args.size(); ++i)
                os << (i ? "," : "") << args[i];
            os << ")->" << m.apply(f, args) << '\n';
        });
    }
    return os.str();
}

std::string serialize_model_json(const Model& m) {
    json j;
    j["schema"] = "ufx.model";
    j["schema_version"] = 1;
    json preds = json::array();
    for (const auto& p : m.vocab.predicates())
        preds.push_back({{"name", p.name}, {"arity", p.arity}});
    json funcs = json::array();
    for (const auto& f : m.vocab.functions())
        funcs.push_back({{"name", f.name}, {"arity", f.arity}});
    j["vocab"] = {{"predicates", preds}, {"functions", funcs}};
    j["universe"] = m.size;
    json rels = json::object();
    for (std::size_t p = 0; p < m.relations.size(); ++p) {
        json tuples = json::array();
        for (const Tuple& t : m.relations[p])
            tuples.push_back(t);
        rels[m.vocab.predicates()[p].name] = tuples;
    }
    j["relations"] = rels;
    json tables = json::object();
    for (std::size_t f = 0; f < m.functions.size(); ++f) {
        json rows = json::array();
        for_each_tuple(m.size, m.vocab.functions()[f].arity, [&](const Tuple& args) {
            rows.push_back({{"args", args}, {"value", m.apply(f, args)}});
        });
        tables[m.vocab.functions()[f].name] = rows;
    }
    j["functions"] = tables;
    return j.dump(2) + "\n";
}

Model parse_model_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), 1, e.byte);
    }
    try {
        if (j.value("schema", "") != "ufx.model")
            throw SemanticError("structured model: missing schema \"ufx.model\"");
        if (j.value("schema_version", 0) != 1)
            throw SemanticError("structured model: unsupported schema_version");
        Vocabulary vocab;
        for (const auto& p : j.at("vocab").at("predicates"))
            vocab.add_predicate(p.at("name").get<std::string>(), p.at("arity").get<int>());
        for (const auto& f : j.at("vocab").at("functions"))
            vocab.add_function(f.at("name").get<std::string>(), f.at("arity").get<int>());
        Model m = Model::empty(vocab, j.at("universe").get<std::size_t>());
        for (const auto& [name, tuples] : j.at("relations").items()) {
            auto p = m.vocab.find_predicate(name);
            if (!p)
                throw SemanticError("structured model: unknown predicate " + name);
            for (const auto& t : tuples) {
                Tuple tup = t.get<Tuple>();
                if (tup.size() != static_cast<std::size_t>(m.vocab.predicates()[*p].arity))
                    throw SemanticError("structured model: " + name + " tuple arity mismatch");
                check_range(tup, m.size, 1, name);
                m.relations[*p].insert(std::move(tup));
            }
        }
        for (const auto& [name, rows] : j.at("functions").items()) {
            auto f = m.vocab.find_function(name);
            if (!f)
                throw SemanticError("structured model: unknown function " + name);
            for (const auto& row : rows) {
                Tuple args = row.at("args").get<Tuple>();
                if (args.size() != static_cast<std::size_t>(m.vocab.functions()[*f].arity))
                    throw SemanticError("structured model: " + name + " row arity mismatch");
                check_range(args, m.size, 1, name);
                m.set_value(*f, args, row.at("value").get<Element>());
            }
        }
        check_complete(m);
        return m;
    } catch (const json::exception& e) {
        throw SemanticError(std::string("structured model: ") + e.what());
    }
}

Model parse_model_any(std::string_view text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            continue;
        return ch == '{' ? parse_model_json(text) : parse_model(text);
    }
    return parse_model(text);
}

} // namespace ufx
