#include "ufx/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ufx/beta.hpp"
#include "ufx/epset.hpp"
#include "ufx/error.hpp"
#include "ufx/formula.hpp"
#include "ufx/model_io.hpp"
#include "ufx/paper_suite.hpp"
#include "ufx/symbolic.hpp"

namespace ufx::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Model load_model(const std::string& path) {
    try {
        return parse_model_any(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what(),
                         e.line(), e.column());
    }
}

// "--formula" takes either a file name or the formula text itself.
std::string formula_text(const std::string& arg) {
    std::error_code ec;
    if (arg.find_first_of("()") == std::string::npos && std::filesystem::is_regular_file(arg, ec))
        return read_file(arg);
    return arg;
}

std::vector<Element> parse_map(const std::string& text) {
    std::vector<Element> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        line = line.substr(0, line.find('#'));
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream words(line);
        std::string w;
        while (words >> w) {
            if (w.empty() || !std::all_of(w.begin(), w.end(), [](unsigned char c) { return std::isdigit(c); }))
                throw UsageError("map file: expected element indices, got '" + w + "'");
            out.push_back(static_cast<Element>(std::stoul(w)));
        }
    }
    return out;
}

std::pair<std::string, std::string> split_binding(const std::string& s, const char* flag) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size())
        throw UsageError(std::string(flag) + " expects name=value, got '" + s + "'");
    return {s.substr(0, eq), s.substr(eq + 1)};
}

std::string kleene(Kleene k) { return std::string(to_string(k)); }

json subset_json(const Subset& s) {
    json a = json::array();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i])
            a.push_back(i);
    return a;
}

std::string subset_text(const Subset& s) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i]) {
            out += (first ? "" : ",") + std::to_string(i);
            first = false;
        }
    return out + "}";
}

std::string elements_text(const std::vector<Element>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "}";
}

json header(const std::string& schema) { return json{{"schema", "ufx." + schema}, {"schema_version", 1}}; }

json report(const std::string& schema, const json& fields) {
    json j = header(schema);
    j.update(fields);
    return j;
}

std::uint64_t default_seed() {
    if (const char* s = std::getenv("UFX_SEED"); s && *s) {
        char* end = nullptr;
        const auto v = std::strtoull(s, &end, 10);
        if (*end != '\0')
            throw UsageError(std::string("UFX_SEED is not a number: ") + s);
        return v;
    }
    return 0;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ufx: ultrafilter extensions of finite first-order models"};
    app.name("ufx");
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "text or structured (JSON)")->check(CLI::IsMember({"text", "structured"}));

    // model
    auto* model = app.add_subcommand("model", "model files");
    model->require_subcommand(1);
    std::string model_file, beta_mode = "fast", convert_to = "text";
    auto* validate = model->add_subcommand("validate", "check a model file");
    validate->add_option("file", model_file)->required();
    auto* beta = model->add_subcommand("beta", "ultrafilter extension of a model");
    beta->add_option("file", model_file)->required();
    beta->add_option("--mode", beta_mode)->check(CLI::IsMember({"literal", "fast"}));
    auto* convert = model->add_subcommand("convert", "re-serialize a model");
    convert->add_option("file", model_file)->required();
    convert->add_option("--to", convert_to)->check(CLI::IsMember({"text", "structured"}));

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a formula in a model");
    std::string formula_arg;
    std::vector<std::string> lets, ufs;
    eval->add_option("model", model_file)->required();
    eval->add_option("--formula", formula_arg, "formula text or file")->required();
    eval->add_option("--let", lets, "variable assignment x=3")->allow_extra_args(false);
    eval->add_option("--uf", ufs, "ultrafilter parameter d=principal:5")->allow_extra_args(false);

    // lift
    auto* lift = app.add_subcommand("lift", "classify a map and its continuous extension");
    std::string dst_file, map_file;
    lift->add_option("src", model_file)->required();
    lift->add_option("dst", dst_file)->required();
    lift->add_option("--map", map_file, "file listing h(0) h(1) ...")->required();
    lift->add_option("--mode", beta_mode)->check(CLI::IsMember({"literal", "fast"}));

    // uf
    auto* uf = app.add_subcommand("uf", "ultrafilters");
    uf->require_subcommand(1);
    std::string d_arg, d2_arg, set_arg, base_arg, constraint = "none";
    std::size_t n = 0;
    auto* uf_measure = uf->add_subcommand("measure", "Kleene verdict for S in D");
    uf_measure->add_option("--d", d_arg, "principal:<n> or frechet:<ep literal>")->required();
    uf_measure->add_option("--set", set_arg)->required();
    auto* uf_two = uf->add_subcommand("two-level", "{t in outer : {x in base, x <c> t} in D2} in D1");
    uf_two->add_option("--d1", d_arg)->required();
    uf_two->add_option("--d2", d2_arg)->required();
    uf_two->add_option("--outer", set_arg)->required();
    uf_two->add_option("--base", base_arg)->required();
    uf_two->add_option("--constraint", constraint)->check(CLI::IsMember({"none", "greater", "less"}));
    auto* uf_list = uf->add_subcommand("list", "all ultrafilters on {0..n-1}");
    uf_list->add_option("--n", n)->required();

    // epset
    auto* ep = app.add_subcommand("epset", "eventually periodic sets");
    ep->require_subcommand(1);
    std::vector<std::string> ep_args;
    std::uint64_t bound = 0, below = 64;
    std::map<std::string, SetOp> ops{{"union", SetOp::Union},
                                     {"intersect", SetOp::Intersect},
                                     {"complement", SetOp::Complement},
                                     {"minus", SetOp::Minus}};
    std::map<std::string, CLI::App*> op_cmds;
    for (const auto& [name, op] : ops) {
        auto* c = ep->add_subcommand(name, "set " + name);
        c->add_option("sets", ep_args)->required();
        op_cmds[name] = c;
    }
    auto* ep_cut = ep->add_subcommand("cut", "{x in A : x > n} or {x in A : x < n}");
    ep_cut->add_option("set", set_arg)->required();
    auto* gt = ep_cut->add_option("--greater", bound);
    auto* lt = ep_cut->add_option("--less", bound);
    gt->excludes(lt);
    auto* ep_members = ep->add_subcommand("members", "canonical form and members below a bound");
    ep_members->add_option("set", set_arg)->required();
    ep_members->add_option("--below", below);

    // lemma3
    auto* lemma3 = app.add_subcommand("lemma3", "pair-image verdicts for a partition of N");
    std::uint64_t range = 1024;
    lemma3->add_option("--partition", set_arg, "A1 as an ep literal")->required();
    lemma3->add_option("--range", range, "truncation oracle range (0 to skip)");

    // m1
    auto* m1 = app.add_subcommand("m1", "finite truncations of the counterexample model");
    m1->require_subcommand(1);
    std::size_t k = 4;
    std::vector<Element> a1;
    Element point = 0;
    auto* m1_build = m1->add_subcommand("build", "print build_m1(k)");
    m1_build->add_option("--k", k);
    auto* m1_split = m1->add_subcommand("split", "finite B1/B2 for a split of numBase");
    m1_split->add_option("--k", k);
    m1_split->add_option("--a1", a1)->required()->delimiter(',');
    auto* m1_g = m1->add_subcommand("g", "G(j(a)) for a model interpreting P1, P2, R1");
    m1_g->add_option("model", model_file)->required();
    m1_g->add_option("--point", point)->required();

    // cut
    auto* cut = app.add_subcommand("cut", "I_D and J_D for a principal D on a finite linear order");
    std::vector<Element> ranking;
    cut->add_option("--order", ranking, "points from smallest to largest")->required()->delimiter(',');
    cut->add_option("--point", point)->required();

    // paper suite
    auto* paper = app.add_subcommand("paper", "paper checks");
    paper->require_subcommand(1);
    auto* suite = paper->add_subcommand("suite", "run every named check");
    std::uint64_t seed = 0;
    bool mutant = false;
    suite->add_option("--k", k)->check(CLI::Range(std::size_t{1}, kMaxTruncation));
    auto* seed_opt = suite->add_option("--seed", seed);
    suite->add_flag("--mutant", mutant, "use the asymmetric pairing mutant");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "ufx: " << e.what() << "\n";
        return kUsage;
    }
    const bool structured = format == "structured";

    try {
        if (validate->parsed()) {
            Model m;
            try {
                m = load_model(model_file);
            } catch (const Error& e) {
                if (structured)
                    out << report("validate", json{{"valid", false}, {"violations", {e.what()}}}).dump(2) << "\n";
                else
                    out << "invalid: " << e.what() << "\n";
                return kCheckFailed;
            }
            const auto v = validate_model(m);
            if (structured) {
                json j = header("validate");
                j["valid"] = v.empty();
                j["size"] = m.size;
                j["violations"] = json::array();
                for (const auto& x : v)
                    j["violations"].push_back(x.message);
                out << j.dump(2) << "\n";
            } else if (v.empty()) {
                out << "valid: " << m.size << " elements, " << m.vocab.predicates().size() << " predicates, "
                    << m.vocab.functions().size() << " functions\n";
            } else {
                for (const auto& x : v)
                    out << "violation: " << x.message << "\n";
            }
            return v.empty() ? kOk : kCheckFailed;
        }

        if (beta->parsed()) {
            const Model m = load_model(model_file);
            BetaStats stats;
            const BetaMode mode = beta_mode == "literal" ? BetaMode::Literal : BetaMode::Fast;
            const BetaModel b = beta_extend(m, mode, &stats);
            const MapClass j = classify_map(natural_embedding(m));
            if (structured) {
                json r = header("beta");
                r["mode"] = beta_mode;
                r["points"] = json::array();
                for (const auto& p : b.points)
                    r["points"].push_back(json{{"principal", p.point()}});
                r["model"] = json::parse(serialize_model_json(b.model));
                r["natural_embedding"] = std::string(to_string(j));
                if (mode == BetaMode::Literal)
                    r["uniqueness"] = {{"tuples_checked", stats.tuples_checked},
                                       {"min_candidates", stats.min_candidates},
                                       {"max_candidates", stats.max_candidates}};
                out << r.dump(2) << "\n";
            } else {
                out << serialize_beta(b);
                out << "# natural embedding: " << to_string(j) << "\n";
                if (mode == BetaMode::Literal)
                    out << "# uniqueness: " << stats.tuples_checked << " function tuples, candidates "
                        << stats.min_candidates << ".." << stats.max_candidates << "\n";
            }
            return j == MapClass::Isomorphism ? kOk : kCheckFailed;
        }

        if (convert->parsed()) {
            const Model m = load_model(model_file);
            out << (convert_to == "structured" ? serialize_model_json(m) : serialize_model(m));
            return kOk;
        }

        if (eval->parsed()) {
            const Model m = load_model(model_file);
            const std::string text = formula_text(formula_arg);
            const Formula f = parse_formula(text, m.vocab);
            Assignment a;
            for (const auto& s : lets) {
                auto [name, value] = split_binding(s, "--let");
                if (value.find_first_not_of("0123456789") != std::string::npos)
                    throw UsageError("--let " + name + ": expected an element index");
                a.vars[name] = static_cast<Element>(std::stoul(value));
            }
            for (const auto& s : ufs) {
                auto [name, value] = split_binding(s, "--uf");
                const SymbolicUF d = parse_symbolic_uf(value);
                if (!d.is_principal())
                    throw UsageError("--uf " + name + ": every ultrafilter on a finite model is principal");
                if (d.point() >= m.size)
                    throw UsageError("--uf " + name + ": point " + std::to_string(d.point()) + " is outside the universe");
                a.ufs.insert_or_assign(name, FiniteUltrafilter(m.size, static_cast<Element>(d.point())));
            }
            const bool v = evaluate(m, f, a);
            if (structured) {
                json r = header("eval");
                r["formula"] = to_string(f);
                r["value"] = v;
                out << r.dump(2) << "\n";
            } else {
                out << (v ? "true" : "false") << "\n";
            }
            return kOk;
        }

        if (lift->parsed()) {
            MapWitness w{load_model(model_file), load_model(dst_file), parse_map(read_file(map_file))};
            const LiftReport r = lift_check(w, beta_mode == "literal" ? BetaMode::Literal : BetaMode::Fast);
            if (structured) {
                json j = header("lift");
                j["source"] = std::string(to_string(r.source));
                j["lifted"] = std::string(to_string(r.lifted));
                j["pass"] = r.pass;
                j["note"] = r.note;
                j["lifted_map"] = r.lifted_map;
                out << j.dump(2) << "\n";
            } else {
                out << "source map: " << to_string(r.source) << "\n"
                    << "lifted map: " << to_string(r.lifted) << "\n";
                if (!r.note.empty())
                    out << "note: " << r.note << "\n";
                out << (r.pass ? "PASS" : "FAIL") << "\n";
            }
            return r.pass ? kOk : kCheckFailed;
        }

        if (uf_measure->parsed()) {
            const SymbolicUF d = parse_symbolic_uf(d_arg);
            const EPSet s = parse_epset(set_arg);
            const Kleene v = measure(d, s);
            if (structured)
                out << report("measure", json{{"d", d.to_string()}, {"set", s.to_string()}, {"verdict", kleene(v)}})
                           .dump(2)
                    << "\n";
            else
                out << kleene(v) << "\n";
            return kOk;
        }

        if (uf_two->parsed()) {
            using C = ParamFamily::Constraint;
            const SymbolicUF d1 = parse_symbolic_uf(d_arg), d2 = parse_symbolic_uf(d2_arg);
            const ParamFamily fam{parse_epset(base_arg),
                                  constraint == "greater" ? C::Greater : constraint == "less" ? C::Less : C::None};
            const Kleene v = eval_two_level(d1, d2, fam, parse_epset(set_arg));
            if (structured)
                out << report("two_level", json{{"verdict", kleene(v)}}).dump(2) << "\n";
            else
                out << kleene(v) << "\n";
            return kOk;
        }

        if (uf_list->parsed()) {
            const auto all = enumerate_ultrafilters(n);
            if (structured) {
                json j = header("ultrafilters");
                j["n"] = n;
                j["ultrafilters"] = json::array();
                for (const auto& u : all)
                    j["ultrafilters"].push_back(json{{"principal", u.point()}});
                out << j.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < all.size(); ++i)
                    out << "u" << i << " = principal(" << all[i].point() << ")\n";
            }
            return kOk;
        }

        for (const auto& [name, c] : op_cmds) {
            if (!c->parsed())
                continue;
            std::vector<EPSet> sets;
            for (const auto& s : ep_args)
                sets.push_back(parse_epset(s));
            const EPSet r = epset_algebra(ops.at(name), sets);
            if (structured)
                out << report("epset", json{{"result", r.to_string()}, {"infinite", r.is_infinite()}}).dump(2)
                    << "\n";
            else
                out << r.to_string() << "\n";
            return kOk;
        }

        if (ep_cut->parsed()) {
            if (gt->count() + lt->count() != 1)
                throw UsageError("epset cut: give exactly one of --greater, --less");
            const EPSet r = epset_cut(parse_epset(set_arg), gt->count() ? CutBound::Greater : CutBound::Less, bound);
            if (structured)
                out << report("epset", json{{"result", r.to_string()}, {"infinite", r.is_infinite()}}).dump(2)
                    << "\n";
            else
                out << r.to_string() << "\n";
            return kOk;
        }

        if (ep_members->parsed()) {
            const EPSet s = parse_epset(set_arg);
            const auto xs = s.members_below(below);
            if (structured) {
                out << report("epset", json{{"result", s.to_string()},
                                                   {"infinite", s.is_infinite()},
                                                   {"below", below},
                                                   {"members", xs}})
                           .dump(2)
                    << "\n";
            } else {
                out << s.to_string() << "\n";
                for (std::size_t i = 0; i < xs.size(); ++i)
                    out << (i ? " " : "") << xs[i];
                out << "\n";
            }
            return kOk;
        }

        if (lemma3->parsed()) {
            const auto r = lemma3_symbolic(parse_epset(set_arg));
            std::vector<TruncationCheck> checks;
            if (range > 0)
                for (PairOrder o : {PairOrder::FirstLess, PairOrder::SecondLess})
                    checks.push_back(truncation_oracle(r.a1, r.a2, o, range));
            const bool oracle_ok = std::all_of(checks.begin(), checks.end(), [](auto& c) { return c.agree(); });
            if (structured) {
                json j = header("lemma3");
                j["A1"] = r.a1.to_string();
                j["A2"] = r.a2.to_string();
                j["D1"] = r.d1.to_string();
                j["D2"] = r.d2.to_string();
                j["verdicts"] = {{"B1 in F(D1,D2)", kleene(r.b1_in_f12)},
                                 {"B2 in F(D1,D2)", kleene(r.b2_in_f12)},
                                 {"B2 in F(D2,D1)", kleene(r.b2_in_f21)},
                                 {"B1 in F(D2,D1)", kleene(r.b1_in_f21)}};
                j["extensions_differ"] = r.extensions_differ;
                j["truncation"] = json::array();
                for (std::size_t i = 0; i < checks.size(); ++i)
                    j["truncation"].push_back(json{{"set", i == 0 ? "B1" : "B2"},
                                                   {"range", checks[i].range},
                                                   {"rows", checks[i].rows_checked},
                                                   {"mismatches", checks[i].mismatches}});
                out << j.dump(2) << "\n";
            } else {
                out << "A1 = " << r.a1.to_string() << "\nA2 = " << r.a2.to_string() << "\n"
                    << "D1 = " << r.d1.to_string() << "\nD2 = " << r.d2.to_string() << "\n"
                    << "B1 in F(D1,D2): " << kleene(r.b1_in_f12) << "\n"
                    << "B2 in F(D1,D2): " << kleene(r.b2_in_f12) << "\n"
                    << "B2 in F(D2,D1): " << kleene(r.b2_in_f21) << "\n"
                    << "B1 in F(D2,D1): " << kleene(r.b1_in_f21) << "\n"
                    << "F(D1,D2) != F(D2,D1): " << (r.extensions_differ ? "yes" : "no") << "\n";
                for (std::size_t i = 0; i < checks.size(); ++i)
                    out << "truncation oracle " << (i == 0 ? "B1" : "B2") << " (range " << checks[i].range
                        << "): " << checks[i].rows_checked << " rows, " << checks[i].mismatches << " mismatches\n";
            }
            return r.extensions_differ && oracle_ok ? kOk : kCheckFailed;
        }

        if (m1_build->parsed()) {
            const TruncatedM1 t = build_m1(k);
            if (structured) {
                json j = header("m1");
                j["k"] = k;
                j["num_base"] = t.num_base;
                j["set_base"] = t.set_base;
                j["deviations"] = t.deviations;
                j["model"] = json::parse(serialize_model_json(t.model));
                out << j.dump(2) << "\n";
            } else {
                out << "# build_m1(" << k << "): N-sort 0.." << t.num_sort.size() - 1 << ", set sort "
                    << t.set_sort.front() << ".." << t.set_sort.back() << "\n";
                for (const auto& d : t.deviations)
                    out << "# deviation: " << d << "\n";
                out << serialize_model(t.model);
            }
            return kOk;
        }

        if (m1_split->parsed()) {
            const auto r = lemma3_finite(k, a1);
            if (structured) {
                json j = header("m1_split");
                j["A1"] = r.a1;
                j["A2"] = r.a2;
                j["B1"] = r.b1;
                j["B2"] = r.b2;
                j["disjoint"] = r.disjoint;
                out << j.dump(2) << "\n";
            } else {
                out << "A1 = " << elements_text(r.a1) << "\nA2 = " << elements_text(r.a2) << "\nB1 = "
                    << elements_text(r.b1) << "\nB2 = " << elements_text(r.b2) << "\n"
                    << "disjoint: " << (r.disjoint ? "yes" : "no") << "\n";
            }
            return r.disjoint ? kOk : kCheckFailed;
        }

        if (m1_g->parsed()) {
            const Model m = load_model(model_file);
            if (point >= m.size)
                throw UsageError("--point is outside the universe");
            const auto g = compute_G(m, FiniteUltrafilter(m.size, point));
            if (structured)
                out << report("G", json{{"point", point}, {"G", g}}).dump(2) << "\n";
            else
                out << "G(j(" << point << ")) = " << elements_text(g) << "\n";
            return kOk;
        }

        if (cut->parsed()) {
            std::vector<Element> sorted = ranking;
            std::sort(sorted.begin(), sorted.end());
            for (Element i = 0; i < sorted.size(); ++i)
                if (sorted[i] != i)
                    throw UsageError("--order must list 0..n-1 exactly once");
            if (point >= ranking.size())
                throw UsageError("--point is outside the order");
            const CutPair c = cut_segments(StrictOrder::from_ranking(ranking), FiniteUltrafilter(ranking.size(), point));
            Subset both(ranking.size());
            for (std::size_t i = 0; i < both.size(); ++i)
                both[i] = c.initial[i] && c.final[i];
            if (structured)
                out << report("cut", json{{"I", subset_json(c.initial)},
                                                 {"J", subset_json(c.final)},
                                                 {"I_and_J", subset_json(both)}})
                           .dump(2)
                    << "\n";
            else
                out << "I_D = " << subset_text(c.initial) << "\nJ_D = " << subset_text(c.final)
                    << "\nI_D & J_D = " << subset_text(both) << "\n";
            return kOk;
        }

        if (suite->parsed()) {
            SuiteOptions o;
            o.k = k;
            o.seed = seed_opt->count() ? seed : default_seed();
            o.asymmetric_mutant = mutant;
            const SuiteReport r = run_suite(o);
            out << (structured ? format_json(r) : format_text(r));
            return r.all_pass() ? kOk : kCheckFailed;
        }
    } catch (const UsageError& e) {
        err << "ufx: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        // parse, semantic and precondition failures on user input
        err << "ufx: " << e.what() << "\n";
        return kUsage;
    }
    err << "ufx: no command\n";
    return kUsage;
}

const std::vector<Coverage>& coverage() {
    static const std::vector<Coverage> table{
        {"parse_model", {"model", "validate", "{model}"}},
        {"validate_model", {"model", "validate", "{model}"}},
        {"serialize_model", {"model", "convert", "{model}"}},
        {"serialize_model_json", {"model", "convert", "{model}", "--to", "structured"}},
        {"parse_model_json", {"model", "validate", "{model_json}"}},
        {"beta_extend", {"model", "beta", "{model}", "--mode", "literal"}},
        {"serialize_beta", {"model", "beta", "{model}"}},
        {"natural_embedding", {"model", "beta", "{model}"}},
        {"enumerate_ultrafilters", {"uf", "list", "--n", "3"}},
        {"parse_formula", {"eval", "{model}", "--formula", "Uforall[d] x (P(x))", "--uf", "d=principal:0"}},
        {"evaluate", {"eval", "{model}", "--formula", "forall x (P(x) | ~P(x))"}},
        {"classify_map", {"lift", "{model}", "{model}", "--map", "{map}"}},
        {"lift_check", {"lift", "{model}", "{model}", "--map", "{map}"}},
        {"pushforward", {"lift", "{model}", "{model}", "--map", "{map}"}},
        {"parse_epset", {"epset", "members", "ep(0; ; 2; 0)"}},
        {"epset_algebra", {"epset", "union", "ep(0; ; 2; 0)", "ep(0; ; 3; 0)"}},
        {"epset_cut", {"epset", "cut", "ep(0; ; 2; 0)", "--greater", "5"}},
        {"parse_symbolic_uf", {"uf", "measure", "--d", "frechet:ep(0; ; 2; 0)", "--set", "ep(0; ; 4; 0)"}},
        {"measure", {"uf", "measure", "--d", "principal:4", "--set", "ep(0; ; 2; 0)"}},
        {"eval_two_level",
         {"uf", "two-level", "--d1", "frechet:ep(0; ; 2; 0)", "--d2", "frechet:ep(0; ; 2; 1)", "--outer",
          "ep(0; ; 2; 0)", "--base", "ep(0; ; 2; 1)", "--constraint", "greater"}},
        {"lemma3_symbolic", {"lemma3", "--partition", "ep(0; ; 2; 0)"}},
        {"pair_image_membership", {"lemma3", "--partition", "ep(0; ; 3; 0)"}},
        {"truncation_oracle", {"lemma3", "--partition", "ep(0; ; 2; 0)", "--range", "256"}},
        {"build_m1", {"m1", "build", "--k", "2"}},
        {"lemma3_finite", {"m1", "split", "--k", "4", "--a1", "0,2"}},
        {"compute_G", {"m1", "g", "{m1}", "--point", "1"}},
        {"cut_segments", {"cut", "--order", "2,0,1", "--point", "0"}},
        {"run_suite", {"paper", "suite", "--k", "2", "--seed", "7"}},
    };
    return table;
}

} // namespace ufx::cli
