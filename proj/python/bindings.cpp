#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ufx/beta.hpp"
#include "ufx/cli.hpp"
#include "ufx/error.hpp"
#include "ufx/model_io.hpp"
#include "ufx/paper_suite.hpp"
#include "ufx/symbolic.hpp"

namespace py = pybind11;
using namespace ufx;

namespace {

Assignment assignment(const Model& m, const std::map<std::string, Element>& vars,
                      const std::map<std::string, Element>& ufs) {
    Assignment a;
    a.vars = vars;
    for (const auto& [name, point] : ufs)
        a.ufs.insert_or_assign(name, FiniteUltrafilter(m.size, point));
    return a;
}

} // namespace

PYBIND11_MODULE(_ufx, mod) {
    mod.doc() = "Ultrafilter extensions of finite first-order models";

    // translators run newest-first, so the base class goes first
    const auto& base = py::register_exception<Error>(mod, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(mod, "ParseError", base.ptr());
    py::register_exception<SemanticError>(mod, "SemanticError", base.ptr());
    py::register_exception<PreconditionError>(mod, "PreconditionError", base.ptr());

    py::class_<Model>(mod, "Model")
        .def_readonly("size", &Model::size)
        .def("__str__", [](const Model& m) { return serialize_model(m); })
        .def("to_json", [](const Model& m) { return serialize_model_json(m); })
        .def("__eq__", [](const Model& a, const Model& b) { return a == b; });

    mod.def("parse_model", [](const std::string& text) { return parse_model_any(text); }, py::arg("text"));
    mod.def(
        "validate_model",
        [](const Model& m) {
            std::vector<std::string> out;
            for (const auto& v : validate_model(m))
                out.push_back(v.message);
            return out;
        },
        py::arg("model"));
    mod.def(
        "beta_extend",
        [](const Model& m, const std::string& mode) {
            if (mode != "fast" && mode != "literal")
                throw PreconditionError("mode must be 'fast' or 'literal'");
            return beta_extend(m, mode == "literal" ? BetaMode::Literal : BetaMode::Fast).model;
        },
        py::arg("model"), py::arg("mode") = "fast");
    mod.def(
        "evaluate",
        [](const Model& m, const std::string& formula, const std::map<std::string, Element>& vars,
           const std::map<std::string, Element>& ufs) {
            return evaluate(m, parse_formula(formula, m.vocab), assignment(m, vars, ufs));
        },
        py::arg("model"), py::arg("formula"), py::arg("vars") = std::map<std::string, Element>{},
        py::arg("ufs") = std::map<std::string, Element>{});
    mod.def(
        "measure", [](const std::string& d, const std::string& set) {
            return std::string(to_string(measure(parse_symbolic_uf(d), parse_epset(set))));
        },
        py::arg("d"), py::arg("set"));
    mod.def(
        "lemma3",
        [](const std::string& partition) {
            const auto r = lemma3_symbolic(parse_epset(partition));
            return std::map<std::string, std::string>{{"B1 in F(D1,D2)", std::string(to_string(r.b1_in_f12))},
                                                      {"B2 in F(D1,D2)", std::string(to_string(r.b2_in_f12))},
                                                      {"B2 in F(D2,D1)", std::string(to_string(r.b2_in_f21))},
                                                      {"B1 in F(D2,D1)", std::string(to_string(r.b1_in_f21))}};
        },
        py::arg("partition"));
    mod.def(
        "build_m1", [](std::size_t k) { return build_m1(k).model; }, py::arg("k"));
    mod.def(
        "paper_suite",
        [](std::size_t k, std::uint64_t seed) {
            SuiteOptions o;
            o.k = k;
            o.seed = seed;
            return format_json(run_suite(o));
        },
        py::arg("k") = 4, py::arg("seed") = 0);
    mod.def(
        "cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int status = cli::dispatch(args, out, err);
            return py::make_tuple(status, out.str(), err.str());
        },
        py::arg("args"), "Run one ufx command line in-process; returns (status, stdout, stderr).");
}
