// Python bindings. Variables are exposed as 1-based DIMACS ids.
#include "betasat/backdoor.hpp"
#include "betasat/dp.hpp"
#include "betasat/errors.hpp"
#include "betasat/generators.hpp"
#include "betasat/io.hpp"
#include "betasat/oracle.hpp"
#include "betasat/structure.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace betasat;

namespace {

std::vector<int> to_ids(std::span<const Var> vars) {
    std::vector<int> out;
    for (Var v : vars) out.push_back(static_cast<int>(v) + 1);
    return out;
}

std::vector<Var> from_ids(const Formula& f, const std::vector<int>& ids) {
    std::vector<Var> out;
    for (int id : ids) {
        if (id < 1 || static_cast<std::size_t>(id) > f.table().size())
            throw InvalidInputError("variable id " + std::to_string(id) + " out of range");
        out.push_back(static_cast<Var>(id - 1));
    }
    return out;
}

std::vector<std::vector<int>> to_dimacs(const Formula& f) {
    std::vector<std::vector<int>> out;
    for (const auto& c : f.clauses()) {
        std::vector<int> lits;
        for (Lit l : c) lits.push_back(l.to_dimacs());
        out.push_back(std::move(lits));
    }
    return out;
}

Format format_arg(const std::string& name, std::string_view text) {
    if (name == "auto") return sniff_format(text);
    const auto f = format_from_string(name);
    if (!f) throw InvalidInputError("unknown format '" + name + "'");
    return *f;
}

py::dict verdict_dict(const Formula& f, const Verdict& v) {
    py::dict d;
    d["status"] = to_string(v.status);
    if (v.model) {
        py::dict model;
        for (Var x : v.model->domain()) model[py::int_(x + 1)] = *v.model->get(x);
        d["model"] = model;
    } else {
        d["model"] = py::none();
    }
    d["ordering"] = to_ids(v.ordering);
    if (v.refutation) {
        py::list steps;
        for (const auto& s : v.refutation->steps) {
            std::vector<int> lits;
            for (Lit l : s.clause) lits.push_back(l.to_dimacs());
            py::object parents = py::none();
            if (s.parents) parents = py::make_tuple(s.parents->first, s.parents->second);
            steps.append(py::make_tuple(lits, parents));
        }
        d["refutation"] = steps;
        d["certified"] = validate_derivation(f, *v.refutation);
    }
    return d;
}

Family family_arg(const std::string& name) {
    const auto fam = family_from_string(name);
    if (!fam) throw InvalidInputError("unknown family '" + name + "'");
    return *fam;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Davis-Putnam elimination for beta-acyclic CNF";

    auto base = py::register_exception<Error>(m, "BetasatError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<TautologyError>(m, "TautologyError", base.ptr());
    py::register_exception<NotBetaAcyclicError>(m, "NotBetaAcyclicError", base.ptr());
    py::register_exception<NotDpSimplicialError>(m, "NotDpSimplicialError", base.ptr());
    py::register_exception<InvalidTraceError>(m, "InvalidTraceError", base.ptr());
    py::register_exception<TooLargeError>(m, "TooLargeError", base.ptr());
    auto invalid = py::register_exception<InvalidInputError>(m, "InvalidInputError", base.ptr());
    py::register_exception<OutOfRangeError>(m, "OutOfRangeError", invalid.ptr());
    py::register_exception<NotBalancedError>(m, "NotBalancedError", invalid.ptr());
    py::register_exception<BadKError>(m, "BadKError", invalid.ptr());
    py::register_exception<NotABackdoorError>(m, "NotABackdoorError", base.ptr());
    py::register_exception<NoHittingSetError>(m, "NoHittingSetError", base.ptr());

    py::class_<Formula>(m, "Formula")
        .def(py::init<>())
        .def_static(
            "from_dimacs",
            [](const std::vector<std::vector<int>>& clauses, std::size_t num_vars) {
                return Formula::from_dimacs(clauses, num_vars);
            },
            py::arg("clauses"), py::arg("num_vars") = 0)
        .def_static(
            "parse",
            [](const std::string& text, const std::string& format, bool drop_tautologies) {
                ParseOptions o;
                o.drop_tautologies = drop_tautologies;
                return parse_formula(text, format_arg(format, text), o);
            },
            py::arg("text"), py::arg("format") = "auto", py::arg("drop_tautologies") = false)
        .def("write", [](const Formula& f, const std::string& format) {
            const auto fmt = format_from_string(format);
            if (!fmt) throw InvalidInputError("unknown format '" + format + "'");
            return write_formula(f, *fmt);
        }, py::arg("format") = "dimacs")
        .def("clauses", &to_dimacs)
        .def("variables", [](const Formula& f) { return to_ids(f.variables()); })
        .def("name", [](const Formula& f, int id) { return f.table().display_name(from_ids(f, {id})[0]); })
        .def("find", [](const Formula& f, const std::string& name) -> std::optional<int> {
            const auto v = f.table().find(name);
            if (!v) return std::nullopt;
            return static_cast<int>(*v) + 1;
        })
        .def("__len__", &Formula::size)
        .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
        .def("__repr__", [](const Formula& f) { return to_string(f); });

    m.def("is_alpha_acyclic", [](const Formula& f) { return is_alpha_acyclic(build_hypergraph(f)); });
    m.def("is_beta_acyclic", &is_beta_acyclic);
    m.def("beta_elimination_ordering", [](const Formula& f) -> std::optional<std::vector<int>> {
        const auto o = beta_elimination_ordering(f);
        if (!o) return std::nullopt;
        return to_ids(*o);
    });
    m.def("weakly_simplicial_variables", [](const Formula& f) { return to_ids(weakly_simplicial_variables(f)); });

    m.def("dp_eliminate", [](const Formula& f, int x) { return dp_eliminate(f, from_ids(f, {x})[0]); });
    m.def("is_dp_simplicial", [](const Formula& f, int x) { return is_dp_simplicial(f, from_ids(f, {x})[0]); });
    m.def("dp_simplicial_variables", [](const Formula& f) { return to_ids(dp_simplicial_variables(f)); });
    m.def("recognize_dps_under",
          [](const Formula& f, const std::vector<int>& precedence) -> std::optional<std::vector<int>> {
              const auto o = recognize_dps_under(f, from_ids(f, precedence));
              if (!o) return std::nullopt;
              return to_ids(*o);
          });
    m.def(
        "solve_bac",
        [](const Formula& f, bool certify) { return verdict_dict(f, solve_bac(f, SolveOptions{certify, false})); },
        py::arg("formula"), py::arg("certify") = false);
    m.def(
        "solve_with_ordering",
        [](const Formula& f, const std::vector<int>& order, bool certify) {
            return verdict_dict(f, solve_with_ordering(f, from_ids(f, order), SolveOptions{certify, false}));
        },
        py::arg("formula"), py::arg("order"), py::arg("certify") = false);

    m.def("oracle_sat", [](const Formula& f) { return verdict_dict(f, oracle_sat(f)); });
    m.def(
        "oracle_dps",
        [](const Formula& f, std::uint64_t budget, bool memoize) {
            const auto r = oracle_dps(f, budget, memoize);
            py::dict d;
            d["status"] = to_string(r.status);
            d["witness"] = r.witness ? py::cast(to_ids(*r.witness)) : py::none();
            d["nodes_explored"] = r.nodes_explored;
            return d;
        },
        py::arg("formula"), py::arg("node_budget") = 1'000'000, py::arg("memoize") = true);
    m.def("oracle_min_hitting_set", [](const std::vector<std::vector<Element>>& sets) {
        const auto h = oracle_min_hitting_set(SetFamily::make(sets));
        return h.witness;
    });

    m.def("gen_family", [](const std::string& family, std::size_t n) { return gen_family(family_arg(family), n); });
    m.def("fixture_example", &fixture_example);
    m.def("gen_dps_gadget", &gen_dps_gadget);
    m.def("gen_backdoor_gadget",
          [](const std::vector<std::vector<Element>>& sets) { return gen_backdoor_gadget(SetFamily::make(sets)); });
    m.def("gen_clique_gadget", [](const std::string& graph_json) {
        return gen_clique_gadget(parse_kpartite_graph(graph_json));
    });
    m.def(
        "gen_random",
        [](std::size_t vars, std::size_t clauses, std::size_t width, std::uint64_t seed) {
            return gen_random(RandomProfile{vars, clauses, width, seed});
        },
        py::arg("vars"), py::arg("clauses"), py::arg("width") = 3, py::arg("seed"));

    m.def("is_strong_backdoor", [](const Formula& f, const std::vector<int>& b) {
        return is_strong_backdoor(f, from_ids(f, b));
    });
    m.def("is_deletion_backdoor", [](const Formula& f, const std::vector<int>& b) {
        return is_deletion_backdoor(f, from_ids(f, b));
    });
    m.def(
        "find_backdoor",
        [](const Formula& f, const std::string& kind, std::size_t max_k, std::size_t jobs)
            -> std::optional<std::vector<int>> {
            if (kind != "strong" && kind != "deletion") throw InvalidInputError("unknown kind '" + kind + "'");
            std::optional<std::vector<Var>> r;
            {
                py::gil_scoped_release release;
                r = find_backdoor_parallel(f, kind == "strong" ? BackdoorKind::strong : BackdoorKind::deletion,
                                           max_k, jobs);
            }
            if (!r) return std::nullopt;
            return to_ids(*r);
        },
        py::arg("formula"), py::arg("kind") = "strong", py::arg("max_k") = 3, py::arg("jobs") = 1);
    m.def("solve_via_backdoor", [](const Formula& f, const std::vector<int>& b) {
        return verdict_dict(f, solve_via_backdoor(f, from_ids(f, b)));
    });
}
