#include "betasat/cli.hpp"

#include "betasat/backdoor.hpp"
#include "betasat/dp.hpp"
#include "betasat/errors.hpp"
#include "betasat/generators.hpp"
#include "betasat/instances.hpp"
#include "betasat/io.hpp"
#include "betasat/oracle.hpp"
#include "betasat/structure.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace betasat::cli {

using json = nlohmann::ordered_json;

namespace {

/// Error with a fixed exit code, raised by the command handlers.
struct Failure : std::runtime_error {
    Failure(int code, std::string status, const std::string& what)
        : std::runtime_error(what), code(code), status(std::move(status)) {}
    int code;
    std::string status;
};

class Timings {
public:
    template <typename Fn>
    auto time(const char* phase, Fn&& fn) {
        const auto start = std::chrono::steady_clock::now();
        struct Record {
            Timings* self;
            const char* phase;
            std::chrono::steady_clock::time_point start;
            ~Record() {
                const std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
                self->ms_[phase] = self->ms_.value(phase, 0.0) + d.count();
            }
        } record{this, phase, start};
        return fn();
    }

    const json& to_json() const { return ms_; }

private:
    json ms_ = json{{"parse", 0.0}, {"recognize", 0.0}, {"eliminate", 0.0}, {"certify", 0.0}};
};

std::string read_text(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure(exit_parse, "parse_error", "cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

Format pick_format(const std::string& name, std::string_view text) {
    if (name == "auto") return sniff_format(text);
    return *format_from_string(name);
}

Formula load_formula(const std::string& path, const std::string& format, bool drop, std::ostream& err) {
    const std::string text = read_text(path);
    ParseOptions options;
    options.drop_tautologies = drop;
    options.on_warning = [&err](const std::string& msg) { err << "warning: " << msg << "\n"; };
    return parse_formula(text, pick_format(format, text), options);
}

Var resolve_var(const Formula& f, const std::string& token) {
    if (auto v = f.table().find(token)) return *v;
    if (!token.empty() && token.find_first_not_of("0123456789") == std::string::npos) {
        const auto id = std::stoull(token);
        if (id >= 1 && id <= f.table().size()) return static_cast<Var>(id - 1);
    }
    throw Failure(exit_parse, "parse_error", "unknown variable '" + token + "'");
}

/// Names or 1-based ids separated by commas or whitespace.
std::vector<Var> parse_var_list(const Formula& f, const std::string& text) {
    std::vector<Var> out;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) out.push_back(resolve_var(f, token));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
            flush();
        } else {
            token.push_back(ch);
        }
    }
    flush();
    return out;
}

json names(const Formula& f, std::span<const Var> vars) {
    json out = json::array();
    for (Var v : vars) out.push_back(f.table().display_name(v));
    return out;
}

json model_json(const Formula& f, const Assignment& tau) {
    json named = json::object();
    json lits = json::array();
    for (Var v : tau.domain()) {
        const bool value = *tau.get(v);
        named[f.table().display_name(v)] = value;
        lits.push_back(Lit(v, !value).to_dimacs());
    }
    return json{{"named", named}, {"literals", lits}};
}

json derivation_json(const ResolutionDerivation& d) {
    json steps = json::array();
    for (const auto& s : d.steps) {
        json lits = json::array();
        for (Lit l : s.clause) lits.push_back(l.to_dimacs());
        steps.push_back(json{{"clause", lits},
                             {"parents", s.parents ? json::array({s.parents->first, s.parents->second}) : json()}});
    }
    return steps;
}

struct SolveArgs {
    std::string input;
    std::string method = "bac";
    std::string format = "auto";
    bool certify = false;
    bool drop = false;
};

struct RecognizeArgs {
    std::string input;
    std::string cls = "bac";
    std::string precedence;
    std::string format = "auto";
    bool drop = false;
};

struct GenerateArgs {
    std::string family;
    std::optional<std::size_t> n;
    std::string input;
    std::size_t vars = 0;
    std::size_t clauses = 0;
    std::size_t width = 3;
    std::optional<std::uint64_t> seed;
    std::string format = "dimacs";
    std::string output;
};

struct BackdoorArgs {
    std::string input;
    std::string kind = "strong";
    std::size_t max_k = 3;
    std::size_t jobs = 1;
    std::string format = "auto";
    bool drop = false;
};

bool starts_with(const std::string& s, std::string_view prefix) {
    return s.compare(0, prefix.size(), prefix) == 0;
}

/// Precedence from a file, completed with the remaining variables in id order.
EliminationOrdering load_precedence(const Formula& f, const std::string& path) {
    EliminationOrdering prec = parse_var_list(f, read_text(path));
    std::vector<bool> seen(f.table().size(), false);
    for (Var v : prec) {
        if (seen[v]) throw Failure(exit_parse, "parse_error", "precedence repeats " + f.table().display_name(v));
        seen[v] = true;
    }
    for (Var v = 0; v < f.table().size(); ++v)
        if (!seen[v]) prec.push_back(v);
    return prec;
}

int solve(const SolveArgs& a, Timings& t, json& result, std::ostream& err) {
    const Formula f = t.time("parse", [&] { return load_formula(a.input, a.format, a.drop, err); });
    const SolveOptions options{a.certify, false};
    Verdict v;
    if (a.method == "bac") {
        auto order = t.time("recognize", [&] { return beta_elimination_ordering(f); });
        if (!order) throw NotBetaAcyclicError();
        v = t.time("eliminate", [&] { return solve_with_ordering(f, *order, options); });
    } else if (starts_with(a.method, "order:")) {
        const auto order = parse_var_list(f, read_text(a.method.substr(6)));
        v = t.time("eliminate", [&] { return solve_with_ordering(f, order, options); });
    } else if (starts_with(a.method, "dps-prec:")) {
        const auto prec = load_precedence(f, a.method.substr(9));
        auto order = t.time("recognize", [&] { return recognize_dps_under(f, prec); });
        if (!order)
            throw Failure(exit_class, "class_violation", "no DP-simplicial elimination ordering under this precedence");
        v = t.time("eliminate", [&] { return solve_with_ordering(f, *order, options); });
    } else if (starts_with(a.method, "backdoor:")) {
        const auto b = parse_var_list(f, a.method.substr(9));
        v = t.time("eliminate", [&] { return solve_via_backdoor(f, b); });
    } else if (a.method == "oracle") {
        v = t.time("eliminate", [&] { return oracle_sat(f); });
    } else {
        throw Failure(exit_usage, "usage_error", "unknown method '" + a.method + "'");
    }

    result["method"] = a.method;
    result["verdict"] = to_string(v.status);
    result["variables"] = f.variables().size();
    result["clauses"] = f.size();
    if (!v.ordering.empty()) result["ordering"] = names(f, v.ordering);
    if (v.model) result["model"] = model_json(f, *v.model);
    if (a.certify) {
        t.time("certify", [&] {
            if (v.model) {
                result["certified"] = v.model->satisfies(f);
            } else if (v.refutation) {
                result["certified"] = validate_derivation(f, *v.refutation);
                result["refutation"] = derivation_json(*v.refutation);
            } else {
                result["certified"] = nullptr;
                err << "note: method " << a.method << " produces no refutation\n";
            }
            return 0;
        });
        if (result["certified"].is_boolean() && !result["certified"].get<bool>())
            throw std::logic_error("certificate check failed");
    }
    return v.status == Status::sat ? exit_sat : exit_unsat;
}

int recognize(const RecognizeArgs& a, Timings& t, json& result, std::ostream& err) {
    const Formula f = t.time("parse", [&] { return load_formula(a.input, a.format, a.drop, err); });
    result["class"] = a.cls;
    std::optional<EliminationOrdering> order;
    bool member = false;
    if (a.cls == "alpha") {
        member = t.time("recognize", [&] { return is_alpha_acyclic(build_hypergraph(f)); });
    } else if (a.cls == "bac") {
        order = t.time("recognize", [&] { return beta_elimination_ordering(f); });
        member = order.has_value();
    } else {
        EliminationOrdering prec;
        if (a.precedence.empty()) {
            for (Var v = 0; v < f.table().size(); ++v) prec.push_back(v);
        } else {
            prec = load_precedence(f, a.precedence);
        }
        order = t.time("recognize", [&] { return recognize_dps_under(f, prec); });
        member = order.has_value();
    }
    result["member"] = member;
    if (order) result["ordering"] = names(f, *order);
    return exit_ok;
}

Formula generated(const GenerateArgs& a, std::ostream& err) {
    auto need_n = [&] {
        if (!a.n) throw Failure(exit_usage, "usage_error", "--n is required for family " + a.family);
        return *a.n;
    };
    auto need_input = [&] {
        if (a.input.empty()) throw Failure(exit_usage, "usage_error", "--input is required for family " + a.family);
        return read_text(a.input);
    };
    if (auto fam = family_from_string(a.family)) return gen_family(*fam, need_n());
    if (a.family == "fixture") return fixture_example();
    if (a.family == "dps-gadget") {
        const std::string text = need_input();
        ParseOptions options;
        options.on_warning = [&err](const std::string& msg) { err << "warning: " << msg << "\n"; };
        return gen_dps_gadget(parse_formula(text, sniff_format(text), options));
    }
    if (a.family == "backdoor-gadget") return gen_backdoor_gadget(parse_set_family(need_input()));
    if (a.family == "clique-gadget") return gen_clique_gadget(parse_kpartite_graph(need_input()));
    if (a.family == "random") {
        if (!a.seed) throw Failure(exit_usage, "usage_error", "family random requires an explicit --seed");
        return gen_random(RandomProfile{a.vars, a.clauses, a.width, *a.seed});
    }
    throw Failure(exit_usage, "usage_error", "unknown family '" + a.family + "'");
}

int generate(const GenerateArgs& a, Timings&, json& result, std::ostream& err) {
    const Formula f = generated(a, err);
    const Format format = *format_from_string(a.format);
    const std::string text = write_formula(f, format);
    if (!a.output.empty()) {
        std::ofstream out(a.output, std::ios::binary);
        if (!out || !(out << text)) throw Failure(exit_usage, "usage_error", "cannot write " + a.output);
        result["path"] = a.output;
    }
    result["family"] = a.family;
    if (a.family == "random") {
        result["stream"] = kRandomStream;
        result["seed"] = *a.seed;
    }
    result["format"] = to_string(format);
    result["variables"] = f.table().size();
    result["clauses"] = f.size();
    result["formula"] = text;
    return exit_ok;
}

int backdoor(const BackdoorArgs& a, Timings& t, json& result, std::ostream& err) {
    const Formula f = t.time("parse", [&] { return load_formula(a.input, a.format, a.drop, err); });
    const BackdoorKind kind = a.kind == "strong" ? BackdoorKind::strong : BackdoorKind::deletion;
    auto found = t.time("recognize", [&] { return find_backdoor_parallel(f, kind, a.max_k, a.jobs); });
    result["kind"] = a.kind;
    result["max_k"] = a.max_k;
    result["found"] = found.has_value();
    if (found) {
        result["variables"] = names(f, *found);
        result["size"] = found->size();
        t.time("certify", [&] {
            if (kind == BackdoorKind::strong) {
                const auto report = check_strong_backdoor(f, *found);
                result["verified"] = report.verified;
                result["reducts_checked"] = report.reducts_checked;
            } else {
                result["verified"] = is_deletion_backdoor(f, *found);
            }
            return 0;
        });
    }
    return exit_ok;
}

const char* status_for(int code) {
    switch (code) {
    case exit_ok: return "ok";
    case exit_sat: return "SAT";
    case exit_unsat: return "UNSAT";
    case exit_usage: return "usage_error";
    case exit_parse: return "parse_error";
    case exit_class: return "class_violation";
    case exit_guard: return "resource_guard";
    }
    return "error";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    json report;
    report["command"] = args;
    report["subcommand"] = nullptr;
    Timings timings;
    json result = json::object();
    int code = exit_ok;
    std::string error;

    CLI::App app{"Satisfiability and structure tools for beta-acyclic CNF formulas", "betasat"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"auto", "dimacs", "named-json"};

    SolveArgs sa;
    auto* solve_cmd = app.add_subcommand("solve", "Decide satisfiability");
    solve_cmd->add_option("input", sa.input, "Formula file, - for stdin")->required();
    solve_cmd->add_option("--method", sa.method, "bac | order:<file> | dps-prec:<file> | backdoor:<vars> | oracle")
        ->capture_default_str();
    solve_cmd->add_flag("--certify", sa.certify, "Check the model or emit and check a resolution refutation");
    solve_cmd->add_option("--format", sa.format, "Input format")->check(CLI::IsMember(formats))->capture_default_str();
    solve_cmd->add_flag("--drop-tautologies", sa.drop, "Drop tautological clauses with a warning");

    RecognizeArgs ra;
    auto* recognize_cmd = app.add_subcommand("recognize", "Test class membership");
    recognize_cmd->add_option("input", ra.input, "Formula file, - for stdin")->required();
    recognize_cmd->add_option("--class", ra.cls, "alpha | bac | dps-prec")
        ->check(CLI::IsMember({"alpha", "bac", "dps-prec"}))
        ->capture_default_str();
    recognize_cmd->add_option("--precedence", ra.precedence, "Variable precedence file for dps-prec");
    recognize_cmd->add_option("--format", ra.format, "Input format")->check(CLI::IsMember(formats))->capture_default_str();
    recognize_cmd->add_flag("--drop-tautologies", ra.drop, "Drop tautological clauses with a warning");

    GenerateArgs ga;
    auto* generate_cmd = app.add_subcommand("generate", "Build a formula family or reduction gadget");
    generate_cmd
        ->add_option("--family", ga.family,
                     "fa | fs | fc | fac | fixture | dps-gadget | backdoor-gadget | clique-gadget | random")
        ->required();
    generate_cmd->add_option("--n", ga.n, "Family parameter");
    generate_cmd->add_option("--input", ga.input, "Formula, set family or graph file for gadgets");
    generate_cmd->add_option("--vars", ga.vars, "random: variable count");
    generate_cmd->add_option("--clauses", ga.clauses, "random: clause count");
    generate_cmd->add_option("--width", ga.width, "random: maximum clause width")->capture_default_str();
    generate_cmd->add_option("--seed", ga.seed, "random: seed");
    generate_cmd->add_option("--format", ga.format, "Output format")
        ->check(CLI::IsMember({"dimacs", "named-json"}))
        ->capture_default_str();
    generate_cmd->add_option("--output", ga.output, "Also write the formula to this file");

    BackdoorArgs ba;
    auto* backdoor_cmd = app.add_subcommand("backdoor", "Search for a smallest backdoor set");
    backdoor_cmd->add_option("input", ba.input, "Formula file, - for stdin")->required();
    backdoor_cmd->add_option("--kind", ba.kind, "strong | deletion")
        ->check(CLI::IsMember({"strong", "deletion"}))
        ->capture_default_str();
    backdoor_cmd->add_option("--max-k", ba.max_k, "Largest set size to try")->capture_default_str();
    backdoor_cmd->add_option("--jobs", ba.jobs, "Search shards run in parallel")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    backdoor_cmd->add_option("--format", ba.format, "Input format")->check(CLI::IsMember(formats))->capture_default_str();
    backdoor_cmd->add_flag("--drop-tautologies", ba.drop, "Drop tautological clauses with a warning");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help, diag;
        const int rc = app.exit(e, help, diag);
        err << help.str() << diag.str();
        if (rc == 0) {
            report["status"] = "ok";
            report["exit_code"] = exit_ok;
            report["help"] = help.str();
        } else {
            report["status"] = "usage_error";
            report["exit_code"] = exit_usage;
            report["error"] = e.what();
        }
        report["timings_ms"] = timings.to_json();
        out << report.dump() << "\n";
        return report["exit_code"].get<int>();
    }

    try {
        if (solve_cmd->parsed()) {
            report["subcommand"] = "solve";
            code = solve(sa, timings, result, err);
        } else if (recognize_cmd->parsed()) {
            report["subcommand"] = "recognize";
            code = recognize(ra, timings, result, err);
        } else if (generate_cmd->parsed()) {
            report["subcommand"] = "generate";
            code = generate(ga, timings, result, err);
        } else {
            report["subcommand"] = "backdoor";
            code = backdoor(ba, timings, result, err);
        }
    } catch (const Failure& e) {
        code = e.code;
        error = e.what();
    } catch (const ParseError& e) {
        code = exit_parse;
        error = e.line() ? "line " + std::to_string(e.line()) + ": " + e.what() : std::string(e.what());
    } catch (const TautologyError& e) {
        code = exit_parse;
        error = e.what();
    } catch (const NotBetaAcyclicError&) {
        code = exit_class;
        error = "not beta-acyclic";
    } catch (const NotDpSimplicialError& e) {
        code = exit_class;
        error = e.what();
        result["failed_step"] = e.step();
    } catch (const NotABackdoorError& e) {
        code = exit_class;
        error = e.what();
    } catch (const TooLargeError& e) {
        code = exit_guard;
        error = e.what();
    } catch (const InvalidInputError& e) {
        code = exit_usage;
        error = e.what();
    } catch (const NoHittingSetError& e) {
        code = exit_usage;
        error = e.what();
    } catch (const std::exception& e) {
        code = exit_usage;
        error = std::string("internal error: ") + e.what();
    }

    report["status"] = status_for(code);
    report["exit_code"] = code;
    report["timings_ms"] = timings.to_json();
    report["result"] = result;
    if (!error.empty()) {
        report["error"] = error;
        err << "error: " << error << "\n";
    }
    out << report.dump() << "\n";
    return code;
}

} // namespace betasat::cli
