#include "doctest.h"

#include "betasat/cli.hpp"
#include "betasat/generators.hpp"
#include "betasat/io.hpp"
#include "support.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace betasat;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    json report;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    json report = json::parse(out.str());
    return {code, report, err.str()};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("betasat-cli-test-" + std::to_string(::getpid()) + "-" +
                                             std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string write(const std::string& name, const std::string& text) const {
        const auto p = path_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string formula(const std::string& name, const Formula& f) const {
        return write(name, write_formula(f, Format::dimacs));
    }

private:
    fs::path path_;
};

} // namespace

TEST_CASE("solve exit codes") {
    TempDir dir;
    const auto fs4 = dir.formula("fs4.cnf", gen_family(Family::fs, 4));
    const auto fa2 = dir.formula("fa2.cnf", gen_family(Family::fa, 2));
    const auto fc3 = dir.formula("fc3.cnf", gen_family(Family::fc, 3));

    auto r = run({"solve", fs4});
    CHECK(r.code == cli::exit_sat);
    CHECK(r.report["status"] == "SAT");
    CHECK(r.report["subcommand"] == "solve");
    CHECK(r.report["result"]["model"]["literals"].size() == 4);

    r = run({"solve", fa2, "--certify"});
    CHECK(r.code == cli::exit_unsat);
    CHECK(r.report["result"]["certified"] == true);
    CHECK(r.report["result"]["refutation"].is_array());

    r = run({"solve", fc3});
    CHECK(r.code == cli::exit_class);
    CHECK(r.report["status"] == "class_violation");

    CHECK(run({"solve", fc3, "--method", "oracle"}).code == cli::exit_sat);
    CHECK(run({"solve", fc3, "--method", "backdoor:1"}).code == cli::exit_sat);
    CHECK(run({"solve", fc3, "--method", "backdoor:9"}).code == cli::exit_parse);
}

TEST_CASE("solve with explicit orderings") {
    TempDir dir;
    const Formula f = fixture_example();
    const auto path = dir.write("fixture.json", write_formula(f, Format::named_json));
    const auto good = dir.write("good.txt", "y b b' b* c z\n");
    const auto bad = dir.write("bad.txt", "z y b b' b* c\n");
    const auto prec = dir.write("prec.txt", "y, b\n");

    CHECK(run({"solve", path, "--method", "order:" + good, "--certify"}).code == cli::exit_sat);
    auto r = run({"solve", path, "--method", "order:" + bad});
    CHECK(r.code == cli::exit_class);
    CHECK(r.report["result"]["failed_step"] == 2);
    CHECK(run({"solve", path, "--method", "dps-prec:" + prec}).code == cli::exit_sat);
    CHECK(run({"solve", path, "--method", "order:" + dir.write("short.txt", "y b\n")}).code == cli::exit_usage);
}

TEST_CASE("usage and parse errors still print a report") {
    TempDir dir;
    auto r = run({});
    CHECK(r.code == cli::exit_usage);
    CHECK(r.report["status"] == "usage_error");
    CHECK(run({"solve"}).code == cli::exit_usage);
    CHECK(run({"frobnicate"}).code == cli::exit_usage);
    CHECK(run({"solve", dir.write("x.cnf", "p cnf 1 1\n1 -1 0\n")}).code == cli::exit_parse);
    CHECK(run({"solve", dir.write("y.cnf", "p cnf 1 1\n1 -1 0\n"), "--drop-tautologies"}).code == cli::exit_sat);
    CHECK(run({"solve", dir.write("z.cnf", "p cnf 2 2\n1 0\n")}).code == cli::exit_parse);
    CHECK(run({"solve", (fs::temp_directory_path() / "betasat-missing.cnf").string()}).code == cli::exit_parse);
    r = run({"--help"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.report["help"].is_string());
}

TEST_CASE("generate") {
    TempDir dir;
    auto r = run({"generate", "--family", "fc", "--n", "5"});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.report["result"]["clauses"] == 5);
    const Formula back = parse_formula(r.report["result"]["formula"].get<std::string>(), Format::dimacs);
    CHECK(back.size() == 5);

    CHECK(run({"generate", "--family", "fc", "--n", "2"}).code == cli::exit_usage);
    CHECK(run({"generate", "--family", "random", "--vars", "5", "--clauses", "4"}).code == cli::exit_usage);
    const auto a = run({"generate", "--family", "random", "--vars", "5", "--clauses", "4", "--seed", "9"});
    const auto b = run({"generate", "--family", "random", "--vars", "5", "--clauses", "4", "--seed", "9"});
    CHECK(a.code == cli::exit_ok);
    CHECK(a.report["result"]["formula"] == b.report["result"]["formula"]);

    const auto out = (fs::temp_directory_path() / "betasat-cli-gen.json").string();
    r = run({"generate", "--family", "fixture", "--format", "named-json", "--output", out});
    CHECK(r.code == cli::exit_ok);
    std::ifstream in(out);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(parse_formula(text.str(), Format::named_json) == fixture_example());
    fs::remove(out);

    const auto sets = dir.write("s.json", R"({"sets": [[1, 2], [2, 3]]})");
    CHECK(run({"generate", "--family", "backdoor-gadget", "--input", sets}).code == cli::exit_ok);
}

TEST_CASE("recognize agrees with solve") {
    TempDir dir;
    int i = 0;
    for (const auto& f : testing::random_corpus(40, 6, 7, 4)) {
        const auto path = dir.formula("f" + std::to_string(i++) + ".cnf", f);
        const auto rec = run({"recognize", path, "--class", "bac"});
        CHECK(rec.code == cli::exit_ok);
        const auto sol = run({"solve", path});
        if (rec.report["result"]["member"].get<bool>()) {
            CHECK((sol.code == cli::exit_sat || sol.code == cli::exit_unsat));
        } else {
            CHECK(sol.code == cli::exit_class);
        }
        CHECK(run({"recognize", path, "--class", "alpha"}).code == cli::exit_ok);
    }
}

TEST_CASE("backdoor") {
    TempDir dir;
    const auto fc3 = dir.formula("fc3.cnf", gen_family(Family::fc, 3));
    auto r = run({"backdoor", fc3});
    CHECK(r.code == cli::exit_ok);
    CHECK(r.report["result"]["variables"] == json::array({"x1"}));
    r = run({"backdoor", fc3, "--kind", "deletion", "--jobs", "3"});
    CHECK(r.report["result"]["size"] == 1);
    const auto big = dir.formula("big.cnf", gen_random(RandomProfile{60, 80, 3, 1}));
    CHECK(run({"backdoor", big, "--max-k", "10"}).code == cli::exit_guard);
}
