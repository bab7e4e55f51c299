#include "betasat/io.hpp"

#include "betasat/errors.hpp"

#include <charconv>
#include <limits>

#include "json.hpp"

namespace betasat {

using json = nlohmann::json;

std::optional<Format> format_from_string(std::string_view name) {
    if (name == "dimacs" || name == "cnf") return Format::dimacs;
    if (name == "named-json" || name == "json") return Format::named_json;
    return std::nullopt;
}

std::string_view to_string(Format format) {
    return format == Format::dimacs ? "dimacs" : "named-json";
}

Format sniff_format(std::string_view text) {
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        return ch == '{' ? Format::named_json : Format::dimacs;
    }
    return Format::dimacs;
}

namespace {

class DimacsReader {
public:
    DimacsReader(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

    Formula read() {
        std::optional<std::size_t> nvars;
        std::size_t declared_clauses = 0;
        std::size_t clause_lines = 0;
        std::vector<Clause> clauses;
        std::vector<Lit> pending;
        std::size_t pending_line = 0;

        while (next_line()) {
            std::string_view line = trim(line_);
            if (line.empty() || line.front() == 'c') continue;
            if (line.front() == '%') break; // SATLIB trailer
            if (line.front() == 'p') {
                if (nvars) fail("duplicate header");
                auto fields = split(line);
                if (fields.size() != 4 || fields[0] != "p" || fields[1] != "cnf")
                    fail("malformed header, expected 'p cnf <vars> <clauses>'");
                nvars = to_count(fields[2]);
                declared_clauses = to_count(fields[3]);
                continue;
            }
            if (!nvars) fail("clause before 'p cnf' header");
            for (auto tok : split(line)) {
                const long long value = to_int(tok);
                if (value == 0) {
                    ++clause_lines;
                    finish_clause(pending, pending_line, clauses);
                    pending.clear();
                    continue;
                }
                const auto magnitude = static_cast<std::size_t>(value < 0 ? -value : value);
                if (magnitude > *nvars)
                    fail("literal " + std::string(tok) + " exceeds declared variable count " +
                         std::to_string(*nvars));
                if (pending.empty()) pending_line = line_no_;
                pending.push_back(Lit::from_dimacs(static_cast<int>(value)));
            }
        }
        if (!nvars) fail("missing 'p cnf' header");
        if (!pending.empty()) {
            line_no_ = pending_line;
            fail("last clause is not terminated by 0");
        }
        if (clause_lines != declared_clauses)
            throw ParseError("header declares " + std::to_string(declared_clauses) + " clauses but " +
                                 std::to_string(clause_lines) + " were found",
                             line_no_);
        return Formula(VariableTable(*nvars), std::move(clauses));
    }

private:
    bool next_line() {
        if (pos_ > text_.size() || (pos_ == text_.size() && line_no_ > 0)) return false;
        auto end = text_.find('\n', pos_);
        if (end == std::string_view::npos) end = text_.size();
        line_ = text_.substr(pos_, end - pos_);
        pos_ = end + 1;
        ++line_no_;
        return true;
    }

    void finish_clause(std::vector<Lit>& lits, std::size_t line, std::vector<Clause>& out) {
        try {
            out.push_back(Clause::make(lits));
        } catch (const TautologyError& e) {
            if (!options_.drop_tautologies)
                throw TautologyError("line " + std::to_string(line) + ": " + e.what());
            if (options_.on_warning)
                options_.on_warning("line " + std::to_string(line) + ": dropped tautological clause");
        }
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(line_no_) + ": " + msg, line_no_);
    }

    static std::string_view trim(std::string_view s) {
        const auto ws = " \t\r\f\v";
        auto b = s.find_first_not_of(ws);
        if (b == std::string_view::npos) return {};
        auto e = s.find_last_not_of(ws);
        return s.substr(b, e - b + 1);
    }

    static std::vector<std::string_view> split(std::string_view s) {
        std::vector<std::string_view> out;
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
            auto j = i;
            while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
            if (j > i) out.push_back(s.substr(i, j - i));
            i = j;
        }
        return out;
    }

    long long to_int(std::string_view tok) const {
        long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            fail("expected an integer literal, got '" + std::string(tok) + "'");
        if (value > std::numeric_limits<int>::max() || value < -std::numeric_limits<int>::max())
            fail("literal out of range: " + std::string(tok));
        return value;
    }

    std::size_t to_count(std::string_view tok) const {
        const long long v = to_int(tok);
        if (v < 0) fail("negative count in header");
        return static_cast<std::size_t>(v);
    }

    std::string_view text_;
    const ParseOptions& options_;
    std::string_view line_;
    std::size_t pos_ = 0;
    std::size_t line_no_ = 0;
};

Formula parse_named_json(std::string_view text, const ParseOptions& options) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 0, e.byte);
    }
    auto bad = [](const std::string& msg) -> ParseError { return ParseError("named-json: " + msg, 0); };
    if (!doc.is_object()) throw bad("top level must be an object");
    if (!doc.contains("variables") || !doc["variables"].is_array()) throw bad("missing \"variables\" array");
    if (!doc.contains("clauses") || !doc["clauses"].is_array()) throw bad("missing \"clauses\" array");

    VariableTable table;
    for (const auto& name : doc["variables"]) {
        if (name.is_null()) {
            table.add();
        } else if (name.is_string()) {
            try {
                table.add(name.get<std::string>());
            } catch (const InvalidInputError& e) {
                throw bad(e.what());
            }
        } else {
            throw bad("variable names must be strings or null");
        }
    }

    std::vector<Clause> clauses;
    std::size_t index = 0;
    for (const auto& jc : doc["clauses"]) {
        ++index;
        if (!jc.is_array()) throw bad("clause " + std::to_string(index) + " is not an array");
        std::vector<Lit> lits;
        for (const auto& jl : jc) {
            if (!jl.is_object() || !jl.contains("var") || !jl["var"].is_number_unsigned())
                throw bad("clause " + std::to_string(index) + ": literal needs an unsigned \"var\"");
            const auto id = jl["var"].get<std::uint64_t>();
            if (id >= table.size())
                throw bad("clause " + std::to_string(index) + ": variable id " + std::to_string(id) +
                          " out of range");
            bool neg = false;
            if (jl.contains("neg")) {
                if (!jl["neg"].is_boolean()) throw bad("\"neg\" must be a boolean");
                neg = jl["neg"].get<bool>();
            }
            lits.push_back(Lit(static_cast<Var>(id), neg));
        }
        try {
            clauses.push_back(Clause::make(std::move(lits)));
        } catch (const TautologyError& e) {
            if (!options.drop_tautologies)
                throw TautologyError("clause " + std::to_string(index) + ": " + e.what());
            if (options.on_warning)
                options.on_warning("clause " + std::to_string(index) + ": dropped tautological clause");
        }
    }
    return Formula(std::move(table), std::move(clauses));
}

} // namespace

Formula parse_formula(std::string_view text, Format format, const ParseOptions& options) {
    if (format == Format::dimacs) return DimacsReader(text, options).read();
    return parse_named_json(text, options);
}

std::string write_formula(const Formula& f, Format format) {
    if (format == Format::dimacs) {
        std::string out = "p cnf " + std::to_string(f.table().size()) + " " + std::to_string(f.size()) + "\n";
        for (const auto& c : f.clauses()) {
            for (Lit l : c) {
                out += std::to_string(l.to_dimacs());
                out += ' ';
            }
            out += "0\n";
        }
        return out;
    }
    json doc;
    doc["variables"] = json::array();
    for (Var v = 0; v < f.table().size(); ++v) {
        const auto& name = f.table().name(v);
        doc["variables"].push_back(name ? json(*name) : json(nullptr));
    }
    doc["clauses"] = json::array();
    for (const auto& c : f.clauses()) {
        json jc = json::array();
        for (Lit l : c) jc.push_back({{"var", l.var()}, {"neg", l.negated()}});
        doc["clauses"].push_back(std::move(jc));
    }
    return doc.dump() + "\n";
}

} // namespace betasat
