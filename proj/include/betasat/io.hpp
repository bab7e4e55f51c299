#pragma once

#include "betasat/formula.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace betasat {

enum class Format { dimacs, named_json };

std::optional<Format> format_from_string(std::string_view name);
std::string_view to_string(Format format);
/// named-json when the first non-blank byte is '{', DIMACS otherwise.
Format sniff_format(std::string_view text);

struct ParseOptions {
    /// Drop tautological clauses instead of failing with TautologyError.
    bool drop_tautologies = false;
    /// Receives one message per dropped clause.
    std::function<void(const std::string&)> on_warning;
};

/// Throws ParseError on malformed text and TautologyError on a tautological
/// clause (unless dropping is enabled).
Formula parse_formula(std::string_view text, Format format, const ParseOptions& options = {});

/// DIMACS uses the table size as the variable count, so ids survive the
/// round trip; names are only carried by named-json.
std::string write_formula(const Formula& f, Format format);

} // namespace betasat
