#pragma once

/**
 * @file instance.hpp
 * @brief Instance files: a small expression language for recurrences.
 *
 * Grammar (one statement per line, '#' comments, whitespace insignificant):
 *
 *   instance := line*
 *   line     := key "=" expr
 *   key      := "p" | "q" | "u0" | "t"
 *   expr     := ["+"|"-"] term (("+"|"-") term)*
 *   term     := factor ("*" factor)*
 *   factor   := atom ("^" natural)?
 *   atom     := rational | "n" | "(" expr ")"
 *   rational := integer ("/" positive-integer)?
 *
 * Each key must appear exactly once; u0 and t must be constant.
 */

#include <hyperseq/recurrence.hpp>

#include <string>

namespace hyperseq {

struct ParseError : std::runtime_error {
    int line;
    int column;

    ParseError(std::string message, int line_, int column_)
        : std::runtime_error(std::move(message)), line(line_), column(column_) {}
};

struct InstanceFile {
    Polynomial p;
    Polynomial q;
    Rat u0;
    Rat t;

    bool operator==(const InstanceFile&) const = default;

    Recurrence recurrence() const { return Recurrence{p, q, u0}; }
};

/// Parses instance text; throws ParseError with 1-based position on
/// syntax errors, duplicate keys, or missing keys.
InstanceFile parse_instance(const std::string& text);

/// Canonical text form; parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const InstanceFile& inst);

}  // namespace hyperseq
