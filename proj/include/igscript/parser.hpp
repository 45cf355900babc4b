#ifndef IGSCRIPT_PARSER_HPP
#define IGSCRIPT_PARSER_HPP

#include "igscript/issues.hpp"
#include "igscript/tree.hpp"

#include <string>
#include <string_view>

namespace igscript {

/// Checks `input` for syntactic problems. Never throws on any byte string;
/// every problem becomes a positioned Issue.
ValidationReport validate(std::string_view input);

struct ParseOutcome {
    StatementTree tree;
    /// Holds warnings when the parse succeeded.
    ValidationReport report;
};

/// Parses a coded statement. Throws ParseError if validation fails.
///
/// Within a `{...}` body the shape decides the pattern: operator-separated
/// braced components of the owning symbol form a nested component
/// combination, other operator-separated groups form a component-pair
/// combination, and anything else is a nested statement.
StatementTree parse(std::string_view input);

/// Like parse(), but also returns warning-severity issues.
ParseOutcome parse_with_report(std::string_view input);

/// Parses the interior of a `(...)` component body into literal text and
/// inline combination groups. Throws ParseError on invalid content.
Content parse_content(std::string_view body);

/// Canonical IG Script: single spaces between elements, annotations directly
/// after the symbol code.
std::string serialize(const StatementTree& tree);
std::string serialize(const Component& component);
std::string serialize_content(const Content& content);

}  // namespace igscript

#endif  // IGSCRIPT_PARSER_HPP
