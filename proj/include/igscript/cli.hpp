#ifndef IGSCRIPT_CLI_HPP
#define IGSCRIPT_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace igscript {

/// One statement block of a batch file.
struct BatchEntry {
    std::optional<std::string> id;  ///< from a leading `#id:` line
    std::string statement;          ///< block lines joined with `\n`
    std::size_t line = 1;           ///< 1-based line of the first statement line
};

/// Splits a batch file into blank-line separated blocks. A block whose first
/// line starts with `#id:` takes the rest of that line as its id.
std::vector<BatchEntry> parse_batch(std::string_view text);

/// Ids for entries without an explicit one. A numeric base b yields b, b+1, ...
/// by entry position; any other base yields `base-1`, `base-2`, ... or the
/// bare base for a single entry.
std::vector<std::string> assign_ids(const std::vector<BatchEntry>& entries, std::string_view base);

/// Line and column (both 1-based) of byte `offset` of an entry's statement.
std::pair<std::size_t, std::size_t> locate(const BatchEntry& entry, std::size_t offset);

/// Exit codes: 0 success, 1 some entry failed, 2 usage or IO error.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace igscript

#endif  // IGSCRIPT_CLI_HPP
