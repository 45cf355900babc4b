#ifndef IGSCRIPT_TABULAR_HPP
#define IGSCRIPT_TABULAR_HPP

#include "igscript/transform.hpp"

#include <array>
#include <string>
#include <string_view>

namespace igscript {

enum class TabularFormat : std::uint8_t { Csv, Sheets };

struct TabularOptions {
    bool include_headers = true;
    bool include_annotations = false;
    char delimiter = '|';
    TabularFormat format = TabularFormat::Csv;
};

inline constexpr std::size_t kColumnCount = 19;

/// Fixed column order: Statement ID, one column per component symbol, Logical
/// Linkage.
const std::array<std::string_view, kColumnCount>& column_headers();

/// Cell texts of one atom in column order, before any quoting.
std::array<std::string, kColumnCount> row_cells(const AtomicStatement& atom, const TabularOptions& opts);

/// Delimited table, one row per atom, every line ending in `\n`. A cell that
/// contains the delimiter or a double quote is wrapped in double quotes with
/// embedded quotes doubled.
std::string to_csv(const ExpansionResult& result, const TabularOptions& opts = {});

/// One `=SPLIT("<row>", "|")` formula per row.
///
/// SPLIT has no quoting, so a delimiter inside a cell is replaced by `¦`
/// (U+00A6). Double quotes are doubled as required inside a formula string
/// literal. Empty cells are written as a single space because SPLIT drops
/// empty fields by default and the column count would shift.
std::string to_sheets(const ExpansionResult& result, const TabularOptions& opts = {});

/// Dispatches on `opts.format`.
std::string to_tabular(const ExpansionResult& result, const TabularOptions& opts = {});

}  // namespace igscript

#endif  // IGSCRIPT_TABULAR_HPP
