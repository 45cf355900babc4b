#include "igscript/tabular.hpp"

namespace igscript {

namespace {

using enum Symbol;

constexpr std::array<Symbol, kColumnCount - 2> kColumnSymbols{
    Attributes,           AttributesProperty,
    Deontic,              Aim,
    DirectObject,         DirectObjectProperty,
    IndirectObject,       IndirectObjectProperty,
    ActivationCondition,  ExecutionConstraint,
    ConstitutedEntity,    ConstitutedEntityProperty,
    Modal,                ConstitutiveFunction,
    ConstitutingProperties, ConstitutingPropertiesProperty,
    OrElse,
};

constexpr std::array<std::string_view, kColumnCount> kHeaders{
    "Statement ID",
    "Attributes",
    "Attributes Property",
    "Deontic",
    "Aim",
    "Direct Object",
    "Direct Object Property",
    "Indirect Object",
    "Indirect Object Property",
    "Activation Condition",
    "Execution Constraint",
    "Constituted Entity",
    "Constituted Entity Property",
    "Modal",
    "Constitutive Function",
    "Constituting Properties",
    "Constituting Properties Property",
    "Or Else",
    "Logical Linkage",
};

std::string render_value(const CellValue& v, bool annotations) {
    std::string out = v.text;
    if (annotations) {
        for (const auto& a : v.annotations) out += " [" + a.text + "]";
    }
    return out;
}

std::string csv_cell(const std::string& cell, char delimiter) {
    if (cell.find(delimiter) == std::string::npos && cell.find('"') == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string sheets_cell(const std::string& cell, char delimiter) {
    if (cell.empty()) return " ";
    std::string out;
    for (char c : cell) {
        if (c == delimiter) {
            out += "¦";
        } else {
            if (c == '"') out += '"';
            out += c;
        }
    }
    return out;
}

template <class CellFn, class LineFn>
std::string render(const ExpansionResult& result, const TabularOptions& opts, CellFn cell, LineFn line) {
    std::string out;
    auto emit = [&](const auto& cells) {
        std::string row;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) row += opts.delimiter;
            row += cell(std::string(cells[i]));
        }
        out += line(row);
        out += '\n';
    };
    if (result.atoms.empty()) return out;
    if (opts.include_headers) emit(kHeaders);
    for (const auto& atom : result.atoms) emit(row_cells(atom, opts));
    return out;
}

}  // namespace

const std::array<std::string_view, kColumnCount>& column_headers() { return kHeaders; }

std::array<std::string, kColumnCount> row_cells(const AtomicStatement& atom, const TabularOptions& opts) {
    std::array<std::string, kColumnCount> cells;
    cells[0] = atom.id.render();
    for (std::size_t c = 0; c < kColumnSymbols.size(); ++c) {
        auto it = atom.cells.find(kColumnSymbols[c]);
        if (it == atom.cells.end()) continue;
        std::string& cell = cells[c + 1];
        for (const auto& v : it->second) {
            if (!cell.empty()) cell += "; ";
            cell += render_value(v, opts.include_annotations);
        }
    }
    std::string& linkage = cells[kColumnCount - 1];
    for (const auto& l : atom.linkage) {
        if (!linkage.empty()) linkage += "; ";
        linkage += std::string(to_string(l.op)) + ":" + l.other.render();
    }
    return cells;
}

std::string to_csv(const ExpansionResult& result, const TabularOptions& opts) {
    return render(
        result, opts, [&](const std::string& c) { return csv_cell(c, opts.delimiter); },
        [](std::string& row) { return std::move(row); });
}

std::string to_sheets(const ExpansionResult& result, const TabularOptions& opts) {
    const std::string delim(1, opts.delimiter);
    return render(
        result, opts, [&](const std::string& c) { return sheets_cell(c, opts.delimiter); },
        [&](const std::string& row) { return "=SPLIT(\"" + row + "\", \"" + (delim == "\"" ? "\"\"" : delim) + "\")"; });
}

std::string to_tabular(const ExpansionResult& result, const TabularOptions& opts) {
    return opts.format == TabularFormat::Sheets ? to_sheets(result, opts) : to_csv(result, opts);
}

}  // namespace igscript
