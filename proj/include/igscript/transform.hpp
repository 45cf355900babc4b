#ifndef IGSCRIPT_TRANSFORM_HPP
#define IGSCRIPT_TRANSFORM_HPP

#include "igscript/sub_statement_id.hpp"
#include "igscript/symbols.hpp"
#include "igscript/tree.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace igscript {

/// One value in a component cell: expanded text, or a reference to a nested
/// atomic statement.
struct CellValue {
    std::string text;
    std::vector<Annotation> annotations;
    std::optional<SubStatementId> reference;

    friend bool operator==(const CellValue&, const CellValue&) = default;
};

struct Linkage {
    SubStatementId other;
    Operator op;

    friend bool operator==(const Linkage&, const Linkage&) = default;
};

/// A fully decomposed statement: one row of tabular output.
struct AtomicStatement {
    SubStatementId id;
    std::map<Symbol, std::vector<CellValue>> cells;
    /// Atoms of the same expansion group that differ from this one in exactly
    /// one choice, with the operator of the combination where they diverge.
    std::vector<Linkage> linkage;
    std::vector<Annotation> statement_annotations;

    bool is_top_level() const { return !id.is_nested(); }

    friend bool operator==(const AtomicStatement&, const AtomicStatement&) = default;
};

struct ExpansionResult {
    /// Expansion order; nested atoms directly follow their host atom.
    std::vector<AtomicStatement> atoms;
    std::string root_base;
    std::vector<std::string> warnings;

    std::size_t top_level_count() const;
};

class ExpansionLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Upper bound on atoms produced by one expand() call.
inline constexpr std::size_t kMaxExpandedAtoms = 20000;

/// Decomposes a statement into logically linked atomic statements.
///
/// Alternatives of every combination are multiplied out, leftmost
/// combination varying slowest. AND, OR and XOR all yield one atom per
/// alternative; the operator is kept in the linkage. At Extended and above
/// nested components are expanded into their own atoms (ids `{host}.k`) and
/// referenced from the host cell. At Core the tree is first flattened by
/// filter_level(), so nested content becomes inline text of its component.
///
/// The sole atom of a statement without combinations or nesting carries the
/// bare base id; otherwise top-level atoms are numbered `base.1 .. base.n`.
ExpansionResult expand(const StatementTree& tree, std::string_view base_id, Level level);

/// Downward-compatible projection.
///
///  - below Logico: every annotation is removed;
///  - at Core: nested components and nested component combinations become
///    flat components of the same symbol whose content is the inner text with
///    symbols elided. A component-pair combination becomes a flat component
///    named after the first symbol it contains, holding one inline
///    alternative per branch.
StatementTree filter_level(const StatementTree& tree, Level level);

/// Core-level text of a nested statement: component contents and free text
/// in source order, symbols, braces and annotations elided, inline
/// combinations kept.
Content flatten(const StatementTree& tree);

/// Stable move of all top-level activation conditions to the front.
StatementTree reorder_conditions(const StatementTree& tree);

/// Number of top-level atomic statements at Core level (saturating).
std::uint64_t degree_of_variability(const StatementTree& tree);

}  // namespace igscript

#endif  // IGSCRIPT_TRANSFORM_HPP
