#ifndef IGSCRIPT_VISUAL_HPP
#define IGSCRIPT_VISUAL_HPP

#include "igscript/symbols.hpp"
#include "igscript/tree.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace igscript {

inline constexpr std::string_view kTreeSchema = "igscript.tree/1";

enum class NodeKind : std::uint8_t {
    Statement,    ///< root or the body of a nested component / pair branch
    Component,    ///< component with nested or mixed content
    Combination,  ///< logical combination; `op` is set
    Literal,      ///< leaf holding atomic text
};

std::string_view to_string(NodeKind kind);

struct TreeNode {
    std::size_t id = 0;  ///< preorder index, root is 0
    NodeKind kind = NodeKind::Literal;
    std::string label;
    std::optional<Symbol> symbol;
    std::vector<std::string> annotations;
    std::optional<Operator> op;
    std::vector<TreeNode> children;
    /// Property components attached to this component when properties are not
    /// shown as siblings.
    std::vector<TreeNode> properties;
};

struct TreeMetrics {
    std::uint64_t degree_of_variability = 0;
    std::size_t atom_count = 0;
    std::size_t max_nesting_depth = 0;
};

struct Canvas {
    int width = 1000;
    int height = 800;
};

struct TreeDoc {
    TreeNode root;
    TreeMetrics metrics;
    Canvas canvas;
};

struct VisualOptions {
    bool include_annotations = false;
    bool include_properties = true;
    bool conditions_first = false;
    Canvas canvas;
};

/// Builds the display tree. Free text is not represented; the root label
/// carries the full statement.
///
/// Throws ExpansionLimitExceeded if the atom count cannot be computed.
TreeDoc to_tree(const StatementTree& tree, const VisualOptions& opts = {});

/// Maximum `{}` depth of the statement.
std::size_t nesting_depth(const StatementTree& tree);

/// Versioned JSON form:
/// `{"schema", "root": node, "metrics": {...}, "canvas": {"width", "height"}}`
/// where node is `{"id", "kind", "label", "symbol", "annotations", "operator",
/// "children", "properties"}`; absent symbol or operator is null.
nlohmann::json to_json(const TreeDoc& doc);
nlohmann::json to_json(const TreeNode& node);

}  // namespace igscript

#endif  // IGSCRIPT_VISUAL_HPP
