#include "igscript/visual.hpp"

#include "igscript/parser.hpp"
#include "igscript/transform.hpp"
#include "text_util.hpp"

#include <algorithm>

namespace igscript {

namespace {

class Builder {
public:
    explicit Builder(const VisualOptions& opts) : opts_(opts) {}

    TreeNode statement(const StatementTree& tree, std::string label) {
        TreeNode node{0, NodeKind::Statement, std::move(label), std::nullopt, {}, std::nullopt, {}, {}};
        std::vector<std::optional<Symbol>> symbols;  // parallel to children
        for (const auto& el : tree.elements) {
            if (const auto* c = std::get_if<Component>(&el)) {
                node.children.push_back(component(*c));
                symbols.push_back(c->symbol);
            } else if (const auto* comb = std::get_if<Combination>(&el)) {
                node.children.push_back(pair(*comb));
                symbols.push_back(std::nullopt);
            } else if (const auto* a = std::get_if<Annotation>(&el)) {
                if (opts_.include_annotations) node.annotations.push_back(a->text);
            }
        }
        if (!opts_.include_properties) attach_properties(node, symbols);
        return node;
    }

private:
    TreeNode component(const Component& c) {
        TreeNode node;
        if (c.is_atomic()) {
            node = content(c.content());
        } else if (c.is_nested_statement()) {
            node = statement(c.nested_statement(), std::string(code_of(c.symbol)));
            node.kind = NodeKind::Component;
        } else {
            const Combination& comb = c.nested_combination();
            node = TreeNode{0, NodeKind::Combination, std::string(to_string(comb.op)), std::nullopt, {}, comb.op,
                            {}, {}};
            for (const auto& child : comb.children) node.children.push_back(component(*std::get<Box<Component>>(child)));
        }
        node.symbol = c.symbol;
        if (c.annotation && opts_.include_annotations) node.annotations.push_back(c.annotation->text);
        return node;
    }

    TreeNode pair(const Combination& comb) {
        TreeNode node{0, NodeKind::Combination, std::string(to_string(comb.op)), std::nullopt, {}, comb.op, {}, {}};
        for (const auto& child : comb.children) {
            const StatementTree& branch = *std::get<Box<StatementTree>>(child);
            node.children.push_back(statement(branch, serialize(branch)));
        }
        return node;
    }

    TreeNode group(const Combination& comb) {
        TreeNode node{0, NodeKind::Combination, std::string(to_string(comb.op)), std::nullopt, {}, comb.op, {}, {}};
        for (const auto& child : comb.children) node.children.push_back(content(std::get<Content>(child)));
        return node;
    }

    TreeNode content(const Content& c) {
        if (c.size() == 1) {
            if (c.front().is_text()) return literal(c.front().text());
            return group(c.front().group());
        }
        TreeNode node{0, NodeKind::Component, serialize_content(c), std::nullopt, {}, std::nullopt, {}, {}};
        for (const auto& f : c) {
            if (f.is_text()) {
                if (!text::trim(f.text()).empty()) node.children.push_back(literal(f.text()));
            } else {
                node.children.push_back(group(f.group()));
            }
        }
        return node;
    }

    static TreeNode literal(std::string_view text) {
        return TreeNode{0, NodeKind::Literal, std::string(text::trim(text)), std::nullopt, {}, std::nullopt, {}, {}};
    }

    /// Moves each property node to the nearest component of its parent symbol,
    /// looking forward first.
    static void attach_properties(TreeNode& node, const std::vector<std::optional<Symbol>>& symbols) {
        const std::size_t n = node.children.size();
        std::vector<std::ptrdiff_t> target(n, -1);
        for (std::size_t i = 0; i < n; ++i) {
            if (!symbols[i] || !info(*symbols[i]).is_property) continue;
            const Symbol parent = info(*symbols[i]).parent;
            for (std::size_t j = i + 1; j < n && target[i] < 0; ++j) {
                if (symbols[j] == parent) target[i] = static_cast<std::ptrdiff_t>(j);
            }
            for (std::size_t j = i; j-- > 0 && target[i] < 0;) {
                if (symbols[j] == parent) target[i] = static_cast<std::ptrdiff_t>(j);
            }
        }
        std::vector<TreeNode> kept;
        std::vector<std::pair<std::size_t, TreeNode>> moved;
        for (std::size_t i = 0; i < n; ++i) {
            if (target[i] >= 0) {
                moved.emplace_back(static_cast<std::size_t>(target[i]), std::move(node.children[i]));
            }
        }
        for (auto& [t, prop] : moved) node.children[t].properties.push_back(std::move(prop));
        for (std::size_t i = 0; i < n; ++i) {
            if (target[i] < 0) kept.push_back(std::move(node.children[i]));
        }
        node.children = std::move(kept);
    }

    const VisualOptions& opts_;
};

void number(TreeNode& node, std::size_t& next) {
    node.id = next++;
    for (auto& c : node.children) number(c, next);
    for (auto& p : node.properties) number(p, next);
}

std::size_t depth(const StatementTree& tree);

std::size_t depth(const Component& c) {
    if (c.is_atomic()) return 0;
    if (c.is_nested_statement()) return 1 + depth(c.nested_statement());
    std::size_t d = 0;
    for (const auto& child : c.nested_combination().children) d = std::max(d, depth(*std::get<Box<Component>>(child)));
    return 1 + d;
}

std::size_t depth(const StatementTree& tree) {
    std::size_t d = 0;
    for (const auto& el : tree.elements) {
        if (const auto* c = std::get_if<Component>(&el)) {
            d = std::max(d, depth(*c));
        } else if (const auto* comb = std::get_if<Combination>(&el)) {
            for (const auto& child : comb->children) d = std::max(d, 1 + depth(*std::get<Box<StatementTree>>(child)));
        }
    }
    return d;
}

}  // namespace

std::string_view to_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Statement: return "statement";
        case NodeKind::Component: return "component";
        case NodeKind::Combination: return "combination";
        case NodeKind::Literal: return "literal";
    }
    return "?";
}

std::size_t nesting_depth(const StatementTree& tree) { return depth(tree); }

TreeDoc to_tree(const StatementTree& input, const VisualOptions& opts) {
    const StatementTree tree = opts.conditions_first ? reorder_conditions(input) : input;
    TreeDoc doc;
    doc.root = Builder(opts).statement(tree, serialize(tree));
    std::size_t next = 0;
    number(doc.root, next);
    doc.metrics.degree_of_variability = degree_of_variability(tree);
    doc.metrics.atom_count = expand(tree, "1", Level::Logico).atoms.size();
    doc.metrics.max_nesting_depth = nesting_depth(tree);
    doc.canvas = opts.canvas;
    return doc;
}

nlohmann::json to_json(const TreeNode& node) {
    nlohmann::json j;
    j["id"] = node.id;
    j["kind"] = to_string(node.kind);
    j["label"] = node.label;
    j["symbol"] = node.symbol ? nlohmann::json(code_of(*node.symbol)) : nlohmann::json(nullptr);
    j["annotations"] = node.annotations;
    j["operator"] = node.op ? nlohmann::json(to_string(*node.op)) : nlohmann::json(nullptr);
    j["children"] = nlohmann::json::array();
    for (const auto& c : node.children) j["children"].push_back(to_json(c));
    j["properties"] = nlohmann::json::array();
    for (const auto& p : node.properties) j["properties"].push_back(to_json(p));
    return j;
}

nlohmann::json to_json(const TreeDoc& doc) {
    nlohmann::json j;
    j["schema"] = kTreeSchema;
    j["root"] = to_json(doc.root);
    j["metrics"] = {{"degreeOfVariability", doc.metrics.degree_of_variability},
                    {"atomCount", doc.metrics.atom_count},
                    {"maxNestingDepth", doc.metrics.max_nesting_depth}};
    j["canvas"] = {{"width", doc.canvas.width}, {"height", doc.canvas.height}};
    return j;
}

}  // namespace igscript
