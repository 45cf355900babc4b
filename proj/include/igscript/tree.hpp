#ifndef IGSCRIPT_TREE_HPP
#define IGSCRIPT_TREE_HPP

#include "igscript/box.hpp"
#include "igscript/symbols.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace igscript {

/// Byte range in the parsed input. Offsets are UTF-8 byte offsets.
struct Span {
    std::size_t offset = 0;
    std::size_t length = 0;

    std::size_t end() const noexcept { return offset + length; }
    friend bool operator==(const Span&, const Span&) = default;
};

enum class AnnotationScope : std::uint8_t { Component, NestedComponent, Combination, Statement };

/// Contents of a `[...]` label that is not a logical operator.
struct Annotation {
    std::string text;
    AnnotationScope scope = AnnotationScope::Component;

    friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct Combination;
struct Component;
struct StatementTree;

/// One piece of component content: literal text or an inline combination.
struct Fragment {
    std::variant<std::string, Box<Combination>> value;

    bool is_text() const noexcept { return value.index() == 0; }
    const std::string& text() const { return std::get<std::string>(value); }
    const Combination& group() const { return *std::get<Box<Combination>>(value); }

    friend bool operator==(const Fragment&, const Fragment&) = default;
};

/// Content of a `(...)` body. Literal fragments keep the single spaces that
/// separate them from neighbouring groups; the sequence as a whole is trimmed.
using Content = std::vector<Fragment>;

enum class CombinationKind : std::uint8_t {
    /// `I(fine [AND] report)`; children are Content.
    WithinComponent,
    /// `Cac{Cac{...} [AND] Cac{...}}`; children are Components of one symbol.
    NestedComponents,
    /// `{I(a) Bdir(b) [XOR] I(c) Bdir(d)}`; children are statement groups.
    ComponentPair,
};

using CombinationChild = std::variant<Content, Box<Component>, Box<StatementTree>>;

/// N-ary logical combination; all children share one operator.
struct Combination {
    Operator op = Operator::And;
    CombinationKind kind = CombinationKind::WithinComponent;
    std::vector<CombinationChild> children;

    friend bool operator==(const Combination&, const Combination&) = default;
};

/// A coded component. The body is atomic content `(...)`, a nested statement
/// `{...}`, or a combination of nested components `{X{...} [op] X{...}}`.
struct Component {
    Symbol symbol = Symbol::Attributes;
    std::optional<Annotation> annotation;
    std::variant<Content, Box<StatementTree>, Box<Combination>> body;

    bool is_atomic() const noexcept { return body.index() == 0; }
    bool is_nested_statement() const noexcept { return body.index() == 1; }
    bool is_nested_combination() const noexcept { return body.index() == 2; }
    const Content& content() const { return std::get<Content>(body); }
    const StatementTree& nested_statement() const { return *std::get<Box<StatementTree>>(body); }
    const Combination& nested_combination() const { return *std::get<Box<Combination>>(body); }

    friend bool operator==(const Component&, const Component&) = default;
};

/// Uncoded prose between components ("to", "with", ",").
struct FreeText {
    std::string text;

    friend bool operator==(const FreeText&, const FreeText&) = default;
};

/// Top-level element of a statement. A Combination here is always a
/// component-pair combination; an Annotation here is statement-level.
using Element = std::variant<Component, Combination, Annotation, FreeText>;

struct StatementTree {
    std::vector<Element> elements;
    /// Provenance only; not part of structural equality.
    Span source;

    bool empty() const noexcept { return elements.empty(); }

    friend bool operator==(const StatementTree& a, const StatementTree& b) { return a.elements == b.elements; }
};

/// Highest level of expressiveness whose features the tree uses.
Level detect_level(const StatementTree& tree);

/// Number of components (at any depth) in the tree.
std::size_t count_components(const StatementTree& tree);

}  // namespace igscript

#endif  // IGSCRIPT_TREE_HPP
