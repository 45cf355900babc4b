#include "igscript/transform.hpp"

#include "content_util.hpp"
#include "text_util.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <set>

namespace igscript {

std::size_t ExpansionResult::top_level_count() const {
    return static_cast<std::size_t>(
        std::count_if(atoms.begin(), atoms.end(), [](const AtomicStatement& a) { return a.is_top_level(); }));
}

namespace {

// ---------------------------------------------------------------------------
// Level filtering

void strip(StatementTree& tree);

void strip(Combination& comb) {
    for (auto& child : comb.children) {
        if (auto* c = std::get_if<Box<Component>>(&child)) {
            Component& comp = **c;
            comp.annotation.reset();
            if (auto* s = std::get_if<Box<StatementTree>>(&comp.body)) strip(**s);
            if (auto* n = std::get_if<Box<Combination>>(&comp.body)) strip(**n);
        } else if (auto* s = std::get_if<Box<StatementTree>>(&child)) {
            strip(**s);
        }
    }
}

void strip(StatementTree& tree) {
    std::erase_if(tree.elements, [](const Element& el) { return std::holds_alternative<Annotation>(el); });
    for (auto& el : tree.elements) {
        if (auto* c = std::get_if<Component>(&el)) {
            c->annotation.reset();
            if (auto* s = std::get_if<Box<StatementTree>>(&c->body)) strip(**s);
            if (auto* n = std::get_if<Box<Combination>>(&c->body)) strip(**n);
        } else if (auto* comb = std::get_if<Combination>(&el)) {
            strip(*comb);
        }
    }
}

bool leading_punctuation(const Element& el) {
    const auto* ft = std::get_if<FreeText>(&el);
    return ft && !ft->text.empty() && std::string_view(",.;:!?").find(ft->text.front()) != std::string_view::npos;
}

Combination flatten_combination(const Combination& comb);

Content component_fragments(const Component& c) {
    if (c.is_atomic()) return c.content();
    if (c.is_nested_statement()) return flatten(c.nested_statement());
    return Content{Fragment{Box<Combination>(flatten_combination(c.nested_combination()))}};
}

Combination flatten_combination(const Combination& comb) {
    Combination out{comb.op, CombinationKind::WithinComponent, {}};
    for (const auto& child : comb.children) {
        Content c;
        if (const auto* content = std::get_if<Content>(&child)) {
            c = *content;
        } else if (const auto* comp = std::get_if<Box<Component>>(&child)) {
            c = component_fragments(**comp);
        } else {
            c = flatten(*std::get<Box<StatementTree>>(child));
        }
        normalize_content(c);
        out.children.emplace_back(std::move(c));
    }
    return out;
}

std::optional<Symbol> first_symbol(const StatementTree& tree);

std::optional<Symbol> first_symbol(const Combination& comb) {
    for (const auto& child : comb.children) {
        if (const auto* comp = std::get_if<Box<Component>>(&child)) return (*comp)->symbol;
        if (const auto* s = std::get_if<Box<StatementTree>>(&child)) {
            if (auto sym = first_symbol(**s)) return sym;
        }
    }
    return std::nullopt;
}

std::optional<Symbol> first_symbol(const StatementTree& tree) {
    for (const auto& el : tree.elements) {
        if (const auto* c = std::get_if<Component>(&el)) return c->symbol;
        if (const auto* comb = std::get_if<Combination>(&el)) {
            if (auto sym = first_symbol(*comb)) return sym;
        }
    }
    return std::nullopt;
}

StatementTree to_core(const StatementTree& tree) {
    StatementTree out;
    out.source = tree.source;
    for (const auto& el : tree.elements) {
        if (const auto* c = std::get_if<Component>(&el)) {
            Content content = component_fragments(*c);
            normalize_content(content);
            out.elements.emplace_back(Component{c->symbol, std::nullopt, std::move(content)});
        } else if (const auto* comb = std::get_if<Combination>(&el)) {
            Content content{Fragment{Box<Combination>(flatten_combination(*comb))}};
            out.elements.emplace_back(Component{first_symbol(*comb).value_or(Symbol::Aim), std::nullopt,
                                                std::move(content)});
        } else if (const auto* ft = std::get_if<FreeText>(&el)) {
            out.elements.emplace_back(*ft);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Alternative counting on Core trees, independent of the enumeration below.

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t alternatives(const Content& content);

std::uint64_t alternatives(const Combination& comb) {
    std::uint64_t n = 0;
    for (const auto& child : comb.children) {
        if (const auto* c = std::get_if<Content>(&child)) n = sat_add(n, alternatives(*c));
    }
    return n;
}

std::uint64_t alternatives(const Content& content) {
    std::uint64_t n = 1;
    for (const auto& f : content) {
        if (!f.is_text()) n = sat_mul(n, alternatives(f.group()));
    }
    return n;
}

// ---------------------------------------------------------------------------
// Expansion

/// A choice structure: products multiply, choices add.
struct Node {
    enum class Kind { Leaf, Product, Choice };
    Kind kind = Kind::Product;
    Operator op = Operator::And;
    std::vector<Node> children;
    std::size_t occurrence = 0;  // Leaf
    std::string text;            // Leaf
    std::vector<Annotation> statement_tags;
    std::vector<Annotation> ref_tags;
};

/// One component occurrence in the statement.
struct Occurrence {
    Symbol symbol;
    std::vector<Annotation> annotations;
    std::unique_ptr<Node> nested;
};

struct Selection {
    std::size_t choice = 0;
    std::vector<Selection> parts;
};

std::uint64_t count(const Node& n) {
    switch (n.kind) {
        case Node::Kind::Leaf: return 1;
        case Node::Kind::Choice: {
            std::uint64_t total = 0;
            for (const auto& c : n.children) total = sat_add(total, count(c));
            return total;
        }
        case Node::Kind::Product: {
            std::uint64_t total = 1;
            for (const auto& c : n.children) total = sat_mul(total, count(c));
            return total;
        }
    }
    return 1;
}

std::vector<Selection> enumerate(const Node& n) {
    switch (n.kind) {
        case Node::Kind::Leaf: return {Selection{}};
        case Node::Kind::Choice: {
            std::vector<Selection> out;
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                for (auto& s : enumerate(n.children[i])) out.push_back(Selection{i, {std::move(s)}});
            }
            return out;
        }
        case Node::Kind::Product: {
            std::vector<Selection> acc{Selection{}};
            for (const auto& child : n.children) {
                const auto options = enumerate(child);
                std::vector<Selection> next;
                next.reserve(acc.size() * options.size());
                for (const auto& a : acc) {
                    for (const auto& o : options) {
                        Selection s = a;
                        s.parts.push_back(o);
                        next.push_back(std::move(s));
                    }
                }
                acc = std::move(next);
            }
            return acc;
        }
    }
    return {};
}

struct Divergence {
    int points = 0;
    Operator op = Operator::And;
};

Divergence diverge(const Node& n, const Selection& a, const Selection& b) {
    switch (n.kind) {
        case Node::Kind::Leaf: return {};
        case Node::Kind::Choice:
            if (a.choice != b.choice) return {1, n.op};
            return diverge(n.children[a.choice], a.parts[0], b.parts[0]);
        case Node::Kind::Product: {
            Divergence total;
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                const Divergence d = diverge(n.children[i], a.parts[i], b.parts[i]);
                if (d.points == 0) continue;
                total.points += d.points;
                total.op = d.op;
                if (total.points > 1) return total;
            }
            return total;
        }
    }
    return {};
}

struct Picked {
    std::vector<std::pair<std::size_t, const std::string*>> leaves;
    std::vector<Annotation> statement_tags;
    std::vector<Annotation> ref_tags;
};

void collect(const Node& n, const Selection& s, Picked& out) {
    out.statement_tags.insert(out.statement_tags.end(), n.statement_tags.begin(), n.statement_tags.end());
    out.ref_tags.insert(out.ref_tags.end(), n.ref_tags.begin(), n.ref_tags.end());
    switch (n.kind) {
        case Node::Kind::Leaf: out.leaves.emplace_back(n.occurrence, &n.text); break;
        case Node::Kind::Choice: collect(n.children[s.choice], s.parts[0], out); break;
        case Node::Kind::Product:
            for (std::size_t i = 0; i < n.children.size(); ++i) collect(n.children[i], s.parts[i], out);
            break;
    }
}

class Expander {
public:
    explicit Expander(std::string base) : base_(std::move(base)) {}

    ExpansionResult run(const StatementTree& tree) {
        Node root = statement_node(tree);
        result_.root_base = base_.base();
        emit(root, nullptr);
        return std::move(result_);
    }

private:
    struct Emitted {
        std::size_t index;
        std::vector<Annotation> ref_tags;
    };

    Node leaf(std::size_t occurrence, std::string text) {
        Node n;
        n.kind = Node::Kind::Leaf;
        n.occurrence = occurrence;
        n.text = std::move(text);
        return n;
    }

    std::size_t add_occurrence(const Component& c) {
        Occurrence occ{c.symbol, {}, nullptr};
        if (c.annotation) occ.annotations.push_back(*c.annotation);
        occurrences_.push_back(std::move(occ));
        return occurrences_.size() - 1;
    }

    Node content_node(const Content& content, std::size_t occ) {
        Node product;
        for (const auto& f : content) {
            if (f.is_text()) {
                product.children.push_back(leaf(occ, f.text()));
            } else {
                product.children.push_back(choice_node(f.group(), occ));
            }
        }
        return product;
    }

    Node choice_node(const Combination& group, std::size_t occ) {
        Node choice;
        choice.kind = Node::Kind::Choice;
        choice.op = group.op;
        for (const auto& child : group.children) choice.children.push_back(content_node(std::get<Content>(child), occ));
        return choice;
    }

    Node component_node(const Component& c) {
        const std::size_t occ = add_occurrence(c);
        if (c.is_atomic()) return content_node(c.content(), occ);
        auto nested = std::make_unique<Node>(c.is_nested_statement() ? statement_node(c.nested_statement())
                                                                     : combination_node(c.nested_combination()));
        occurrences_[occ].nested = std::move(nested);
        return leaf(occ, {});
    }

    /// Body of a component nested in a combination of nested components.
    Node branch_body(const Component& c) {
        if (c.is_nested_statement()) return statement_node(c.nested_statement());
        if (c.is_nested_combination()) return combination_node(c.nested_combination());
        Node product;
        product.children.push_back(component_node(c));
        return product;
    }

    Node combination_node(const Combination& comb) {
        Node choice;
        choice.kind = Node::Kind::Choice;
        choice.op = comb.op;
        for (const auto& child : comb.children) {
            if (const auto* comp = std::get_if<Box<Component>>(&child)) {
                Node body = branch_body(**comp);
                if ((*comp)->annotation) body.ref_tags.push_back(*(*comp)->annotation);
                choice.children.push_back(std::move(body));
            } else if (const auto* stmt = std::get_if<Box<StatementTree>>(&child)) {
                choice.children.push_back(statement_node(**stmt, false));
            } else {
                Node product;
                product.children.push_back(content_node(std::get<Content>(child), add_occurrence(Component{})));
                choice.children.push_back(std::move(product));
            }
        }
        return choice;
    }

    Node statement_node(const StatementTree& tree, bool scope_root = true) {
        if (scope_root) check_properties(tree);
        Node product;
        for (const auto& el : tree.elements) {
            if (const auto* c = std::get_if<Component>(&el)) {
                product.children.push_back(component_node(*c));
            } else if (const auto* comb = std::get_if<Combination>(&el)) {
                product.children.push_back(combination_node(*comb));
            } else if (const auto* a = std::get_if<Annotation>(&el)) {
                product.statement_tags.push_back(*a);
            }
        }
        return product;
    }

    static void scope_symbols(const StatementTree& tree, std::set<Symbol>& out) {
        for (const auto& el : tree.elements) {
            if (const auto* c = std::get_if<Component>(&el)) {
                out.insert(c->symbol);
            } else if (const auto* comb = std::get_if<Combination>(&el)) {
                for (const auto& child : comb->children) {
                    if (const auto* s = std::get_if<Box<StatementTree>>(&child)) scope_symbols(**s, out);
                }
            }
        }
    }

    void check_properties(const StatementTree& tree) {
        std::set<Symbol> present;
        scope_symbols(tree, present);
        for (Symbol s : present) {
            const auto& si = info(s);
            if (si.is_property && !present.contains(si.parent)) {
                result_.warnings.push_back("property component '" + std::string(si.code) + "' has no '" +
                                           std::string(code_of(si.parent)) + "' component in the same statement");
            }
        }
    }

    SubStatementId id_for(const AtomicStatement* host, std::size_t k, bool bare) const {
        if (host) return host->id.nested(static_cast<std::uint32_t>(k));
        if (bare) return base_;
        return base_.child(static_cast<std::uint32_t>(k));
    }

    std::vector<Emitted> emit(const Node& tree, const AtomicStatement* host) {
        const std::uint64_t n = count(tree);
        if (n + result_.atoms.size() > kMaxExpandedAtoms) {
            throw ExpansionLimitExceeded("statement expands into more than " + std::to_string(kMaxExpandedAtoms) +
                                         " atomic statements");
        }
        const auto selections = enumerate(tree);
        const std::size_t host_nested_offset = host ? nested_counter_.back() : 0;
        if (host) nested_counter_.back() += selections.size();

        std::vector<Emitted> emitted;
        for (std::size_t i = 0; i < selections.size(); ++i) {
            Picked picked;
            collect(tree, selections[i], picked);

            bool has_nested = false;
            for (const auto& [occ, text] : picked.leaves) has_nested = has_nested || occurrences_[occ].nested;
            const bool bare = !host && selections.size() == 1 && !has_nested;

            const std::size_t index = result_.atoms.size();
            result_.atoms.push_back(AtomicStatement{id_for(host, host_nested_offset + i + 1, bare), {}, {}, {}});
            result_.atoms[index].statement_annotations = picked.statement_tags;
            emitted.push_back({index, picked.ref_tags});

            // Group leaves by occurrence, keeping first-appearance order.
            std::vector<std::size_t> order;
            std::map<std::size_t, std::string> texts;
            for (const auto& [occ, text] : picked.leaves) {
                if (!texts.contains(occ)) order.push_back(occ);
                texts[occ] += *text;
            }

            std::map<Symbol, std::vector<CellValue>> cells;
            nested_counter_.push_back(0);
            for (std::size_t occ : order) {
                const Occurrence& o = occurrences_[occ];
                if (o.nested) {
                    const AtomicStatement host_copy = result_.atoms[index];
                    for (const auto& inner : emit(*o.nested, &host_copy)) {
                        CellValue v;
                        v.reference = result_.atoms[inner.index].id;
                        v.text = v.reference->render();
                        v.annotations = o.annotations;
                        v.annotations.insert(v.annotations.end(), inner.ref_tags.begin(), inner.ref_tags.end());
                        cells[o.symbol].push_back(std::move(v));
                    }
                } else {
                    cells[o.symbol].push_back(CellValue{text::normalize(texts[occ]), o.annotations, std::nullopt});
                }
            }
            nested_counter_.pop_back();
            result_.atoms[index].cells = std::move(cells);
        }

        for (std::size_t i = 0; i < selections.size(); ++i) {
            for (std::size_t j = i + 1; j < selections.size(); ++j) {
                const Divergence d = diverge(tree, selections[i], selections[j]);
                if (d.points != 1) continue;
                auto& a = result_.atoms[emitted[i].index];
                auto& b = result_.atoms[emitted[j].index];
                a.linkage.push_back({b.id, d.op});
                b.linkage.push_back({a.id, d.op});
            }
        }
        return emitted;
    }

    SubStatementId base_;
    ExpansionResult result_;
    std::vector<Occurrence> occurrences_;
    std::vector<std::size_t> nested_counter_;
};

}  // namespace

StatementTree filter_level(const StatementTree& tree, Level level) {
    if (level == Level::Logico) return tree;
    StatementTree out = tree;
    strip(out);
    if (level == Level::Extended) return out;
    return to_core(out);
}

Content flatten(const StatementTree& tree) {
    Content out;
    for (const auto& el : tree.elements) {
        Content piece;
        if (const auto* ft = std::get_if<FreeText>(&el)) {
            piece.push_back(Fragment{ft->text});
        } else if (const auto* c = std::get_if<Component>(&el)) {
            piece = component_fragments(*c);
        } else if (const auto* comb = std::get_if<Combination>(&el)) {
            piece.push_back(Fragment{Box<Combination>(flatten_combination(*comb))});
        }
        if (piece.empty()) continue;
        if (!out.empty() && !leading_punctuation(el)) out.push_back(Fragment{std::string(" ")});
        for (auto& f : piece) out.push_back(std::move(f));
    }
    normalize_content(out);
    return out;
}

StatementTree reorder_conditions(const StatementTree& tree) {
    StatementTree out = tree;
    std::stable_partition(out.elements.begin(), out.elements.end(), [](const Element& el) {
        const auto* c = std::get_if<Component>(&el);
        return c && c->symbol == Symbol::ActivationCondition;
    });
    return out;
}

std::uint64_t degree_of_variability(const StatementTree& tree) {
    const StatementTree core = filter_level(tree, Level::Core);
    std::uint64_t n = 1;
    for (const auto& el : core.elements) {
        if (const auto* c = std::get_if<Component>(&el)) n = sat_mul(n, alternatives(c->content()));
    }
    return n;
}

ExpansionResult expand(const StatementTree& tree, std::string_view base_id, Level level) {
    Expander expander{std::string(base_id)};
    return expander.run(filter_level(tree, level));
}

}  // namespace igscript
