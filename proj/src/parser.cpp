#include "igscript/parser.hpp"

#include "igscript/tokenizer.hpp"
#include "content_util.hpp"
#include "text_util.hpp"

#include <algorithm>

namespace igscript {

namespace {

constexpr std::size_t kMaxNesting = 128;

Span cover(Span a, Span b) {
    const std::size_t begin = std::min(a.offset, b.offset);
    return {begin, std::max(a.end(), b.end()) - begin};
}

Issue make_issue(IssueKind kind, std::string message, Span span, Severity severity = Severity::Error) {
    return Issue{kind, severity, std::move(message), span.offset, span.length};
}

/// Bracket balance sweep over raw input. Square brackets are opaque: their
/// interior is skipped.
void check_brackets(std::string_view in, ValidationReport& report) {
    struct Open {
        char c;
        std::size_t at;
    };
    std::vector<Open> stack;
    bool too_deep = false;
    for (std::size_t i = 0; i < in.size(); ++i) {
        const char c = in[i];
        if (c == '[') {
            const std::size_t close = text::matching_square(in, i);
            if (close == std::string_view::npos) {
                report.add(make_issue(IssueKind::UnbalancedBracket, "'[' is never closed", {i, 1}));
                return;
            }
            i = close;
        } else if (c == ']') {
            report.add(make_issue(IssueKind::UnbalancedBracket, "']' without matching '['", {i, 1}));
        } else if (c == '(' || c == '{') {
            stack.push_back({c, i});
            if (stack.size() > kMaxNesting && !too_deep) {
                too_deep = true;
                report.add(make_issue(IssueKind::NestingTooDeep,
                                      "brackets nest deeper than " + std::to_string(kMaxNesting) + " levels",
                                      {i, 1}));
            }
        } else if (c == ')' || c == '}') {
            const char want = c == ')' ? '(' : '{';
            if (stack.empty()) {
                report.add(make_issue(IssueKind::UnbalancedBracket,
                                      std::string("'") + c + "' without matching '" + want + "'", {i, 1}));
            } else if (stack.back().c != want) {
                report.add(make_issue(IssueKind::UnbalancedBracket,
                                      std::string("'") + c + "' closes '" + stack.back().c + "' opened at offset " +
                                          std::to_string(stack.back().at),
                                      {i, 1}));
            } else {
                stack.pop_back();
            }
        }
    }
    for (const auto& open : stack) {
        report.add(make_issue(IssueKind::UnbalancedBracket,
                              std::string("'") + open.c + "' is never closed", {open.at, 1}));
    }
}

class Parser {
public:
    Parser(std::string_view input, std::vector<Token> tokens, ValidationReport& report)
        : in_(input), tok_(std::move(tokens)), partner_(tok_.size(), 0), report_(report) {
        std::vector<std::size_t> open;
        for (std::size_t i = 0; i < tok_.size(); ++i) {
            const auto k = tok_[i].kind;
            if (k == TokenKind::OpenParen || k == TokenKind::OpenBrace) {
                open.push_back(i);
            } else if ((k == TokenKind::CloseParen || k == TokenKind::CloseBrace) && !open.empty()) {
                partner_[open.back()] = i;
                open.pop_back();
            }
        }
    }

    StatementTree statement(std::size_t b, std::size_t e) {
        StatementTree tree;
        tree.source = span_of(b, e);
        std::string free;
        auto flush = [&] {
            std::string t = text::normalize(free);
            free.clear();
            if (!t.empty()) tree.elements.emplace_back(FreeText{std::move(t)});
        };

        std::size_t i = b;
        while (i < e) {
            const Token& t = tok_[i];
            switch (t.kind) {
                case TokenKind::Text:
                    free += t.text;
                    ++i;
                    break;
                case TokenKind::AnnotationBracket:
                    flush();
                    tree.elements.emplace_back(Annotation{t.text, AnnotationScope::Statement});
                    ++i;
                    break;
                case TokenKind::OperatorBracket:
                    report_.add(make_issue(IssueKind::MisplacedOperator,
                                           "logical operator outside of a combination; wrap the combined parts in "
                                           "'(...)' within a component or in '{...}' for component pairs",
                                           t.span));
                    ++i;
                    break;
                case TokenKind::SymbolCode: {
                    flush();
                    auto [component, next] = component_at(i);
                    if (component) tree.elements.emplace_back(std::move(*component));
                    i = next;
                    break;
                }
                case TokenKind::OpenParen: {
                    const std::size_t close = match(i);
                    reject_structure(i + 1, close);
                    free += in_.substr(t.span.offset, tok_[close].span.end() - t.span.offset);
                    i = close + 1;
                    break;
                }
                case TokenKind::OpenBrace: {
                    flush();
                    const std::size_t close = match(i);
                    auto body = brace_body(i, close, std::nullopt);
                    if (auto* comb = std::get_if<Combination>(&body)) tree.elements.emplace_back(std::move(*comb));
                    i = close + 1;
                    break;
                }
                case TokenKind::CloseParen:
                case TokenKind::CloseBrace: ++i; break;
            }
        }
        flush();
        return tree;
    }

    Content content(std::size_t b, std::size_t e) {
        const auto ops = top_level_operators(b, e);
        if (ops.empty()) return fragments(b, e);

        Combination comb{tok_[ops.front()].op.value(), CombinationKind::WithinComponent, {}};
        check_uniform(ops);
        for_each_segment(b, e, ops, [&](std::size_t sb, std::size_t se, std::size_t adjacent_op) {
            Content child = fragments(sb, se);
            if (child.empty()) {
                report_.add(make_issue(IssueKind::MissingOperand, "logical operator is missing an operand",
                                       tok_[adjacent_op].span));
            }
            comb.children.emplace_back(std::move(child));
        });
        return Content{Fragment{Box<Combination>(std::move(comb))}};
    }

private:
    using BraceBody = std::variant<std::monostate, StatementTree, Combination>;

    Span span_of(std::size_t b, std::size_t e) const {
        if (b >= e) return {b < tok_.size() ? tok_[b].span.offset : in_.size(), 0};
        return cover(tok_[b].span, tok_[e - 1].span);
    }

    std::size_t match(std::size_t open) const { return partner_[open]; }

    /// Parenthesised prose outside components may hold only text.
    void reject_structure(std::size_t b, std::size_t e) {
        for (std::size_t i = b; i < e; ++i) {
            const Token& t = tok_[i];
            if (t.kind == TokenKind::OperatorBracket) {
                report_.add(make_issue(IssueKind::MisplacedOperator,
                                       "logical operator in uncoded text; combinations must sit inside a component",
                                       t.span));
            } else if (t.kind == TokenKind::AnnotationBracket) {
                report_.add(make_issue(IssueKind::UnexpectedAnnotation, "annotation inside uncoded parenthesised text",
                                       t.span));
            } else if (t.kind == TokenKind::OpenBrace) {
                report_.add(make_issue(IssueKind::UnexpectedBrace, "brace inside uncoded parenthesised text",
                                       t.span));
            }
        }
    }

    std::vector<std::size_t> top_level_operators(std::size_t b, std::size_t e) const {
        std::vector<std::size_t> ops;
        int depth = 0;
        for (std::size_t i = b; i < e; ++i) {
            switch (tok_[i].kind) {
                case TokenKind::OpenParen:
                case TokenKind::OpenBrace: ++depth; break;
                case TokenKind::CloseParen:
                case TokenKind::CloseBrace: --depth; break;
                case TokenKind::OperatorBracket:
                    if (depth == 0) ops.push_back(i);
                    break;
                default: break;
            }
        }
        return ops;
    }

    void check_uniform(const std::vector<std::size_t>& ops) {
        const Operator first = *tok_[ops.front()].op;
        for (std::size_t idx : ops) {
            if (*tok_[idx].op != first) {
                report_.add(make_issue(IssueKind::AmbiguousPrecedence,
                                       "operators [" + std::string(to_string(first)) + "] and [" +
                                           std::string(to_string(*tok_[idx].op)) +
                                           "] are mixed without grouping; indicate precedence with brackets",
                                       tok_[idx].span));
                return;
            }
        }
    }

    template <class Fn>
    void for_each_segment(std::size_t b, std::size_t e, const std::vector<std::size_t>& ops, Fn&& fn) {
        std::size_t start = b;
        for (std::size_t k = 0; k <= ops.size(); ++k) {
            const std::size_t stop = k < ops.size() ? ops[k] : e;
            fn(start, stop, k < ops.size() ? ops[k] : ops[k - 1]);
            start = stop + 1;
        }
    }

    bool blank(std::size_t b, std::size_t e) const {
        for (std::size_t i = b; i < e; ++i) {
            if (tok_[i].kind != TokenKind::Text || !text::trim(tok_[i].text).empty()) return false;
        }
        return true;
    }

    Content fragments(std::size_t b, std::size_t e) {
        Content out;
        std::size_t i = b;
        while (i < e) {
            const Token& t = tok_[i];
            switch (t.kind) {
                case TokenKind::Text:
                case TokenKind::SymbolCode:
                    out.push_back(Fragment{t.text});
                    ++i;
                    break;
                case TokenKind::OpenParen: {
                    const std::size_t close = match(i);
                    Content inner = content(i + 1, close);
                    if (is_single_group(inner)) {
                        out.push_back(std::move(inner.front()));
                    } else if (inner.empty()) {
                        report_.add(make_issue(IssueKind::EmptyContent, "empty parentheses in component content",
                                               cover(t.span, tok_[close].span)));
                    } else {
                        out.push_back(Fragment{std::string("(")});
                        for (auto& f : inner) out.push_back(std::move(f));
                        out.push_back(Fragment{std::string(")")});
                    }
                    i = close + 1;
                    break;
                }
                case TokenKind::OpenBrace: {
                    const std::size_t close = match(i);
                    report_.add(make_issue(IssueKind::UnexpectedBrace,
                                           "braces are not allowed inside '(...)' component content; use '{...}' "
                                           "directly after the component symbol for nesting",
                                           t.span));
                    i = close + 1;
                    break;
                }
                case TokenKind::AnnotationBracket:
                    report_.add(make_issue(IssueKind::UnexpectedAnnotation,
                                           "annotation inside component content; annotations go directly after "
                                           "the component symbol",
                                           t.span));
                    ++i;
                    break;
                case TokenKind::OperatorBracket:  // handled by content()
                case TokenKind::CloseParen:
                case TokenKind::CloseBrace: ++i; break;
            }
        }
        normalize_content(out);
        return out;
    }

    std::pair<std::optional<Component>, std::size_t> component_at(std::size_t i) {
        const Token& sym = tok_[i];
        const auto symbol = find_symbol(sym.text);
        if (!symbol) {
            report_.add(make_issue(IssueKind::UnknownSymbol, "unknown component symbol '" + sym.text + "'", sym.span));
        }

        std::size_t k = i + 1;
        std::optional<Annotation> annotation;
        if (tok_[k].kind == TokenKind::AnnotationBracket) {
            annotation = Annotation{tok_[k].text, AnnotationScope::Component};
            ++k;
        }
        const std::size_t close = match(k);
        const Span whole = cover(sym.span, tok_[close].span);

        Component comp;
        comp.symbol = symbol.value_or(Symbol::Attributes);
        if (tok_[k].kind == TokenKind::OpenParen) {
            Content body = content(k + 1, close);
            if (body.empty()) {
                report_.add(make_issue(IssueKind::EmptyContent, "component '" + sym.text + "' has empty content",
                                       whole));
            }
            comp.body = std::move(body);
        } else {
            if (symbol && info(*symbol).is_property) {
                report_.add(make_issue(IssueKind::PropertyNesting,
                                       "property component '" + sym.text + "' holds a nested statement", sym.span,
                                       Severity::Warning));
            }
            if (blank(k + 1, close)) {
                report_.add(make_issue(IssueKind::EmptyContent, "component '" + sym.text + "' has empty content",
                                       whole));
            } else {
                auto body = brace_body(k, close, symbol.value_or(Symbol::Attributes));
                if (auto* stmt = std::get_if<StatementTree>(&body)) {
                    if (annotation) annotation->scope = AnnotationScope::NestedComponent;
                    comp.body = Box<StatementTree>(std::move(*stmt));
                } else if (auto* comb = std::get_if<Combination>(&body)) {
                    if (annotation) annotation->scope = AnnotationScope::Combination;
                    comp.body = Box<Combination>(std::move(*comb));
                }
            }
        }
        comp.annotation = std::move(annotation);
        if (!symbol) return {std::nullopt, close + 1};
        return {std::move(comp), close + 1};
    }

    /// Index of the single braced component spanning [b, e) ignoring blank
    /// text, or npos.
    std::size_t single_braced_component(std::size_t b, std::size_t e) const {
        while (b < e && tok_[b].kind == TokenKind::Text && text::trim(tok_[b].text).empty()) ++b;
        while (e > b && tok_[e - 1].kind == TokenKind::Text && text::trim(tok_[e - 1].text).empty()) --e;
        if (b >= e || tok_[b].kind != TokenKind::SymbolCode) return std::string_view::npos;
        std::size_t k = b + 1;
        if (tok_[k].kind == TokenKind::AnnotationBracket) ++k;
        if (tok_[k].kind != TokenKind::OpenBrace || match(k) != e - 1) return std::string_view::npos;
        return b;
    }

    BraceBody brace_body(std::size_t open, std::size_t close, std::optional<Symbol> owner) {
        const std::size_t b = open + 1;
        const std::size_t e = close;
        const auto ops = top_level_operators(b, e);
        if (ops.empty()) {
            if (!owner) {
                report_.add(make_issue(IssueKind::MissingCombinationOperator,
                                       "'{...}' without a component symbol must combine component groups with "
                                       "[AND], [OR] or [XOR]",
                                       tok_[open].span));
                statement(b, e);
                return std::monostate{};
            }
            StatementTree nested = statement(b, e);
            if (count_components(nested) == 0) {
                report_.add(make_issue(IssueKind::NoComponentsFound, "nested statement contains no components",
                                       cover(tok_[open].span, tok_[close].span)));
            }
            return nested;
        }

        check_uniform(ops);
        const Operator op = *tok_[ops.front()].op;

        bool all_braced = true;
        for_each_segment(b, e, ops, [&](std::size_t sb, std::size_t se, std::size_t) {
            all_braced = all_braced && single_braced_component(sb, se) != std::string_view::npos;
        });

        Combination comb{op, CombinationKind::ComponentPair, {}};
        if (owner && all_braced) {
            comb.kind = CombinationKind::NestedComponents;
            for_each_segment(b, e, ops, [&](std::size_t sb, std::size_t se, std::size_t) {
                const std::size_t at = single_braced_component(sb, se);
                const auto inner = find_symbol(tok_[at].text);
                if (inner && *inner != *owner) {
                    report_.add(make_issue(IssueKind::NestedCombinationMismatch,
                                           "nested component '" + tok_[at].text + "' combined inside '" +
                                               std::string(code_of(*owner)) + "'; combined nested components must "
                                               "share the enclosing symbol",
                                           tok_[at].span));
                }
                auto [component, next] = component_at(at);
                if (component) comb.children.emplace_back(Box<Component>(std::move(*component)));
            });
            return comb;
        }

        for_each_segment(b, e, ops, [&](std::size_t sb, std::size_t se, std::size_t adjacent_op) {
            if (blank(sb, se)) {
                report_.add(make_issue(IssueKind::MissingOperand, "logical operator is missing an operand",
                                       tok_[adjacent_op].span));
                return;
            }
            StatementTree branch = statement(sb, se);
            if (count_components(branch) == 0) {
                report_.add(make_issue(IssueKind::BranchWithoutComponent,
                                       "combined group contains no coded component", span_of(sb, se)));
            }
            comb.children.emplace_back(Box<StatementTree>(std::move(branch)));
        });
        return comb;
    }

    std::string_view in_;
    std::vector<Token> tok_;
    std::vector<std::size_t> partner_;
    ValidationReport& report_;
};

ParseOutcome run(std::string_view input, TokenizerMode mode, bool as_content) {
    ParseOutcome out;
    if (text::trim(input).empty()) {
        out.report.add(make_issue(as_content ? IssueKind::EmptyContent : IssueKind::EmptyInput,
                                  "no coded statement given", {0, input.size()}));
        return out;
    }
    check_brackets(input, out.report);
    if (!out.report.ok) return out;

    std::vector<Token> tokens;
    try {
        tokens = tokenize(input, mode);
    } catch (const UnterminatedBracket& e) {
        out.report.add(make_issue(IssueKind::UnbalancedBracket, "'[' is never closed", {e.position(), 1}));
        return out;
    }
    const std::size_t n = tokens.size();
    Parser parser(input, std::move(tokens), out.report);
    if (as_content) {
        Content c = parser.content(0, n);
        out.tree.elements.emplace_back(Component{Symbol::Attributes, std::nullopt, std::move(c)});
        return out;
    }
    out.tree = parser.statement(0, n);
    out.tree.source = {0, input.size()};
    if (out.report.ok && count_components(out.tree) == 0) {
        out.report.add(make_issue(IssueKind::NoComponentsFound,
                                  "no coded component found; encode at least one component such as A(...)",
                                  {0, input.size()}));
    }
    return out;
}

bool leading_punctuation(const Element& el) {
    const auto* ft = std::get_if<FreeText>(&el);
    return ft && !ft->text.empty() && std::string_view(",.;:!?").find(ft->text.front()) != std::string_view::npos;
}

std::string serialize_fragments(const Content& content);

std::string serialize_group_inner(const Combination& comb) {
    std::string out;
    const std::string sep = " [" + std::string(to_string(comb.op)) + "] ";
    for (std::size_t i = 0; i < comb.children.size(); ++i) {
        if (i) out += sep;
        std::visit(
            [&](const auto& child) {
                using T = std::decay_t<decltype(child)>;
                if constexpr (std::is_same_v<T, Content>) {
                    out += serialize_fragments(child);
                } else if constexpr (std::is_same_v<T, Box<Component>>) {
                    out += serialize(*child);
                } else {
                    out += serialize(*child);
                }
            },
            comb.children[i]);
    }
    return out;
}

std::string serialize_fragments(const Content& content) {
    std::string out;
    for (const auto& f : content) {
        if (f.is_text()) {
            out += f.text();
        } else {
            out += '(' + serialize_group_inner(f.group()) + ')';
        }
    }
    return out;
}

}  // namespace

std::vector<Issue> ValidationReport::warnings() const {
    std::vector<Issue> out;
    for (const auto& i : issues) {
        if (i.severity == Severity::Warning) out.push_back(i);
    }
    return out;
}

ParseError::ParseError(ValidationReport report)
    : std::runtime_error([&] {
          const Issue* e = report.first_error();
          return e ? std::string(to_string(e->kind)) + " at offset " + std::to_string(e->position) + ": " + e->message
                   : std::string("invalid input");
      }()),
      report_(std::move(report)) {}

std::string_view to_string(IssueKind kind) {
    switch (kind) {
        case IssueKind::EmptyInput: return "EmptyInput";
        case IssueKind::UnbalancedBracket: return "UnbalancedBracket";
        case IssueKind::UnknownSymbol: return "UnknownSymbol";
        case IssueKind::EmptyContent: return "EmptyContent";
        case IssueKind::AmbiguousPrecedence: return "AmbiguousPrecedence";
        case IssueKind::MissingOperand: return "MissingOperand";
        case IssueKind::MisplacedOperator: return "MisplacedOperator";
        case IssueKind::UnexpectedAnnotation: return "UnexpectedAnnotation";
        case IssueKind::UnexpectedBrace: return "UnexpectedBrace";
        case IssueKind::NestedCombinationMismatch: return "NestedCombinationMismatch";
        case IssueKind::MissingCombinationOperator: return "MissingCombinationOperator";
        case IssueKind::BranchWithoutComponent: return "BranchWithoutComponent";
        case IssueKind::NoComponentsFound: return "NoComponentsFound";
        case IssueKind::NestingTooDeep: return "NestingTooDeep";
        case IssueKind::PropertyNesting: return "PropertyNesting";
    }
    return "?";
}

ValidationReport validate(std::string_view input) { return run(input, TokenizerMode::Statement, false).report; }

ParseOutcome parse_with_report(std::string_view input) {
    auto out = run(input, TokenizerMode::Statement, false);
    if (!out.report.ok) throw ParseError(std::move(out.report));
    return out;
}

StatementTree parse(std::string_view input) { return parse_with_report(input).tree; }

Content parse_content(std::string_view body) {
    auto out = run(body, TokenizerMode::Content, true);
    if (!out.report.ok) throw ParseError(std::move(out.report));
    return std::get<Content>(std::get<Component>(out.tree.elements.front()).body);
}

std::string serialize_content(const Content& content) {
    if (is_single_group(content)) return serialize_group_inner(content.front().group());
    return serialize_fragments(content);
}

std::string serialize(const Component& c) {
    std::string out(code_of(c.symbol));
    if (c.annotation) out += '[' + c.annotation->text + ']';
    if (c.is_atomic()) {
        out += '(' + serialize_content(c.content()) + ')';
    } else if (c.is_nested_statement()) {
        out += '{' + serialize(c.nested_statement()) + '}';
    } else {
        out += '{' + serialize_group_inner(c.nested_combination()) + '}';
    }
    return out;
}

std::string serialize(const StatementTree& tree) {
    std::string out;
    for (std::size_t i = 0; i < tree.elements.size(); ++i) {
        const Element& el = tree.elements[i];
        if (i && !leading_punctuation(el)) out += ' ';
        std::visit(
            [&](const auto& e) {
                using T = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<T, Component>) {
                    out += serialize(e);
                } else if constexpr (std::is_same_v<T, Combination>) {
                    out += '{' + serialize_group_inner(e) + '}';
                } else if constexpr (std::is_same_v<T, Annotation>) {
                    out += '[' + e.text + ']';
                } else {
                    out += e.text;
                }
            },
            el);
    }
    return out;
}

}  // namespace igscript
