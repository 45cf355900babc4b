#include "igscript/tokenizer.hpp"

#include "text_util.hpp"

namespace igscript {

std::string_view to_string(TokenKind kind) {
    switch (kind) {
        case TokenKind::SymbolCode: return "SymbolCode";
        case TokenKind::OpenParen: return "OpenParen";
        case TokenKind::CloseParen: return "CloseParen";
        case TokenKind::OpenBrace: return "OpenBrace";
        case TokenKind::CloseBrace: return "CloseBrace";
        case TokenKind::OperatorBracket: return "OperatorBracket";
        case TokenKind::AnnotationBracket: return "AnnotationBracket";
        case TokenKind::Text: return "Text";
    }
    return "?";
}

namespace {

class Tokenizer {
public:
    Tokenizer(std::string_view input, TokenizerMode mode) : in_(input) { modes_.push_back(mode); }

    std::vector<Token> run() {
        std::size_t i = 0;
        while (i < in_.size()) {
            const char c = in_[i];
            switch (c) {
                case '[': i = bracket(i); break;
                case '(':
                    single(TokenKind::OpenParen, i++);
                    modes_.push_back(TokenizerMode::Content);
                    break;
                case '{':
                    single(TokenKind::OpenBrace, i++);
                    modes_.push_back(TokenizerMode::Statement);
                    break;
                case ')':
                case '}':
                    single(c == ')' ? TokenKind::CloseParen : TokenKind::CloseBrace, i++);
                    if (modes_.size() > 1) modes_.pop_back();
                    break;
                default:
                    if (modes_.back() == TokenizerMode::Statement && text::is_ident_start(c) &&
                        (i == 0 || !text::is_ident_char(in_[i - 1]))) {
                        i = identifier(i);
                    } else {
                        text_.append(1, c);
                        ++i;
                    }
            }
        }
        flush_text(in_.size());
        return std::move(tokens_);
    }

private:
    void flush_text(std::size_t end) {
        if (text_.empty()) return;
        const std::size_t start = end - text_.size();
        tokens_.push_back({TokenKind::Text, {start, text_.size()}, std::move(text_), std::nullopt});
        text_.clear();
    }

    void single(TokenKind kind, std::size_t at) {
        flush_text(at);
        tokens_.push_back({kind, {at, 1}, std::string(1, in_[at]), std::nullopt});
    }

    std::size_t bracket(std::size_t at) {
        const std::size_t close = text::matching_square(in_, at);
        if (close == std::string_view::npos) throw UnterminatedBracket(at);
        flush_text(at);
        const std::string_view interior = text::trim(in_.substr(at + 1, close - at - 1));
        Token tok{TokenKind::AnnotationBracket, {at, close + 1 - at}, std::string(interior), std::nullopt};
        if (auto op = operator_from_token(interior)) {
            tok.kind = TokenKind::OperatorBracket;
            tok.op = op;
        }
        tokens_.push_back(std::move(tok));
        return close + 1;
    }

    std::size_t identifier(std::size_t at) {
        std::size_t end = at + 1;
        while (end < in_.size() && text::is_ident_char(in_[end])) ++end;
        if (end + 1 < in_.size() && in_[end] == ',' && in_[end + 1] == 'p' &&
            (end + 2 == in_.size() || !text::is_ident_char(in_[end + 2]))) {
            end += 2;
        }

        std::size_t next = end;
        if (next < in_.size() && in_[next] == '[') {
            const std::size_t close = text::matching_square(in_, next);
            if (close != std::string_view::npos &&
                !operator_from_token(text::trim(in_.substr(next + 1, close - next - 1)))) {
                next = close + 1;
            }
        }
        if (next < in_.size() && (in_[next] == '(' || in_[next] == '{')) {
            flush_text(at);
            tokens_.push_back({TokenKind::SymbolCode, {at, end - at}, std::string(in_.substr(at, end - at)),
                               std::nullopt});
        } else {
            text_.append(in_.substr(at, end - at));
        }
        return end;
    }

    std::string_view in_;
    std::vector<TokenizerMode> modes_;
    std::vector<Token> tokens_;
    std::string text_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view input, TokenizerMode mode) { return Tokenizer(input, mode).run(); }

}  // namespace igscript
