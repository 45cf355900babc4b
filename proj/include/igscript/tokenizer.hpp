#ifndef IGSCRIPT_TOKENIZER_HPP
#define IGSCRIPT_TOKENIZER_HPP

#include "igscript/symbols.hpp"
#include "igscript/tree.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace igscript {

enum class TokenKind {
    SymbolCode,
    OpenParen,
    CloseParen,
    OpenBrace,
    CloseBrace,
    OperatorBracket,
    AnnotationBracket,
    Text,
};

std::string_view to_string(TokenKind kind);

struct Token {
    TokenKind kind;
    Span span;
    /// Source slice for SymbolCode/Text, trimmed interior for AnnotationBracket.
    std::string text;
    /// Set for OperatorBracket.
    std::optional<Operator> op;

    friend bool operator==(const Token&, const Token&) = default;
};

/// Raised when the input ends inside a `[...]` bracket.
class UnterminatedBracket : public std::runtime_error {
public:
    explicit UnterminatedBracket(std::size_t position)
        : std::runtime_error("unterminated '[' at offset " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

enum class TokenizerMode {
    /// Statement level: component symbols are recognised.
    Statement,
    /// Inside a `(...)` component body: everything but brackets is text.
    Content,
};

/// Lossless tokenization: concatenating the token spans reproduces the input.
///
/// A symbol code is an identifier (optionally with a `,p` suffix) directly
/// followed by an optional non-operator `[...]` and then `(` or `{`. The code
/// is not checked against the symbol table here. Inside parenthesised
/// component bodies no symbols are recognised.
std::vector<Token> tokenize(std::string_view input, TokenizerMode mode = TokenizerMode::Statement);

}  // namespace igscript

#endif  // IGSCRIPT_TOKENIZER_HPP
