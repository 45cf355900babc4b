#ifndef IGSCRIPT_SYMBOLS_HPP
#define IGSCRIPT_SYMBOLS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace igscript {

/// Component kinds of the Institutional Grammar, in canonical table order.
enum class Symbol : std::uint8_t {
    Attributes,
    AttributesProperty,
    Deontic,
    Aim,
    DirectObject,
    DirectObjectProperty,
    IndirectObject,
    IndirectObjectProperty,
    ConstitutedEntity,
    ConstitutedEntityProperty,
    Modal,
    ConstitutiveFunction,
    ConstitutingProperties,
    ConstitutingPropertiesProperty,
    ActivationCondition,
    ExecutionConstraint,
    OrElse,
};

inline constexpr std::size_t kSymbolCount = 17;

enum class SymbolFamily : std::uint8_t { Regulative, Constitutive, Shared };

/// Static description of one component symbol.
struct ComponentSymbol {
    Symbol symbol;
    std::string_view code;
    std::string_view name;
    SymbolFamily family;
    bool is_property;
    /// Parent component for `X,p` symbols; equals `symbol` otherwise.
    Symbol parent;
    /// Compulsory for its statement family. Context components are compulsory
    /// but may be left implicit, see `implied_default`.
    bool required;
    /// Value implied when the component is absent (context components only).
    /// Exporters leave such cells empty; this is informational.
    std::string_view implied_default;

    friend bool operator==(const ComponentSymbol& a, const ComponentSymbol& b) { return a.symbol == b.symbol; }
};

const std::array<ComponentSymbol, kSymbolCount>& symbol_table();

const ComponentSymbol& info(Symbol s);

inline std::string_view code_of(Symbol s) { return info(s).code; }

class UnknownSymbol : public std::invalid_argument {
public:
    explicit UnknownSymbol(std::string code)
        : std::invalid_argument("unknown component symbol '" + code + "'"), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Exact, case-sensitive lookup. `A,p` never resolves to `A`.
std::optional<Symbol> find_symbol(std::string_view code) noexcept;

/// Throwing variant of find_symbol().
const ComponentSymbol& symbol_from_code(std::string_view code);

enum class Operator : std::uint8_t { And, Or, Xor };

std::string_view to_string(Operator op);
/// Accepts exactly "AND", "OR" or "XOR".
std::optional<Operator> operator_from_token(std::string_view token) noexcept;

/// Levels of expressiveness, totally ordered Core < Extended < Logico.
enum class Level : std::uint8_t { Core = 0, Extended = 1, Logico = 2 };

inline int rank(Level level) { return static_cast<int>(level); }
std::string_view to_string(Level level);
/// Case-insensitive ("core", "Extended", "LOGICO").
std::optional<Level> level_from_string(std::string_view text) noexcept;

}  // namespace igscript

#endif  // IGSCRIPT_SYMBOLS_HPP
