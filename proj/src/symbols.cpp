#include "igscript/symbols.hpp"

#include <algorithm>
#include <cctype>

namespace igscript {

namespace {

using enum Symbol;
using enum SymbolFamily;

constexpr std::array<ComponentSymbol, kSymbolCount> kTable{{
    {Attributes, "A", "Attributes", Regulative, false, Attributes, true, ""},
    {AttributesProperty, "A,p", "Attributes Property", Regulative, true, Attributes, false, ""},
    {Deontic, "D", "Deontic", Regulative, false, Deontic, false, ""},
    {Aim, "I", "Aim", Regulative, false, Aim, true, ""},
    {DirectObject, "Bdir", "Direct Object", Regulative, false, DirectObject, false, ""},
    {DirectObjectProperty, "Bdir,p", "Direct Object Property", Regulative, true, DirectObject, false, ""},
    {IndirectObject, "Bind", "Indirect Object", Regulative, false, IndirectObject, false, ""},
    {IndirectObjectProperty, "Bind,p", "Indirect Object Property", Regulative, true, IndirectObject, false, ""},
    {ConstitutedEntity, "E", "Constituted Entity", Constitutive, false, ConstitutedEntity, true, ""},
    {ConstitutedEntityProperty, "E,p", "Constituted Entity Property", Constitutive, true, ConstitutedEntity, false,
     ""},
    {Modal, "M", "Modal", Constitutive, false, Modal, false, ""},
    {ConstitutiveFunction, "F", "Constitutive Function", Constitutive, false, ConstitutiveFunction, true, ""},
    {ConstitutingProperties, "P", "Constituting Property", Constitutive, false, ConstitutingProperties, false, ""},
    {ConstitutingPropertiesProperty, "P,p", "Constituting Property Property", Constitutive, true,
     ConstitutingProperties, false, ""},
    {ActivationCondition, "Cac", "Activation Condition", Shared, false, ActivationCondition, true,
     "under any condition"},
    {ExecutionConstraint, "Cex", "Execution Constraint", Shared, false, ExecutionConstraint, true,
     "without constraints"},
    {OrElse, "O", "Or else", Shared, false, OrElse, false, ""},
}};

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
           });
}

}  // namespace

const std::array<ComponentSymbol, kSymbolCount>& symbol_table() { return kTable; }

const ComponentSymbol& info(Symbol s) { return kTable[static_cast<std::size_t>(s)]; }

std::optional<Symbol> find_symbol(std::string_view code) noexcept {
    // Codes are compared whole, so a property code can never fall back to its parent.
    for (const auto& entry : kTable) {
        if (entry.code == code) return entry.symbol;
    }
    return std::nullopt;
}

const ComponentSymbol& symbol_from_code(std::string_view code) {
    if (auto s = find_symbol(code)) return info(*s);
    throw UnknownSymbol(std::string(code));
}

std::string_view to_string(Operator op) {
    switch (op) {
        case Operator::And: return "AND";
        case Operator::Or: return "OR";
        case Operator::Xor: return "XOR";
    }
    return "?";
}

std::optional<Operator> operator_from_token(std::string_view token) noexcept {
    if (token == "AND") return Operator::And;
    if (token == "OR") return Operator::Or;
    if (token == "XOR") return Operator::Xor;
    return std::nullopt;
}

std::string_view to_string(Level level) {
    switch (level) {
        case Level::Core: return "core";
        case Level::Extended: return "extended";
        case Level::Logico: return "logico";
    }
    return "?";
}

std::optional<Level> level_from_string(std::string_view text) noexcept {
    for (Level l : {Level::Core, Level::Extended, Level::Logico}) {
        if (iequals(text, to_string(l))) return l;
    }
    return std::nullopt;
}

}  // namespace igscript
