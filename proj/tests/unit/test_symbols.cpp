#include "igscript/symbols.hpp"

#include <doctest.h>

#include <set>

using namespace igscript;

TEST_CASE("symbol table covers the component vocabulary") {
    const auto& table = symbol_table();
    CHECK(table.size() == 17);

    std::set<std::string_view> codes;
    for (const auto& s : table) {
        CHECK(codes.insert(s.code).second);
        CHECK(info(s.symbol).code == s.code);
        CHECK(find_symbol(s.code) == s.symbol);
    }
    for (auto code : {"A", "A,p", "D", "I", "Bdir", "Bdir,p", "Bind", "Bind,p", "Cac", "Cex", "O", "E", "E,p", "M",
                      "F", "P", "P,p"}) {
        CAPTURE(code);
        CHECK(codes.contains(code));
    }
}

TEST_CASE("property symbols point at their parent") {
    for (const auto& s : symbol_table()) {
        const std::string_view code = s.code;
        if (code.ends_with(",p")) {
            CHECK(s.is_property);
            CHECK(code_of(s.parent) == code.substr(0, code.size() - 2));
        } else {
            CHECK_FALSE(s.is_property);
            CHECK(s.parent == s.symbol);
        }
    }
}

TEST_CASE("lookup is exact") {
    CHECK_FALSE(find_symbol("a").has_value());
    CHECK_FALSE(find_symbol("Bdir,").has_value());
    CHECK_FALSE(find_symbol("A,p ").has_value());
    CHECK_FALSE(find_symbol("").has_value());
    CHECK(find_symbol("A,p") == Symbol::AttributesProperty);
    CHECK_THROWS_AS(symbol_from_code("Q"), UnknownSymbol);
    try {
        symbol_from_code("Xyz");
    } catch (const UnknownSymbol& e) {
        CHECK(e.code() == "Xyz");
    }
}

TEST_CASE("context components carry implied defaults") {
    CHECK(info(Symbol::ActivationCondition).implied_default == "under any condition");
    CHECK(info(Symbol::ExecutionConstraint).implied_default == "without constraints");
    CHECK(info(Symbol::Aim).implied_default.empty());
    CHECK(info(Symbol::Attributes).required);
    CHECK_FALSE(info(Symbol::Deontic).required);
    CHECK(info(Symbol::ConstitutedEntity).family == SymbolFamily::Constitutive);
    CHECK(info(Symbol::OrElse).family == SymbolFamily::Shared);
}

TEST_CASE("operators and levels") {
    CHECK(operator_from_token("AND") == Operator::And);
    CHECK(operator_from_token("XOR") == Operator::Xor);
    CHECK_FALSE(operator_from_token("and").has_value());
    CHECK_FALSE(operator_from_token(" OR").has_value());
    CHECK(to_string(Operator::Or) == "OR");

    CHECK(rank(Level::Core) < rank(Level::Extended));
    CHECK(rank(Level::Extended) < rank(Level::Logico));
    CHECK(level_from_string("EXTENDED") == Level::Extended);
    CHECK(level_from_string("core") == Level::Core);
    CHECK_FALSE(level_from_string("basic").has_value());
    for (Level l : {Level::Core, Level::Extended, Level::Logico}) CHECK(level_from_string(to_string(l)) == l);
}
