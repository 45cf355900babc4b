// Statements used across tests: the worked examples and crafted invalid input.
#ifndef IGSCRIPT_TESTS_FIXTURES_HPP
#define IGSCRIPT_TESTS_FIXTURES_HPP

#include "igscript/issues.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace fixtures {

/// Running example, from plain text to fully annotated.
inline const std::vector<std::string_view> kRunningExample{
    "Cac(If officer observes or is made aware of violation), A(officer) D(must) I(fine and report) Bdir(violator) "
    "to Bind(authority).",
    "Cac(If officer (observes [XOR] is made aware of) violation), A(officer) D(must) I(fine [AND] report) "
    "Bdir(violator) to Bind(authority).",
    "Cac{If A(officer) I(observes [XOR] is made aware of) Bdir(violation)}, A(officer) D(must) I(fine [AND] report) "
    "Bdir(violator) to Bind(authority).",
    "Cac{Cac{If A(officer) I(observes [XOR] is made aware of) Bdir(violation)} [AND] Cac{if A(officer) I(deems) "
    "Bdir(intervention) Cex(safe)}}, A(officer) D(must) I(fine [AND] report) Bdir(violator) to Bind(authority).",
    "Cac{Cac{If A(officer) I(observes [XOR] is made aware of) Bdir(violation)} [AND] Cac{if A(officer) I(deems) "
    "Bdir(intervention) Cex(safe)}}, A(officer) D(must) {I(fine) Bdir(violator) [AND] I(file) Bdir(report) with "
    "Bind(district court)}.",
    "Cac{Cac[condition=violation]{If A[role=enforcer](officer) I(observes [XOR] is made aware of) Bdir(violation)} "
    "[AND] Cac[condition=safety]{if A[role=enforcer](officer) I(deems) Bdir(intervention) Cex(safe)}}, "
    "A[role=enforcer](officer) D[stringency=high](must) {I[act=sanction](fine) Bdir(violator) [AND] "
    "I[act=report](file) Bdir(report) with Bind[act=authority](district court)} [statement-type=consequential].",
    "A(officer) D(must) I(inspect) Bdir,p(written) Bdir(report)",
};

/// One example per syntactic pattern.
inline const std::vector<std::string_view> kPatternExamples{
    "A(actor)",
    "A(actor) D(may) I(fine [XOR] arrest)",
    "A(actor) D(must) I(monitor [AND] (fine [XOR] arrest))",
    "A(actor) D(must) I(act) under the condition that Cac{A(actor) I(observes) Bdir(violation)}",
    "A(actor) D(must) I(act) under the condition that Cac{Cac{A(enforcer) I(observes) Bdir(violation)} [AND] "
    "Cac{ A(violator) I(attempts) Bdir(escape)}}",
    "A(enforcer) D(may) {I(investigate) Bdir(compliance) [XOR] I(delegate) Bdir(investigation) to "
    "Bind(colleague)}",
    "A[role=enforcer](officer) D[stringency=high](must) I[act=sanction](fine) Bdir[role=target](violator)",
    "... Cac[condition=violation]{if A[role=violator](violator) I[act=violate](violates)}",
    "Cac[condition=observedViolation]{ Cac[condition=violation]{if A[role=violator](violator) "
    "I[act=violate](violates)} [AND] Cac[condition=observation]{if A[role=monitor](monitor) "
    "I[act=observe](observes) Bdir(violation)}}",
    "[statement-type=consequence] A[role=enforcer](officer) D[stringency=high](must) I[act=sanction](fine) "
    "[another statement-level annotation] Bdir(violator), Cac[condition=violation]{if A[role=violator](violator) "
    "I[act=violate](violates)}",
};

struct Invalid {
    std::string_view input;
    igscript::IssueKind kind;
    std::size_t position;  ///< expected byte offset of the first error
};

using igscript::IssueKind;

inline const std::vector<Invalid> kInvalid{
    // brackets
    {"A(actor", IssueKind::UnbalancedBracket, 1},
    {"A(actor))", IssueKind::UnbalancedBracket, 8},
    {"A(x) Cac{A(y) I(z)", IssueKind::UnbalancedBracket, 8},
    {"A(x) I(y)}", IssueKind::UnbalancedBracket, 9},
    {"A(x} I(y)", IssueKind::UnbalancedBracket, 3},
    {"A{x) I(y)", IssueKind::UnbalancedBracket, 3},
    {"A[role=x(officer)", IssueKind::UnbalancedBracket, 1},
    {"A(officer) I(act) ]", IssueKind::UnbalancedBracket, 18},
    {"Cac{A(x) I((y)}", IssueKind::UnbalancedBracket, 14},
    // symbols
    {"Q(x) I(act)", IssueKind::UnknownSymbol, 0},
    {"A(x) Foo(y)", IssueKind::UnknownSymbol, 5},
    {"A(x) a(y)", IssueKind::UnknownSymbol, 5},
    {"A(x) Bdir,q(y)", IssueKind::UnknownSymbol, 10},
    {"A(x) Cac{Zz(y) I(z)}", IssueKind::UnknownSymbol, 9},
    {"Cac,p(x) I(y)", IssueKind::UnknownSymbol, 0},
    // empty content
    {"A() I(act)", IssueKind::EmptyContent, 0},
    {"A(x) I(   )", IssueKind::EmptyContent, 5},
    {"A(x) I(fine [AND] ())", IssueKind::EmptyContent, 18},
    {"   \n\t ", IssueKind::EmptyInput, 0},
    {"", IssueKind::EmptyInput, 0},
    // operators
    {"A(x) I(fine [AND] report [OR] warn)", IssueKind::AmbiguousPrecedence, 25},
    {"A(x) I(fine [XOR] report [AND] warn [XOR] x)", IssueKind::AmbiguousPrecedence, 25},
    {"A(x) {I(a) [AND] I(b) [OR] I(c)}", IssueKind::AmbiguousPrecedence, 22},
    {"A(x) I([AND] report)", IssueKind::MissingOperand, 7},
    {"A(x) I(fine [AND])", IssueKind::MissingOperand, 12},
    {"A(x) I(fine [AND] [AND] report)", IssueKind::MissingOperand, 18},
    {"A(x) {I(a) [XOR] }", IssueKind::MissingOperand, 11},
    {"A(x) [AND] I(y)", IssueKind::MisplacedOperator, 5},
    {"A(x) (fine [OR] warn)", IssueKind::MisplacedOperator, 11},
    // nesting shapes
    {"Cac{Cac{A(x) I(y)} [AND] Cex{A(z) I(w)}}", IssueKind::NestedCombinationMismatch, 25},
    {"A(x) {I(a) Bdir(b) I(c)}", IssueKind::MissingCombinationOperator, 5},
    {"A(x) {I(a) [XOR] to the court}", IssueKind::BranchWithoutComponent, 16},
    {"just some words", IssueKind::NoComponentsFound, 0},
    {"A(x) Cac{if something happens}", IssueKind::NoComponentsFound, 8},
    {"A(x) (see {I(y)})", IssueKind::UnexpectedBrace, 10},
    {"A(x) (see [note] here)", IssueKind::UnexpectedAnnotation, 10},
};

}  // namespace fixtures

#endif  // IGSCRIPT_TESTS_FIXTURES_HPP
