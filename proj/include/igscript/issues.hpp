#ifndef IGSCRIPT_ISSUES_HPP
#define IGSCRIPT_ISSUES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace igscript {

enum class IssueKind {
    EmptyInput,
    UnbalancedBracket,
    UnknownSymbol,
    EmptyContent,
    AmbiguousPrecedence,
    MissingOperand,
    MisplacedOperator,
    UnexpectedAnnotation,
    UnexpectedBrace,
    NestedCombinationMismatch,
    MissingCombinationOperator,
    BranchWithoutComponent,
    NoComponentsFound,
    NestingTooDeep,
    PropertyNesting,
};

std::string_view to_string(IssueKind kind);

enum class Severity { Error, Warning };

/// A positioned finding. `position` and `length` are byte offsets into the
/// validated input.
struct Issue {
    IssueKind kind;
    Severity severity = Severity::Error;
    std::string message;
    std::size_t position = 0;
    std::size_t length = 0;

    friend bool operator==(const Issue&, const Issue&) = default;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Issue> issues;

    void add(Issue issue) {
        if (issue.severity == Severity::Error) ok = false;
        issues.push_back(std::move(issue));
    }
    const Issue* first_error() const noexcept {
        for (const auto& i : issues) {
            if (i.severity == Severity::Error) return &i;
        }
        return nullptr;
    }
    std::vector<Issue> warnings() const;
};

/// Raised by parse() on invalid input; carries the full report.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

}  // namespace igscript

#endif  // IGSCRIPT_ISSUES_HPP
