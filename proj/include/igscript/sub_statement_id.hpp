#ifndef IGSCRIPT_SUB_STATEMENT_ID_HPP
#define IGSCRIPT_SUB_STATEMENT_ID_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace igscript {

class InvalidStatementId : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Hierarchical identifier of a decomposed statement.
///
/// An id is a user supplied base followed by a path of segments. Each segment
/// appends an expansion index `.k` (k >= 1); a nesting segment first wraps the
/// whole prefix in braces. Rendered forms: `123`, `123.2`, `{123.1}.1`,
/// `{{123.1}.2}.1`.
///
/// The base must be non-empty and must not contain `.`, `{` or `}` so that
/// rendering stays reversible.
class SubStatementId {
public:
    struct Segment {
        bool nested = false;
        std::uint32_t index = 1;

        friend bool operator==(const Segment&, const Segment&) = default;
    };

    explicit SubStatementId(std::string base);
    SubStatementId(std::string base, std::vector<Segment> path);

    const std::string& base() const noexcept { return base_; }
    const std::vector<Segment>& path() const noexcept { return path_; }

    /// `prefix.k`
    SubStatementId child(std::uint32_t k) const;
    /// `{prefix}.k`
    SubStatementId nested(std::uint32_t k) const;

    /// Number of nesting segments, i.e. brace depth of the rendered form.
    std::size_t nesting_depth() const noexcept;
    bool is_nested() const noexcept { return nesting_depth() > 0; }

    std::string render() const;
    static SubStatementId parse(std::string_view text);

    static bool is_valid_base(std::string_view base) noexcept;

    friend bool operator==(const SubStatementId&, const SubStatementId&) = default;

private:
    std::string base_;
    std::vector<Segment> path_;
};

inline std::string render_id(const SubStatementId& id) { return id.render(); }

}  // namespace igscript

#endif  // IGSCRIPT_SUB_STATEMENT_ID_HPP
