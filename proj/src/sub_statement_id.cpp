#include "igscript/sub_statement_id.hpp"

#include <algorithm>
#include <charconv>

namespace igscript {

bool SubStatementId::is_valid_base(std::string_view base) noexcept {
    return !base.empty() && base.find_first_of(".{}") == std::string_view::npos;
}

SubStatementId::SubStatementId(std::string base) : SubStatementId(std::move(base), {}) {}

SubStatementId::SubStatementId(std::string base, std::vector<Segment> path)
    : base_(std::move(base)), path_(std::move(path)) {
    if (!is_valid_base(base_)) {
        throw InvalidStatementId("statement id base must be non-empty and free of '.', '{' and '}': '" + base_ +
                                 "'");
    }
    for (const auto& seg : path_) {
        if (seg.index == 0) throw InvalidStatementId("expansion index must be >= 1");
    }
}

SubStatementId SubStatementId::child(std::uint32_t k) const {
    auto path = path_;
    path.push_back({false, k});
    return SubStatementId(base_, std::move(path));
}

SubStatementId SubStatementId::nested(std::uint32_t k) const {
    auto path = path_;
    path.push_back({true, k});
    return SubStatementId(base_, std::move(path));
}

std::size_t SubStatementId::nesting_depth() const noexcept {
    return static_cast<std::size_t>(std::count_if(path_.begin(), path_.end(), [](const Segment& s) { return s.nested; }));
}

std::string SubStatementId::render() const {
    std::string out(nesting_depth(), '{');
    out += base_;
    for (const auto& seg : path_) {
        if (seg.nested) out += '}';
        out += '.';
        out += std::to_string(seg.index);
    }
    return out;
}

SubStatementId SubStatementId::parse(std::string_view text) {
    auto fail = [&](const char* why) {
        return InvalidStatementId("malformed statement id '" + std::string(text) + "': " + why);
    };

    std::size_t pos = 0;
    std::size_t open = 0;
    while (pos < text.size() && text[pos] == '{') {
        ++open;
        ++pos;
    }
    const std::size_t base_end = std::min(text.find_first_of(".{}", pos), text.size());
    std::string base(text.substr(pos, base_end - pos));
    if (base.empty()) throw fail("empty base");
    pos = base_end;

    std::vector<Segment> path;
    while (pos < text.size()) {
        Segment seg;
        if (text[pos] == '}') {
            if (open == 0) throw fail("unbalanced '}'");
            --open;
            seg.nested = true;
            ++pos;
        }
        if (pos >= text.size() || text[pos] != '.') throw fail("expected '.'");
        ++pos;
        const std::size_t digits_end = std::min(text.find_first_not_of("0123456789", pos), text.size());
        if (digits_end == pos) throw fail("expected expansion index");
        if (text[pos] == '0') throw fail("expansion index must be positive without leading zeros");
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + digits_end, seg.index);
        if (ec != std::errc{}) throw fail("expansion index out of range");
        pos = digits_end;
        path.push_back(seg);
    }
    if (open != 0) throw fail("unbalanced '{'");
    return SubStatementId(std::move(base), std::move(path));
}

}  // namespace igscript
