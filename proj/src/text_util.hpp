#ifndef IGSCRIPT_SRC_TEXT_UTIL_HPP
#define IGSCRIPT_SRC_TEXT_UTIL_HPP

#include <string>
#include <string_view>

namespace igscript::text {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

inline bool is_ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }

inline bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9') || c == '_'; }

inline std::string_view trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

/// Replaces every whitespace run with a single space. Does not trim.
inline std::string collapse_space(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = false;
    for (char c : s) {
        if (is_space(c)) {
            if (!in_space) out.push_back(' ');
            in_space = true;
        } else {
            out.push_back(c);
            in_space = false;
        }
    }
    return out;
}

inline std::string normalize(std::string_view s) { return std::string(trim(collapse_space(s))); }

/// Index of the `]` closing the `[` at `open`, counting nested square
/// brackets only; npos if the input ends first.
inline std::size_t matching_square(std::string_view s, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
        if (s[i] == '[') {
            ++depth;
        } else if (s[i] == ']') {
            if (--depth == 0) return i;
        }
    }
    return std::string_view::npos;
}

}  // namespace igscript::text

#endif  // IGSCRIPT_SRC_TEXT_UTIL_HPP
