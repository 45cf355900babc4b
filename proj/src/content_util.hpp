#ifndef IGSCRIPT_SRC_CONTENT_UTIL_HPP
#define IGSCRIPT_SRC_CONTENT_UTIL_HPP

#include "igscript/tree.hpp"
#include "text_util.hpp"

#include <algorithm>

namespace igscript {

/// Collapses whitespace in literals, merges adjacent literals, trims the
/// sequence ends and drops empty literals.
inline void normalize_content(Content& content) {
    Content out;
    for (auto& frag : content) {
        if (frag.is_text()) {
            std::string t = text::collapse_space(frag.text());
            if (!out.empty() && out.back().is_text()) {
                std::string merged = text::collapse_space(out.back().text() + t);
                out.back().value = std::move(merged);
            } else if (!t.empty()) {
                out.push_back(Fragment{std::move(t)});
            }
        } else {
            out.push_back(std::move(frag));
        }
    }
    if (!out.empty() && out.front().is_text()) {
        const std::string_view t = out.front().text();
        const auto first = t.find_first_not_of(' ');
        out.front().value = first == std::string_view::npos ? std::string() : std::string(t.substr(first));
    }
    if (!out.empty() && out.back().is_text()) {
        const std::string_view t = out.back().text();
        const auto last = t.find_last_not_of(' ');
        out.back().value = last == std::string_view::npos ? std::string() : std::string(t.substr(0, last + 1));
    }
    std::erase_if(out, [](const Fragment& f) { return f.is_text() && f.text().empty(); });
    content = std::move(out);
}

inline bool is_single_group(const Content& c) { return c.size() == 1 && !c.front().is_text(); }

}  // namespace igscript

#endif  // IGSCRIPT_SRC_CONTENT_UTIL_HPP
