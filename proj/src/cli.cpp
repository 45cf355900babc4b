#include "igscript/cli.hpp"

#include "igscript/parser.hpp"
#include "igscript/tabular.hpp"
#include "igscript/transform.hpp"
#include "igscript/visual.hpp"
#include "text_util.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

namespace igscript {

namespace {

struct Options {
    std::string input;
    std::string format = "csv";
    std::string id = "1";
    std::string level = "logico";
    std::string out = "-";
    bool no_headers = false;
    bool annotations = false;
    bool no_properties = false;
    bool conditions_first = false;
};

bool numeric(std::string_view s) {
    if (s.empty() || s.size() > 18 || (s.size() > 1 && s.front() == '0')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::optional<std::string> read_all(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) return std::nullopt;
    buf << file.rdbuf();
    return buf.str();
}

}  // namespace

std::vector<BatchEntry> parse_batch(std::string_view text) {
    std::vector<BatchEntry> entries;
    std::optional<BatchEntry> current;
    std::size_t line_no = 0;
    auto close = [&] {
        if (current) entries.push_back(std::move(*current));
        current.reset();
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;

        if (text::trim(line).empty()) {
            close();
        } else if (!current && line.starts_with("#id:")) {
            current = BatchEntry{std::string(text::trim(line.substr(4))), {}, line_no + 1};
        } else {
            if (!current) current = BatchEntry{std::nullopt, {}, line_no};
            if (current->statement.empty()) {
                current->line = line_no;
            } else {
                current->statement += '\n';
            }
            current->statement += line;
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    close();
    return entries;
}

std::vector<std::string> assign_ids(const std::vector<BatchEntry>& entries, std::string_view base) {
    std::vector<std::string> ids;
    std::uint64_t first = 0;
    const bool is_number = numeric(base);
    if (is_number) std::from_chars(base.data(), base.data() + base.size(), first);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].id) {
            ids.push_back(*entries[i].id);
        } else if (is_number) {
            ids.push_back(std::to_string(first + i));
        } else if (entries.size() == 1) {
            ids.emplace_back(base);
        } else {
            ids.push_back(std::string(base) + "-" + std::to_string(i + 1));
        }
    }
    return ids;
}

std::pair<std::size_t, std::size_t> locate(const BatchEntry& entry, std::size_t offset) {
    offset = std::min(offset, entry.statement.size());
    std::size_t line = entry.line;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < offset; ++i) {
        if (entry.statement[i] == '\n') {
            ++line;
            line_start = i + 1;
        }
    }
    return {line, offset - line_start + 1};
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parse IG Script statements into tabular or tree output", "igparse"};
    Options o;
    app.add_option("--input", o.input, "Batch file, or - for stdin")->required();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "sheets", "tree"}));
    app.add_option("--id", o.id, "Base statement id");
    app.add_option("--level", o.level, "Level of expressiveness")
        ->check(CLI::IsMember({"core", "extended", "logico"}, CLI::ignore_case));
    app.add_option("--out", o.out, "Output file, or - for stdout");
    app.add_flag("--no-headers", o.no_headers, "Omit the header row");
    app.add_flag("--annotations", o.annotations, "Append annotations to cell values");
    app.add_flag("--no-properties", o.no_properties, "Attach property nodes to their parent in tree output");
    app.add_flag("--conditions-first", o.conditions_first, "Show activation conditions first in tree output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (!SubStatementId::is_valid_base(o.id)) {
        err << "igparse: --id must be non-empty and free of '.', '{' and '}'\n";
        return 2;
    }
    const std::string source = o.input == "-" ? "<stdin>" : o.input;
    const auto text = read_all(o.input, in);
    if (!text) {
        err << "igparse: cannot read " << o.input << "\n";
        return 2;
    }
    const auto entries = parse_batch(*text);
    if (entries.empty()) {
        err << "igparse: no statements in " << source << "\n" << app.help();
        return 2;
    }

    const Level level = *level_from_string(o.level);
    const auto ids = assign_ids(entries, o.id);
    TabularOptions tab;
    tab.include_headers = false;
    tab.include_annotations = o.annotations;
    tab.format = o.format == "sheets" ? TabularFormat::Sheets : TabularFormat::Csv;
    VisualOptions vis;
    vis.include_annotations = o.annotations;
    vis.include_properties = !o.no_properties;
    vis.conditions_first = o.conditions_first;

    std::string data;
    if (o.format != "tree" && !o.no_headers) {
        ExpansionResult header_only;
        header_only.atoms.push_back(AtomicStatement{SubStatementId("x"), {}, {}, {}});
        TabularOptions h = tab;
        h.include_headers = true;
        const std::string table = to_tabular(header_only, h);
        data += table.substr(0, table.find('\n') + 1);
    }

    int status = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const BatchEntry& entry = entries[i];
        auto report = [&](std::size_t offset, const std::string& severity, const std::string& what) {
            const auto [line, col] = locate(entry, offset);
            err << source << ":" << line << ":" << col << ": " << severity << ": " << what << "\n";
        };
        if (!SubStatementId::is_valid_base(ids[i])) {
            report(0, "error", "InvalidStatementId: '" + ids[i] + "' is not a valid statement id");
            status = 1;
            continue;
        }
        try {
            const ParseOutcome parsed = parse_with_report(entry.statement);
            for (const auto& w : parsed.report.warnings()) {
                report(w.position, "warning", std::string(to_string(w.kind)) + ": " + w.message);
            }
            const StatementTree tree = filter_level(parsed.tree, level);
            const ExpansionResult expansion = expand(tree, ids[i], level);
            for (const auto& w : expansion.warnings) report(0, "warning", w);
            if (o.format == "tree") {
                nlohmann::json doc = to_json(to_tree(tree, vis));
                doc["id"] = ids[i];
                data += doc.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
                data += '\n';
            } else {
                data += to_tabular(expansion, tab);
            }
        } catch (const ParseError& e) {
            if (entry.statement.empty()) {
                report(0, "error", "EmptyInput: entry '" + ids[i] + "' has no statement");
            } else {
                for (const auto& issue : e.report().issues) {
                    if (issue.severity != Severity::Error) continue;
                    report(issue.position, "error", std::string(to_string(issue.kind)) + ": " + issue.message);
                }
            }
            status = 1;
        } catch (const ExpansionLimitExceeded& e) {
            report(0, "error", std::string("ExpansionLimit: ") + e.what());
            status = 1;
        }
    }

    if (o.out == "-") {
        out << data;
        out.flush();
    } else {
        std::ofstream file(o.out, std::ios::binary);
        file << data;
        if (!file) {
            err << "igparse: cannot write " << o.out << "\n";
            return 2;
        }
    }
    return status;
}

}  // namespace igscript
