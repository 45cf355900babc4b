#include "igscript/service.hpp"

#include "igscript/parser.hpp"
#include "igscript/tabular.hpp"
#include "igscript/transform.hpp"
#include "igscript/visual.hpp"
#include "text_util.hpp"

#include <httplib.h>
#include <json.hpp>

#include <charconv>
#include <cstdlib>

#ifndef IGSCRIPT_VERSION
#define IGSCRIPT_VERSION "0.0.0"
#endif

namespace igscript {

namespace {

using nlohmann::json;

struct RequestError {
    std::string kind;
    std::string message;
};

std::string dump(const json& j) { return j.dump(-1, ' ', false, json::error_handler_t::replace); }

HttpResponse fail(const std::string& kind, const std::string& message, std::size_t position = 0,
                  std::size_t length = 0) {
    json err{{"kind", kind}, {"message", message}, {"position", position}, {"length", length}};
    json body{{"error", err}, {"issues", json::array({err})}};
    return {400, dump(body)};
}

json issue_json(const Issue& i) {
    return {{"kind", to_string(i.kind)},
            {"severity", i.severity == Severity::Error ? "error" : "warning"},
            {"message", i.message},
            {"position", i.position},
            {"length", i.length}};
}

struct Request {
    std::string coded;
    std::optional<std::string> raw;
    std::string output = "csv";
    std::string stmt_id = "1";
    Level level = Level::Logico;
    bool include_headers = true;
    bool include_annotations = false;
    bool include_properties = true;
    bool conditions_first = false;
    Canvas canvas;
};

const json* field(const json& obj, const char* key, json::value_t type, const char* type_name) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return nullptr;
    const bool ok = it->type() == type ||
                    (type == json::value_t::number_integer && it->type() == json::value_t::number_unsigned);
    if (!ok) throw RequestError{"SchemaViolation", std::string("'") + key + "' must be " + type_name};
    return &*it;
}

void read_bool(const json& obj, const char* key, bool& out) {
    if (const json* v = field(obj, key, json::value_t::boolean, "a boolean")) out = v->get<bool>();
}

void read_positive(const json& obj, const char* key, int& out) {
    if (const json* v = field(obj, key, json::value_t::number_integer, "an integer")) {
        const auto n = v->get<std::int64_t>();
        if (n <= 0 || n > 100000) throw RequestError{"SchemaViolation", std::string("'") + key + "' is out of range"};
        out = static_cast<int>(n);
    }
}

Request read_request(std::string_view body) {
    json obj;
    try {
        obj = json::parse(body);
    } catch (const json::exception& e) {
        throw RequestError{"MalformedRequest", std::string("request body is not valid JSON: ") + e.what()};
    }
    if (!obj.is_object()) throw RequestError{"MalformedRequest", "request body must be a JSON object"};

    Request r;
    const json* coded = field(obj, "codedStatement", json::value_t::string, "a string");
    if (!coded) throw RequestError{"SchemaViolation", "'codedStatement' is required"};
    r.coded = coded->get<std::string>();
    if (const json* v = field(obj, "rawStatement", json::value_t::string, "a string")) r.raw = v->get<std::string>();
    if (const json* v = field(obj, "output", json::value_t::string, "a string")) {
        r.output = v->get<std::string>();
        if (r.output != "csv" && r.output != "sheets" && r.output != "tree") {
            throw RequestError{"SchemaViolation", "'output' must be csv, sheets or tree"};
        }
    }
    if (const json* v = field(obj, "stmtId", json::value_t::string, "a string")) {
        r.stmt_id = v->get<std::string>();
        if (!SubStatementId::is_valid_base(r.stmt_id)) {
            throw RequestError{"SchemaViolation", "'stmtId' must be non-empty and free of '.', '{' and '}'"};
        }
    }
    if (const json* v = field(obj, "level", json::value_t::string, "a string")) {
        auto level = level_from_string(v->get<std::string>());
        if (!level) throw RequestError{"SchemaViolation", "'level' must be core, extended or logico"};
        r.level = *level;
    }
    read_bool(obj, "includeHeaders", r.include_headers);
    read_bool(obj, "includeAnnotations", r.include_annotations);
    read_bool(obj, "includeProperties", r.include_properties);
    read_bool(obj, "conditionsFirst", r.conditions_first);
    read_positive(obj, "canvasWidth", r.canvas.width);
    read_positive(obj, "canvasHeight", r.canvas.height);
    return r;
}

}  // namespace

std::string_view version() { return IGSCRIPT_VERSION; }

ServiceConfig ServiceConfig::from_env() {
    ServiceConfig c;
    auto number = [](const char* name, auto& out) {
        const char* v = std::getenv(name);
        if (!v || !*v) return;
        std::remove_reference_t<decltype(out)> n{};
        const char* end = v + std::char_traits<char>::length(v);
        auto [p, ec] = std::from_chars(v, end, n);
        if (ec == std::errc{} && p == end && n > 0) out = n;
    };
    number("PORT", c.port);
    number("MAX_BODY_BYTES", c.max_body_bytes);
    if (const char* o = std::getenv("ALLOWED_ORIGIN"); o && *o) c.allowed_origin = o;
    return c;
}

HttpResponse handle_parse(std::string_view body) {
    Request req;
    try {
        req = read_request(body);
    } catch (const RequestError& e) {
        return fail(e.kind, e.message);
    }
    if (text::trim(req.coded).empty()) return fail("EmptyInput", "codedStatement is empty", 0, req.coded.size());

    ParseOutcome parsed;
    try {
        parsed = parse_with_report(req.coded);
    } catch (const ParseError& e) {
        const auto& report = e.report();
        const Issue* first = report.first_error();
        json body{{"error", issue_json(*first)}, {"issues", json::array()}};
        for (const auto& i : report.issues) body["issues"].push_back(issue_json(i));
        return {400, dump(body)};
    }

    json out;
    try {
        const StatementTree tree = filter_level(parsed.tree, req.level);
        const ExpansionResult expansion = expand(tree, req.stmt_id, req.level);
        json warnings = json::array();
        for (const auto& w : parsed.report.warnings()) warnings.push_back(w.message);
        for (const auto& w : expansion.warnings) warnings.push_back(w);

        if (req.output == "tree") {
            VisualOptions vo;
            vo.include_annotations = req.include_annotations;
            vo.include_properties = req.include_properties;
            vo.conditions_first = req.conditions_first;
            vo.canvas = req.canvas;
            out["output"] = to_json(to_tree(tree, vo));
        } else {
            TabularOptions to;
            to.include_headers = req.include_headers;
            to.include_annotations = req.include_annotations;
            to.format = req.output == "sheets" ? TabularFormat::Sheets : TabularFormat::Csv;
            out["output"] = to_tabular(expansion, to);
        }
        out["atomCount"] = expansion.atoms.size();
        out["degreeOfVariability"] = degree_of_variability(parsed.tree);
        out["warnings"] = std::move(warnings);
    } catch (const ExpansionLimitExceeded& e) {
        return fail("ExpansionLimit", e.what(), 0, req.coded.size());
    }
    if (req.raw) out["rawStatement"] = *req.raw;
    return {200, dump(out)};
}

HttpResponse handle_health() { return {200, dump(json{{"status", "ok"}, {"version", version()}})}; }

void configure(httplib::Server& server, const ServiceConfig& config) {
    server.set_payload_max_length(config.max_body_bytes);
    server.set_default_headers({{"Access-Control-Allow-Origin", config.allowed_origin},
                                {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                {"Access-Control-Allow-Headers", "Content-Type"},
                                {"Vary", "Origin"}});

    auto send = [](httplib::Response& res, const HttpResponse& r) {
        res.status = r.status;
        res.set_content(r.body, "application/json");
    };
    auto not_allowed = [send](const char* allow) {
        return [send, allow](const httplib::Request&, httplib::Response& res) {
            res.set_header("Allow", allow);
            send(res, fail("MethodNotAllowed", "method not allowed"));
            res.status = 405;
        };
    };
    auto preflight = [](const httplib::Request&, httplib::Response& res) { res.status = 204; };

    server.Post("/v1/parse", [send](const httplib::Request& req, httplib::Response& res) {
        send(res, handle_parse(req.body));
    });
    server.Get("/v1/parse", not_allowed("POST, OPTIONS"));
    server.Put("/v1/parse", not_allowed("POST, OPTIONS"));
    server.Patch("/v1/parse", not_allowed("POST, OPTIONS"));
    server.Delete("/v1/parse", not_allowed("POST, OPTIONS"));
    server.Options("/v1/parse", preflight);

    server.Get("/v1/health", [send](const httplib::Request&, httplib::Response& res) { send(res, handle_health()); });
    server.Post("/v1/health", not_allowed("GET, OPTIONS"));
    server.Put("/v1/health", not_allowed("GET, OPTIONS"));
    server.Patch("/v1/health", not_allowed("GET, OPTIONS"));
    server.Delete("/v1/health", not_allowed("GET, OPTIONS"));
    server.Options("/v1/health", preflight);

    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (!res.body.empty()) return;
        const char* kind = res.status == 413 ? "PayloadTooLarge" : res.status == 404 ? "NotFound" : "HttpError";
        json err{{"kind", kind}, {"message", httplib::status_message(res.status)}, {"position", 0}, {"length", 0}};
        res.set_content(dump(json{{"error", err}}), "application/json");
    });
}

}  // namespace igscript
