#ifndef IGSCRIPT_SERVICE_HPP
#define IGSCRIPT_SERVICE_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace igscript {

std::string_view version();

struct ServiceConfig {
    int port = 8080;
    std::size_t max_body_bytes = 1 << 20;
    std::string allowed_origin = "*";

    /// Reads PORT, MAX_BODY_BYTES and ALLOWED_ORIGIN; unset or unparsable
    /// values keep the defaults.
    static ServiceConfig from_env();
};

struct HttpResponse {
    int status = 200;
    std::string body;  ///< JSON
};

/// POST /v1/parse without the transport. Request fields:
///
///   codedStatement   string, required, non-blank
///   rawStatement     string, echoed back
///   output           "csv" | "sheets" | "tree"            (csv)
///   stmtId           string without `.`, `{`, `}`           ("1")
///   level            "core" | "extended" | "logico"       (logico)
///   includeHeaders, includeAnnotations, includeProperties, conditionsFirst
///                    booleans                               (true, false, true, false)
///   canvasWidth, canvasHeight  positive integers            (1000, 800)
///
/// 200: `{output, atomCount, degreeOfVariability, warnings[], rawStatement?}`;
/// `output` is a string for csv/sheets and a tree document for tree.
/// 400: `{error: {kind, message, position, length}, issues[]}`; kind is an
/// IssueKind name, or MalformedRequest, SchemaViolation, ExpansionLimit.
HttpResponse handle_parse(std::string_view body);

HttpResponse handle_health();

/// Installs routes, CORS headers, the body size limit and JSON error bodies.
void configure(httplib::Server& server, const ServiceConfig& config);

}  // namespace igscript

#endif  // IGSCRIPT_SERVICE_HPP
