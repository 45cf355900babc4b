#include "fixtures.hpp"
#include "oracle.hpp"

#include "igscript/service.hpp"

#include <doctest.h>
#include <httplib.h>
#include <json.hpp>

#include <cstdlib>
#include <thread>

using namespace igscript;
using nlohmann::json;

namespace {

json call(const json& request) {
    const auto r = handle_parse(request.dump());
    json body = json::parse(r.body);
    body["__status"] = r.status;
    return body;
}

/// Live server on an ephemeral port for the lifetime of the fixture.
struct LiveServer {
    explicit LiveServer(ServiceConfig cfg = {}) {
        configure(server, cfg);
        port = server.bind_to_any_port("127.0.0.1");
        thread = std::thread([this] { server.listen_after_bind(); });
        server.wait_until_ready();
    }
    ~LiveServer() {
        server.stop();
        thread.join();
    }
    httplib::Server server;
    int port = 0;
    std::thread thread;
};

}  // namespace

TEST_CASE("running example as csv") {
    const json r = call({{"codedStatement", fixtures::kRunningExample[1]}, {"stmtId", "650"}});
    CHECK(r["__status"] == 200);
    CHECK(r["atomCount"] == 4);
    CHECK(r["degreeOfVariability"] == 4);
    const auto rows = oracle::lines(r["output"].get<std::string>());
    REQUIRE(rows.size() == 5);
    CHECK(rows[1].starts_with("650.1|"));
    CHECK(r["warnings"].empty());
    CHECK_FALSE(r.contains("rawStatement"));
}

TEST_CASE("options reach the exporters") {
    const json r = call({{"codedStatement", "A[role=x](officer) I(act)"},
                         {"rawStatement", "The officer acts."},
                         {"includeHeaders", false},
                         {"includeAnnotations", true}});
    CHECK(r["output"] == "1|officer [role=x]|||act||||||||||||||\n");
    CHECK(r["rawStatement"] == "The officer acts.");

    const json sheets = call({{"codedStatement", "A(x) I(y)"}, {"output", "sheets"}, {"includeHeaders", false}});
    CHECK(sheets["output"].get<std::string>().starts_with("=SPLIT(\"1|x|"));

    const json core = call({{"codedStatement", fixtures::kRunningExample[3]}, {"level", "core"}});
    CHECK(core["atomCount"] == 6);
    const json ext = call({{"codedStatement", fixtures::kRunningExample[3]}, {"level", "extended"}});
    CHECK(ext["atomCount"] == 8);
    CHECK(ext["degreeOfVariability"] == 6);
}

TEST_CASE("tree output") {
    const json r = call({{"codedStatement", "Bdir,p(written) Bdir(report) A(x)"},
                         {"output", "tree"},
                         {"includeProperties", false},
                         {"canvasWidth", 300}});
    CHECK(r["__status"] == 200);
    const json& doc = r["output"];
    CHECK(doc["schema"] == "igscript.tree/1");
    CHECK(doc["canvas"]["width"] == 300);
    CHECK(doc["canvas"]["height"] == 800);
    CHECK(doc["root"]["children"].size() == 2);
    CHECK(doc["root"]["children"][0]["properties"][0]["label"] == "written");
}

TEST_CASE("invalid statements carry a positioned issue") {
    const json r = call({{"codedStatement", "A(actor"}});
    CHECK(r["__status"] == 400);
    CHECK(r["error"]["kind"] == "UnbalancedBracket");
    CHECK(r["error"]["position"] == 1);
    CHECK(r["error"]["length"] == 1);
    CHECK(r["issues"].size() >= 1);

    for (const auto& f : fixtures::kInvalid) {
        if (f.kind == IssueKind::EmptyInput) continue;
        const json e = call({{"codedStatement", f.input}});
        CAPTURE(f.input);
        CHECK(e["__status"] == 400);
        CHECK(e["error"]["kind"] == std::string(to_string(f.kind)));
        CHECK(e["error"]["position"].get<std::size_t>() < f.input.size());
        CHECK(e["error"]["length"].get<std::size_t>() >= 1);
    }
}

TEST_CASE("request schema") {
    CHECK(call({{"codedStatement", "  "}})["error"]["kind"] == "EmptyInput");
    CHECK(call({{"codedStatement", ""}})["error"]["kind"] == "EmptyInput");
    CHECK(call(json::object())["error"]["kind"] == "SchemaViolation");
    CHECK(call({{"codedStatement", 3}})["error"]["kind"] == "SchemaViolation");
    CHECK(call({{"codedStatement", "A(x)"}, {"output", "pdf"}})["error"]["kind"] == "SchemaViolation");
    CHECK(call({{"codedStatement", "A(x)"}, {"level", "full"}})["error"]["kind"] == "SchemaViolation");
    CHECK(call({{"codedStatement", "A(x)"}, {"stmtId", "1.2"}})["error"]["kind"] == "SchemaViolation");
    CHECK(call({{"codedStatement", "A(x)"}, {"includeHeaders", "yes"}})["error"]["kind"] == "SchemaViolation");
    CHECK(call({{"codedStatement", "A(x)"}, {"canvasWidth", -5}})["error"]["kind"] == "SchemaViolation");
    CHECK(call({{"codedStatement", "A(x)"}, {"unknownField", 1}})["__status"] == 200);

    const auto bad = handle_parse("{not json");
    CHECK(bad.status == 400);
    CHECK(json::parse(bad.body)["error"]["kind"] == "MalformedRequest");
    CHECK(json::parse(handle_parse("[1,2]").body)["error"]["kind"] == "MalformedRequest");
}

TEST_CASE("expansion limit") {
    std::string text = "A(x)";
    for (int i = 0; i < 7; ++i) text += " Cex(a [XOR] b [XOR] c [XOR] d [XOR] e)";
    const json r = call({{"codedStatement", text}});
    CHECK(r["__status"] == 400);
    CHECK(r["error"]["kind"] == "ExpansionLimit");
}

TEST_CASE("invalid bytes do not break the response") {
    const auto r = handle_parse(json{{"codedStatement", "A(x) Q(y)"}}.dump());
    CHECK(r.status == 400);
    std::string raw = R"j({"codedStatement":"A(xé)"})j";
    CHECK(handle_parse(raw).status == 200);
}

TEST_CASE("health") {
    const json h = json::parse(handle_health().body);
    CHECK(h["status"] == "ok");
    CHECK(h["version"] == std::string(version()));
    CHECK(version() == "0.1.0");
}

TEST_CASE("configuration from environment") {
    ::setenv("PORT", "9191", 1);
    ::setenv("MAX_BODY_BYTES", "2048", 1);
    ::setenv("ALLOWED_ORIGIN", "https://example.org", 1);
    auto c = ServiceConfig::from_env();
    CHECK(c.port == 9191);
    CHECK(c.max_body_bytes == 2048);
    CHECK(c.allowed_origin == "https://example.org");
    ::setenv("PORT", "nope", 1);
    ::unsetenv("MAX_BODY_BYTES");
    ::unsetenv("ALLOWED_ORIGIN");
    c = ServiceConfig::from_env();
    CHECK(c.port == 8080);
    CHECK(c.max_body_bytes == 1048576);
    CHECK(c.allowed_origin == "*");
    ::unsetenv("PORT");
}

TEST_CASE("http transport") {
    ServiceConfig cfg;
    cfg.max_body_bytes = 4096;
    cfg.allowed_origin = "http://localhost:3000";
    LiveServer live(cfg);
    httplib::Client cli("127.0.0.1", live.port);

    auto ok = cli.Post("/v1/parse", json{{"codedStatement", "A(x) I(y)"}}.dump(), "application/json");
    REQUIRE(ok);
    CHECK(ok->status == 200);
    CHECK(ok->get_header_value("Access-Control-Allow-Origin") == "http://localhost:3000");
    CHECK(ok->get_header_value("Content-Type") == "application/json");

    auto health = cli.Get("/v1/health");
    REQUIRE(health);
    CHECK(health->status == 200);
    CHECK(health->body == handle_health().body);

    auto wrong = cli.Get("/v1/parse");
    REQUIRE(wrong);
    CHECK(wrong->status == 405);
    auto wrong2 = cli.Post("/v1/health", "", "application/json");
    REQUIRE(wrong2);
    CHECK(wrong2->status == 405);

    auto big = cli.Post("/v1/parse", std::string(8192, ' '), "application/json");
    REQUIRE(big);
    CHECK(big->status == 413);

    auto pre = cli.Options("/v1/parse");
    REQUIRE(pre);
    CHECK(pre->status == 204);
    CHECK(pre->get_header_value("Access-Control-Allow-Methods").find("POST") != std::string::npos);

    auto missing = cli.Get("/v2/parse");
    REQUIRE(missing);
    CHECK(missing->status == 404);
}

TEST_CASE("concurrent identical requests") {
    LiveServer live;
    const std::string body = json{{"codedStatement", fixtures::kRunningExample[5]}, {"output", "tree"}}.dump();
    std::vector<std::string> bodies(50);
    std::vector<int> statuses(50);
    std::vector<std::thread> threads;
    for (int i = 0; i < 50; ++i) {
        threads.emplace_back([&, i] {
            httplib::Client cli("127.0.0.1", live.port);
            if (auto r = cli.Post("/v1/parse", body, "application/json")) {
                statuses[i] = r->status;
                bodies[i] = r->body;
            }
        });
    }
    for (auto& t : threads) t.join();
    for (int i = 0; i < 50; ++i) {
        CHECK(statuses[i] == 200);
        CHECK(bodies[i] == bodies[0]);
    }
    CHECK(bodies[0] == handle_parse(body).body);
}
