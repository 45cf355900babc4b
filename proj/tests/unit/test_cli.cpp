#include "fixtures.hpp"
#include "golden.hpp"
#include "oracle.hpp"

#include "igscript/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace igscript;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = {}) {
    args.insert(args.begin(), "igparse");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("batch blocks") {
    const auto entries = parse_batch("A(x) I(y)\n\n\n#id: 77\nA(z)\nI(w)\r\n\n   \nA(q)");
    REQUIRE(entries.size() == 3);
    CHECK_FALSE(entries[0].id);
    CHECK(entries[0].line == 1);
    CHECK(*entries[1].id == "77");
    CHECK(entries[1].statement == "A(z)\nI(w)");
    CHECK(entries[1].line == 5);
    CHECK(entries[2].statement == "A(q)");
    CHECK(entries[2].line == 9);
    CHECK(parse_batch("").empty());
    CHECK(parse_batch("\n \n\t\n").empty());

    const auto only_id = parse_batch("#id: 5\n\nA(x)");
    REQUIRE(only_id.size() == 2);
    CHECK(only_id[0].statement.empty());
}

TEST_CASE("id assignment") {
    const auto three = parse_batch("A(a)\n\n#id: x9\nA(b)\n\nA(c)");
    CHECK(assign_ids(three, "100") == std::vector<std::string>{"100", "x9", "102"});
    CHECK(assign_ids(three, "law") == std::vector<std::string>{"law-1", "x9", "law-3"});
    CHECK(assign_ids(parse_batch("A(a)"), "law") == std::vector<std::string>{"law"});
    CHECK(assign_ids(parse_batch("A(a)"), "007") == std::vector<std::string>{"007"});
}

TEST_CASE("error locations") {
    const auto entries = parse_batch("\n\nA(x)\n  I(y");
    REQUIRE(entries.size() == 1);
    CHECK(locate(entries[0], 0) == std::pair<std::size_t, std::size_t>{3, 1});
    CHECK(locate(entries[0], 6) == std::pair<std::size_t, std::size_t>{4, 2});
    CHECK(locate(entries[0], 999) == std::pair<std::size_t, std::size_t>{4, 6});
}

TEST_CASE("exit codes") {
    const Run ok = run({"--input", "-"}, "A(x) I(y)\n\nA(z) I(w [XOR] v)\n");
    CHECK(ok.code == 0);
    CHECK(oracle::lines(ok.out).size() == 4);
    CHECK(ok.err.empty());

    const Run bad = run({"--input", "-", "--id", "5"}, "A(x)\n\nA(x) I(y\n\nI(z)\n");
    CHECK(bad.code == 1);
    CHECK(bad.err == "<stdin>:3:7: error: UnbalancedBracket: '(' is never closed\n");
    const auto rows = oracle::lines(bad.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].starts_with("5|"));
    CHECK(rows[2].starts_with("7|"));

    CHECK(run({"--input", "-"}, "").code == 2);
    CHECK(run({"--input", "-"}, "\n\n").code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--input", "/nonexistent/file.igs"}).code == 2);
    CHECK(run({"--input", "-", "--format", "xml"}, "A(x)").code == 2);
    CHECK(run({"--input", "-", "--level", "full"}, "A(x)").code == 2);
    CHECK(run({"--input", "-", "--id", "a.b"}, "A(x)").code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("warnings keep the exit code") {
    const Run r = run({"--input", "-"}, "A(x) Bdir,p(written)");
    CHECK(r.code == 0);
    CHECK(r.err.find("warning:") != std::string::npos);
}

TEST_CASE("explicit invalid id fails only its entry") {
    const Run r = run({"--input", "-"}, "#id: a{b\nA(x)\n\nA(y)");
    CHECK(r.code == 1);
    CHECK(r.err.find("InvalidStatementId") != std::string::npos);
    CHECK(oracle::lines(r.out).size() == 2);
}

TEST_CASE("batch output concatenates single-statement runs") {
    std::string batch;
    std::string expected;
    for (std::size_t i = 0; i < fixtures::kPatternExamples.size(); ++i) {
        const std::string stmt(fixtures::kPatternExamples[i]);
        batch += stmt + "\n\n";
        const Run one = run({"--input", "-", "--no-headers", "--id", std::to_string(40 + i)}, stmt);
        REQUIRE(one.code == 0);
        expected += one.out;
    }
    const Run all = run({"--input", "-", "--no-headers", "--id", "40"}, batch);
    CHECK(all.code == 0);
    CHECK(all.out == expected);

    const Run with_header = run({"--input", "-", "--id", "40"}, batch);
    CHECK(with_header.out == oracle::lines(with_header.out)[0] + "\n" + expected);
}

TEST_CASE("tree output is one document per line") {
    const Run r = run({"--input", "-", "--format", "tree", "--id", "law"}, "A(x) I(y)\n\nA(z)\n");
    CHECK(r.code == 0);
    const auto rows = oracle::lines(r.out);
    REQUIRE(rows.size() == 2);
    const auto first = nlohmann::json::parse(rows[0]);
    CHECK(first["id"] == "law-1");
    CHECK(first["schema"] == "igscript.tree/1");
    CHECK(nlohmann::json::parse(rows[1])["id"] == "law-2");
}

TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "igparse_cli_test.csv";
    const Run r = run({"--input", "-", "--out", path.string(), "--format", "sheets"}, "A(x)");
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(golden::slurp(path).starts_with("=SPLIT(\"Statement ID|"));
    std::filesystem::remove(path);
    CHECK(run({"--input", "-", "--out", "/nonexistent/dir/x.csv"}, "A(x)").code == 2);
}

TEST_CASE("golden files") {
    const auto outcomes = golden::run_all(IGSCRIPT_GOLDEN_DIR);
    CHECK(outcomes.size() == 10);
    for (const auto& o : outcomes) {
        CAPTURE(o.name);
        CHECK(o.exit_code == 0);
        CHECK(o.actual == o.expected);
    }
}
