#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "sumsets/report.hpp"

using namespace sumsets;

TEST_CASE("csv quoting") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
    Table t{"", {"x", "y"}, {{"{0,1}", "q\"t"}, {"", "3"}}};
    Table back = parse_csv(emit(Format::Csv, t));
    CHECK(back.header == t.header);
    CHECK(back.rows == t.rows);
    CHECK(parse_csv("a,b\r\n1,2\r\n").rows == std::vector<std::vector<std::string>>{{"1", "2"}});
    CHECK_THROWS_AS(parse_csv("a\n\"open"), Error);
}

TEST_CASE("empty row set") {
    Table t{"", {"n", "value"}, {}};
    CHECK(emit(Format::Csv, t) == "n,value\n");
    CHECK(emit(Format::Json, t).empty());
}

TEST_CASE("json rows") {
    Table t{"", {"n", "m", "h", "bound", "value"}, {{"20", "5", "2", "15", "14"}}};
    CHECK(emit(Format::Json, t) == "{\"n\":20,\"m\":5,\"h\":2,\"bound\":15,\"value\":14}\n");
    Table u{"", {"h", "u", "uhat"}, {{"2", "9", ""}}};
    CHECK(emit(Format::Json, u) == "{\"h\":2,\"u\":9,\"uhat\":null}\n");
}

TEST_CASE("origin line") {
    Table t{"some table", {"a"}, {{"1"}}};
    std::string csv = emit(Format::Csv, t);
    CHECK(csv == "# origin: some table\na\n1\n");
    CHECK(parse_csv(csv).origin == "some table");
}

TEST_CASE("report rows round-trip through json") {
    std::mt19937_64 rng(0x5eed0100);
    const Family fams[] = {Family::Nu, Family::Phi, Family::Sigma, Family::Rho, Family::Chi, Family::Tau, Family::Mu};
    const Lambda lams[] = {Lambda::N0, Lambda::Z, Lambda::Restricted, Lambda::RestrictedSigned};
    const char* groups[] = {"Z1", "Z12", "Z3^2", "Z2xZ4", "Z2^2xZ3"};
    for (int i = 0; i < 1000; ++i) {
        auto pick = [&](int k) { return int(rng() % k); };
        ReportRow r;
        r.query.family = fams[pick(7)];
        r.query.lambda = lams[pick(4)];
        r.query.group = Group::parse(groups[pick(5)]);
        int v = 1 + pick(5);
        r.query.terms = pick(2) ? TermCount::exact(v) : pick(2) ? TermCount::upto(v) : TermCount::all_n();
        r.query.m = pick(6);
        if (pick(2)) r.query.k = 3, r.query.l = 1;
        r.query.generating = pick(2);
        r.query.exclude_zero = pick(2);
        if (pick(3)) r.value = pick(100);
        if (pick(2)) r.witness = std::vector<int>{0, pick(10) + 1};
        if (pick(2)) r.citations = {"thm:rho=u", "cor:rho-vs-p"};
        r.nodes = (long long)(rng() >> 20);
        if (pick(2)) r.elapsed_ms = 0.25 * pick(1000);
        std::string line = row_to_json(r);
        ReportRow b = row_from_json(line);
        CHECK(row_to_json(b) == line);
        CHECK(b.query.group == r.query.group);
        CHECK(b.query.terms == r.query.terms);
        CHECK(b.value == r.value);
        CHECK(b.witness == r.witness);
        CHECK(b.elapsed_ms == r.elapsed_ms);
    }
    CHECK_THROWS_AS(row_from_json("{not json"), Error);
    CHECK_THROWS_AS(row_from_json("{\"family\":\"nu\"}"), Error);
}

TEST_CASE("named tables regenerate their fixtures") {
    SearchOptions opt;
    for (auto id : {"v-table", "u15", "phi-z10", "sidon-f2", "chihat-z15", "nu-exceptions-z20"}) {
        FixtureResult r = check_fixture(find_table(id), SUMSETS_FIXTURE_DIR, opt);
        CAPTURE(id);
        CAPTURE(r.mismatch);
        CHECK(r.ok);
        CHECK(r.rows > 0);
    }
    CHECK_THROWS_AS(find_table("missing"), Error);
}

TEST_CASE("fixture mismatches name the first bad cell") {
    // copy a fixture with one cell altered
    std::ifstream in(std::string(SUMSETS_FIXTURE_DIR) + "/sidon_f2.csv");
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    auto pos = text.find("\n3,7\n");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 5, "\n3,8\n");
    std::string dir = (std::filesystem::temp_directory_path() / "sumsets_fixture_mismatch").string();
    std::filesystem::create_directories(dir);
    std::ofstream(dir + "/sidon_f2.csv") << text;
    FixtureResult r = check_fixture(find_table("sidon-f2"), dir, SearchOptions{});
    CHECK_FALSE(r.ok);
    CHECK(r.mismatch.find("expected 8, got 7") != std::string::npos);
}
