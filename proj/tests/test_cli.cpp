#include "sytdesc/cli.hpp"
#include "sytdesc/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace sytdesc;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& text) {
    std::vector<Json> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        out.push_back(Json::parse(line));
    return out;
}

} // namespace

TEST_CASE("count") {
    const Outcome o = run({"count", "4,3,2"});
    CHECK(o.code == 0);
    CHECK(o.out == "{\"shape\":[4,3,2],\"n\":9,\"syt_count\":\"168\"}\n");
}

TEST_CASE("malformed shapes are usage errors") {
    const Outcome o = run({"count", "2,3"});
    CHECK(o.code == 2);
    CHECK(o.out.empty());
    CHECK(Json::parse(o.err)["error"] == "NotNonIncreasing");
    CHECK(Json::parse(run({"stats", "3,0"}).err)["error"] == "NonPositivePart");
    CHECK(run({"stats", "3,2", "--f", "cubes"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"count"}).code == 2);
    const Outcome o = run({"sample", "3,2", "--format", "xml"});
    CHECK(o.code == 2);
    CHECK(Json::parse(o.err)["error"] == "UsageError");
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("stats") {
    const Outcome o = run({"stats", "3,2", "--f", "ones", "--brute"});
    REQUIRE(o.code == 0);
    const Json j = Json::parse(o.out);
    CHECK(j["expectation"] == "8/5");
    CHECK(j["variance"] == "6/25");
    CHECK(j["normalized_variance"] == "3/32");
    CHECK(j["expectation_approx"].get<double>() == doctest::Approx(1.6));
    CHECK(j["coefficients"]["c_conj"] == "2/5");
    CHECK(j["brute"]["matches"] == true);

    const Json row = Json::parse(run({"stats", "5", "--f", "identity"}).out);
    CHECK(row["expectation"] == "0/1");
    CHECK(row["normalized_variance"].is_null());

    const Json list = Json::parse(run({"stats", "2,1", "--f", "list:1,3/2"}).out);
    CHECK(list["expectation"] == "5/4");

    const Outcome mismatch = run({"stats", "2,1", "--f", "list:1,2,3"});
    CHECK(mismatch.code == 1);
    CHECK(Json::parse(mismatch.err)["error"] == "LengthMismatch");
}

TEST_CASE("enumerate") {
    const auto all = lines(run({"enumerate", "3,2"}).out);
    REQUIRE(all.size() == 6);
    CHECK(all[0]["tableau"] == Json::parse("[[1,2,3],[4,5]]"));
    CHECK(all[0]["descents"] == Json::parse("[3]"));
    CHECK(all.back()["syt_count"] == "5");
    CHECK(all.back()["emitted"] == 5);

    const auto limited = lines(run({"enumerate", "3,2", "--limit", "2"}).out);
    REQUIRE(limited.size() == 3);
    CHECK(limited.back()["syt_count"] == "5");
    CHECK(limited.back()["emitted"] == 2);

    const Outcome guarded = run({"enumerate", "4,3,2", "--guard", "10"});
    CHECK(guarded.code == 1);
    CHECK(Json::parse(guarded.err)["error"] == "GuardExceeded");
}

TEST_CASE("sample is byte-identical for a fixed seed") {
    const Outcome a = run({"sample", "4,3,2", "--count", "50", "--seed", "7"});
    const Outcome b = run({"sample", "4,3,2", "--count", "50", "--seed", "7", "--threads", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(lines(a.out).size() == 50);
    CHECK(run({"sample", "4,3,2", "--count", "50", "--seed", "8"}).out != a.out);

    const Outcome text = run({"sample", "2,1", "--count", "2", "--format", "text"});
    CHECK(text.code == 0);
    CHECK(std::count(text.out.begin(), text.out.end(), '\n') == 5);
    const Json first = lines(run({"sample", "2,1", "--count", "2"}).out)[0];
    const std::string text_first = text.out.substr(0, text.out.find("\n\n") + 1);
    CHECK(to_json(tableau_from_text(text_first)) == first["tableau"]);
}

TEST_CASE("audit") {
    const Json j = Json::parse(run({"audit", "2,1"}).out);
    CHECK(j["uniform"] == true);
    CHECK(j["expected"] == "3");
    CHECK(j["fillings"] == "6");
    REQUIRE(j["counts"].size() == 2);
    CHECK(j["counts"][0]["count"] == "3");
    CHECK(run({"audit", "5,4"}).code == 1);
}

TEST_CASE("bounded") {
    const auto rows = lines(run({"bounded", "--family", "hook", "--f", "geometric:2", "--m-from",
                                 "10", "--m-to", "12"}).out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["shape"] == Json::parse("[9,1]"));
    CHECK(rows[0]["min_c"].is_string());

    const Outcome csv = run({"bounded", "--family", "list:3;2,1", "--f", "ones", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(csv.out.starts_with("m,shape,n,lambda1"));
    CHECK(csv.out.find("\"3\",3,3,1/1,") != std::string::npos);
    CHECK(csv.out.find(",inf,") != std::string::npos);

    CHECK(run({"bounded", "--family", "hook", "--f", "list:1,2"}).code == 2);
}

TEST_CASE("verify small") {
    const Outcome o = run({"verify", "--max-n", "5", "--draws", "20000"});
    const auto all = lines(o.out);
    REQUIRE(!all.empty());
    CHECK(all.back()["failed"] == 0);
    CHECK(o.code == 0);
}

TEST_CASE("tableau text and json round trip") {
    const Tableau t = Tableau::validate(Partition({4, 3, 2}), {{1, 3, 4, 6}, {2, 5, 8}, {7, 9}});
    CHECK(tableau_from_text(to_text(t)) == t);
    CHECK(tableau_from_json(to_json(t)) == t);
    CHECK(to_text(t) == "1 3 4 6\n2 5 8\n7 9\n");
    CHECK_THROWS(tableau_from_json(Json::parse("[[1,2],[3,4,5]]")));
    CHECK_THROWS(tableau_from_text("1 x\n2\n"));
    CHECK(partition_from_json(Json::parse("[3,2]")) == Partition({3, 2}));
}
