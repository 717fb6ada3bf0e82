#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = qcramer::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(QCRAMER_TEST_DATA) + "/" + name; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("worked example prints every entry over 72") {
    const auto r = run({"solve", "--form", "axb=d", "--a", data("A.qm"), "--b", data("B.qm"), "--d", data("D.qm"),
                        "--scalar", "rational"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "# 3 2\n"
          "1/18+5/72i+1/36j-1/72k -1/72-1/36i+5/72j-1/18k\n"
          "1/72+1/72i-1/36j-1/36k -1/36+1/36i+1/72j-1/72k\n"
          "1/36-1/24i-1/24j 1/24i-1/24j-1/36k\n");
}

TEST_CASE("json report") {
    const auto r = run({"solve", "--form", "axb=d", "--a", data("A.qm"), "--b", data("B.qm"), "--d", data("D.qm"),
                        "--json", "--verify", "--route", "dB"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["route"] == "axb=d/general/dB");
    CHECK(j["rank_a"] == 2);
    CHECK(j["rank_b"] == 1);
    CHECK(j["verified"] == true);
    CHECK(j["solution"][1][1] == nlohmann::json::array({"-1/36", "1/36", "1/72", "-1/72"}));
    CHECK(j.contains("residual_norm_sq"));
    CHECK(j["solution_norm_sq"] == "13/432");
}

TEST_CASE("determinants") {
    CHECK(run({"det", "--kind", "ddet", "--input", data("I3.qm")}).out == "1\n");
    CHECK(run({"det", "--kind", "gram", "--input", data("A.qm")}).out == "0\n");
    CHECK(run({"det", "--kind", "rdet", "--index", "2", "--input", data("I3.qm")}).out == "1\n");
    const auto r = run({"det", "--kind", "gram", "--input", data("A.qm"), "--verify", "--scalar", "float64"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verified: true") != std::string::npos);
}

TEST_CASE("pseudoinverse") {
    CHECK(run({"pinv", "--input", data("zero.qm")}).out == "# 3 2\n0 0\n0 0\n0 0\n");
    const auto det = run({"pinv", "--input", data("A.qm"), "--route", "rdet"});
    const auto oracle = run({"pinv", "--input", data("A.qm"), "--oracle"});
    CHECK(det.code == 0);
    CHECK(det.out == oracle.out);
    const auto v = run({"pinv", "--input", data("B.qm"), "--verify", "--json"});
    CHECK(nlohmann::json::parse(v.out)["verified"] == true);
    CHECK(run({"pinv", "--input", data("A.qm"), "--scalar", "float64", "--limit", "--verify"}).code == 0);
}

TEST_CASE("error codes") {
    auto r = run({"det", "--kind", "ddet", "--input", data("A.qm")});
    CHECK(r.code == 2);
    CHECK(r.err.find("error[shape_mismatch]") != std::string::npos);
    r = run({"det", "--kind", "rdet", "--input", data("I3.qm"), "--max-n", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error[size_cap]") != std::string::npos);
    r = run({"pinv", "--input", data("missing.qm")});
    CHECK(r.code == 1);
    CHECK(r.err.find("error[io]") != std::string::npos);
    r = run({"solve", "--form", "ax=b", "--a", data("A.qm"), "--b", data("B.qm")});
    CHECK(r.code == 2);
    r = run({"pinv", "--input", data("A.qm"), "--limit"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error[unsupported_mode]") != std::string::npos);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"solve", "--form", "axb=d", "--a", data("A.qm"), "--b", data("B.qm")}).code == 1);
    CHECK(run({"pinv", "--input", data("A.qm"), "--route", "dB"}).code == 2);
}

TEST_CASE("help") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("solve") != std::string::npos);
}

}
