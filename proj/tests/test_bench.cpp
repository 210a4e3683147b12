#include <regex>

#include "doctest.h"

#include "locdim/bench.hpp"
#include "locdim/constructions.hpp"
#include "locdim/generators.hpp"
#include "test_util.hpp"

using namespace locdim;

namespace {

std::string strip_timing(std::string text) {
    static const std::regex time_key("\"time_us\":[0-9]+");
    return std::regex_replace(text, time_key, "\"time_us\":0");
}

}  // namespace

TEST_SUITE_BEGIN("bench");

TEST_CASE("bench_compare agreement on the bowtie") {
    auto report = bench_compare(fixtures::bowtie(),
                                {BenchMethod::Brute, BenchMethod::Decomposition});
    REQUIRE(report.runs.size() == 2);
    CHECK(report.runs[0].dimension == 2);
    CHECK(report.runs[1].dimension == 2);
    CHECK(report.agreement);
}

TEST_CASE("brute force is skipped above the cap") {
    ChainSpec spec;
    spec.parts.assign(10, Graph::complete(5));
    spec.links.assign(9, {1, 2});
    auto g = chain(spec).first;
    CHECK(g.order() == 41);
    auto report = bench_compare(g, {BenchMethod::Brute, BenchMethod::Decomposition});
    CHECK_FALSE(report.runs[0].ran);
    CHECK(report.runs[0].note.find("skipped") != std::string::npos);
    CHECK(report.runs[1].ran);
    CHECK(report.runs[1].dimension == 22);
    CHECK(report.agreement);
}

TEST_CASE("complete graphs agree through both paths") {
    auto report = bench_compare(Graph::complete(7),
                                {BenchMethod::Brute, BenchMethod::Decomposition});
    CHECK(report.runs[0].dimension == 6);
    CHECK(report.runs[1].dimension == 6);
    CHECK(report.agreement);
}

TEST_CASE("randomized compare suites always agree") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto g = gen_cactus(10, seed);
        auto report = bench_compare(g, {BenchMethod::Brute, BenchMethod::Decomposition}, {}, 2,
                                    "cactus-" + std::to_string(seed), seed);
        CHECK(report.agreement);
    }
}

TEST_CASE("report JSON is stable apart from timing") {
    auto g = gen_block_graph(4, 4, 9);
    auto a = bench_compare(g, {BenchMethod::Brute, BenchMethod::Decomposition}, {}, 1, "x", 9);
    auto b = bench_compare(g, {BenchMethod::Brute, BenchMethod::Decomposition}, {}, 1, "x", 9);
    CHECK(strip_timing(report_json(a)) == strip_timing(report_json(b)));
    CHECK(report_json(a).find("\"agreement\":true") != std::string::npos);
}

TEST_CASE("dim JSON payload carries the documented keys") {
    auto g = fixtures::bowtie();
    auto result = dim_via_decomposition(g);
    auto json = dim_result_json(g, result, 12);
    for (const char* key : {"\"dimension\":2", "\"method\":\"decomposition\"", "\"n\":5",
                            "\"m\":6", "\"witness\":", "\"time_us\":"})
        CHECK(json.find(key) != std::string::npos);
}

TEST_SUITE_END();
