#include "locdim/bench.hpp"

#include <chrono>

#include "json.hpp"

namespace locdim {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_us(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

}  // namespace

const char* bench_method_name(BenchMethod m) {
    return m == BenchMethod::Brute ? "brute-force" : "decomposition";
}

BenchReport bench_compare(const Graph& g, const std::vector<BenchMethod>& methods,
                          const SearchLimits& limits, int threads, const std::string& instance,
                          std::uint64_t seed) {
    BenchReport report;
    report.instance = instance;
    report.n = g.order();
    report.m = g.edge_count();
    report.seed = seed;
    for (auto method : methods) {
        MethodRun run;
        run.method = bench_method_name(method);
        if (method == BenchMethod::Brute && g.order() > limits.max_exact) {
            run.note = "skipped: order exceeds exact-search cap";
        } else {
            auto start = Clock::now();
            try {
                DimResult r = method == BenchMethod::Brute
                                  ? brute_force_dimension(g, limits)
                                  : dim_via_decomposition(g, limits, threads);
                run.time_us = elapsed_us(start);
                run.ran = true;
                run.dimension = r.dimension;
                run.result_method = method_name(r.method);
            } catch (const Error& e) {
                run.time_us = elapsed_us(start);
                run.note = std::string("failed: ") + e.what();
            }
        }
        report.runs.push_back(std::move(run));
    }
    int reference = -1;
    for (const auto& run : report.runs) {
        if (!run.ran) continue;
        if (reference == -1) reference = run.dimension;
        if (run.dimension != reference) report.agreement = false;
    }
    return report;
}

std::string report_json(const BenchReport& report) {
    nlohmann::json j;
    j["instance"] = report.instance;
    j["n"] = report.n;
    j["m"] = report.m;
    j["seed"] = report.seed;
    j["agreement"] = report.agreement;
    j["runs"] = nlohmann::json::array();
    for (const auto& run : report.runs) {
        nlohmann::json r;
        r["method"] = run.method;
        r["ran"] = run.ran;
        if (run.ran) {
            r["dimension"] = run.dimension;
            r["result_method"] = run.result_method;
            r["time_us"] = run.time_us;
        } else {
            r["note"] = run.note;
        }
        j["runs"].push_back(std::move(r));
    }
    return j.dump();
}

std::string dim_result_json(const Graph& g, const DimResult& result, std::int64_t time_us) {
    nlohmann::json j;
    j["dimension"] = result.dimension;
    j["method"] = method_name(result.method);
    j["n"] = g.order();
    j["m"] = g.edge_count();
    j["witness"] = result.witness.to_vector();
    j["time_us"] = time_us;
    return j.dump();
}

}  // namespace locdim
