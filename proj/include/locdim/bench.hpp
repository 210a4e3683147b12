#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locdim/decomposition.hpp"
#include "locdim/graph.hpp"

namespace locdim {

enum class BenchMethod { Brute, Decomposition };

const char* bench_method_name(BenchMethod m);

struct MethodRun {
    std::string method;
    bool ran = false;
    std::string note;            // reason when skipped
    std::int64_t time_us = 0;    // monotonic wall time, excluded from byte stability
    int dimension = -1;
    std::string result_method;   // tag reported by the solver
};

/// One benchmarked instance. agreement is true iff every method that ran
/// returned the same dimension.
struct BenchReport {
    std::string instance;
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
    std::vector<MethodRun> runs;
    bool agreement = true;
};

/// Runs the requested methods on g. Brute force is skipped with a note when
/// the order exceeds the exact-search cap.
BenchReport bench_compare(const Graph& g, const std::vector<BenchMethod>& methods,
                          const SearchLimits& limits = {}, int threads = 1,
                          const std::string& instance = "", std::uint64_t seed = 0);

/// JSON text for one report; stable key order.
std::string report_json(const BenchReport& report);

/// JSON payload of a single dimension computation, as printed by the CLI.
std::string dim_result_json(const Graph& g, const DimResult& result, std::int64_t time_us);

}  // namespace locdim
