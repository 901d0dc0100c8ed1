// Compares the serial reference sweep against the OpenMP sweep on the same
// census and checks that both produce identical records.
//
//   ./dcc-bench [--trials N] [--jobs J] [--group SPEC]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <thread>

#include "dcc/census.hpp"

using namespace dcc;

namespace {

double timed(CensusResult& out, const DicyclicGroup& g, std::uint64_t trials,
             const CensusOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    out = run_sampled(g, trials, 1, opt);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::string spec = "dic:C24:y=12";
    std::uint64_t trials = 400;
    unsigned hw = std::thread::hardware_concurrency();
    int jobs = hw == 0 ? 4 : (int)hw;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--trials") && i + 1 < argc)
            trials = std::strtoull(argv[++i], nullptr, 10);
        else if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc)
            jobs = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--group") && i + 1 < argc)
            spec = argv[++i];
    }

    DicyclicGroup g = DicyclicGroup::parse(spec);
    std::printf("group %s  n=%lld  trials=%llu\n", g.spec().c_str(), g.order(),
                (unsigned long long)trials);

    CensusOptions serial;
    serial.jobs = 1;
    CensusOptions parallel;
    parallel.jobs = jobs;

    CensusResult rs, rp;
    double ts = timed(rs, g, trials, serial);
    double tp = timed(rp, g, trials, parallel);

    bool identical = rs.records.size() == rp.records.size();
    for (size_t i = 0; identical && i < rs.records.size(); ++i)
        identical = rs.records[i].same_result(rp.records[i]);

    std::printf("serial reference : %8.3fs\n", ts);
    std::printf("openmp (%2d jobs) : %8.3fs\n", jobs, tp);
    std::printf("speedup          : %8.2fx\n", tp > 0 ? ts / tp : 0.0);
    std::printf("records identical: %s\n", identical ? "yes" : "NO");
    std::printf("exceptional      : %llu of %llu\n",
                (unsigned long long)rs.summary.exceptional_count,
                (unsigned long long)rs.summary.total);
    return identical ? 0 : 1;
}
