#include "dcc/census.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "dcc/autgrp.hpp"
#include "dcc/rng.hpp"

namespace dcc {

namespace {

// shared, read-only after construction; the baseline orders are forced
// eagerly so census workers never race on the lazy chains
struct CensusContext {
    const DicyclicGroup& group;
    std::string spec;
    CanonicalB canonical;
    PermGroup regular;
    BigInt b_order;
    BigInt r_order;
    int degree_cap;

    CensusContext(const DicyclicGroup& g, int cap)
        : group(g),
          spec(g.spec()),
          canonical(build_canonical_B(g)),
          regular(regular_representation(g)),
          b_order(canonical.group.order()),
          r_order(regular.order()),
          degree_cap(cap) {}
};

CensusRecord classify_in(const CensusContext& ctx, const ConnectionSet& s, bool directed) {
    auto t0 = std::chrono::steady_clock::now();
    CayleyGraph graph = build_cayley(ctx.group, s, directed);
    PermGroup aut = automorphism_group(graph, ctx.degree_cap);
    const PermGroup& baseline = directed ? ctx.regular : ctx.canonical.group;
    if (!is_subgroup(baseline, aut))
        throw std::logic_error("baseline group is not contained in Aut; this is a bug");
    CensusRecord rec;
    rec.group = ctx.spec;
    rec.directed = directed;
    rec.set_hex = s.to_hex();
    rec.aut_order = aut.order();
    rec.b_order = directed ? ctx.r_order : ctx.b_order;
    rec.exceptional = rec.aut_order != rec.b_order;
    rec.elapsed_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

// The sweep kernel exists twice on purpose: a plain serial loop kept as the
// reference implementation, and the OpenMP version used for real runs. The
// two must produce identical records for any job count; tests and the
// benchmark target compare them.
void sweep_serial(std::vector<CensusRecord>& records,
                  const std::function<CensusRecord(std::uint64_t)>& work) {
    for (std::uint64_t i = 0; i < records.size(); ++i) records[i] = work(i);
}

void sweep_parallel(std::vector<CensusRecord>& records,
                    const std::function<CensusRecord(std::uint64_t)>& work, int jobs) {
    const long long count = (long long)records.size();
    std::exception_ptr failure = nullptr;
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
#endif
    for (long long i = 0; i < count; ++i) {
        try {
            records[i] = work((std::uint64_t)i);
        } catch (...) {
#if defined(_OPENMP)
#pragma omp critical
#endif
            {
                if (!failure) failure = std::current_exception();
            }
        }
    }
    if (failure) std::rethrow_exception(failure);
}

void sweep(std::vector<CensusRecord>& records,
           const std::function<CensusRecord(std::uint64_t)>& work, int jobs) {
    if (jobs <= 1)
        sweep_serial(records, work);
    else
        sweep_parallel(records, work, jobs);
}

double format_proportion(std::uint64_t exceptional, std::uint64_t total) {
    return total == 0 ? 0.0 : (double)exceptional / (double)total;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

}  // namespace

nlohmann::ordered_json CensusRecord::to_json() const {
    nlohmann::ordered_json j;
    j["group"] = group;
    j["directed"] = directed;
    if (index) j["index"] = *index;
    if (seed) j["seed"] = *seed;
    if (draw) j["draw"] = *draw;
    j["set"] = set_hex;
    j["aut_order"] = aut_order.str();
    j["b_order"] = b_order.str();
    j["verdict"] = verdict();
    j["elapsed_sec"] = elapsed_sec;
    return j;
}

bool CensusRecord::same_result(const CensusRecord& o) const {
    return group == o.group && directed == o.directed && index == o.index && seed == o.seed &&
           draw == o.draw && set_hex == o.set_hex && aut_order == o.aut_order &&
           b_order == o.b_order && exceptional == o.exceptional;
}

EpsilonBound epsilon_bound(const DicyclicGroup& g) {
    const double n = (double)g.order();
    const double m = (double)g.order_le2_count();
    const double log2n = std::log2(n);
    EpsilonBound eb{};
    if (g.is_q8_x_c2l()) {
        eb.exponent = -n / 512.0 + log2n * log2n + 2.0;
        eb.total_log2 = 5.0 * n / 8.0;
    } else {
        eb.exponent = -n / 48.0 + 2.0 * log2n * log2n + 4.0;
        eb.total_log2 = m / 2.0 + n / 2.0;
    }
    eb.bound_log2 = eb.total_log2 + eb.exponent;
    eb.vacuous = eb.exponent >= 0.0;
    return eb;
}

nlohmann::ordered_json CensusSummary::to_json() const {
    nlohmann::ordered_json j;
    j["group"] = group;
    j["n"] = n;
    j["m"] = m;
    j["directed"] = directed;
    j["mode"] = exhaustive ? "exhaustive" : "sample";
    j["total"] = total;
    j["exceptional"] = exceptional_count;
    j["proportion"] = proportion;
    if (!exhaustive) {
        j["trials"] = trials;
        j["seed"] = seed;
        j["ci_halfwidth"] = ci_halfwidth;
    }
    if (bound_log2) j["bound_log2"] = *bound_log2;
    if (vacuous) j["vacuous"] = *vacuous;
    if (bound_satisfied) j["bound_satisfied"] = *bound_satisfied;
    return j;
}

std::string CensusSummary::csv_header() {
    return "group,n,m,total,exceptional,proportion,ci_halfwidth,bound_log2,vacuous,satisfied";
}

std::string CensusSummary::csv_row() const {
    std::string row = group + ',' + std::to_string(n) + ',' + std::to_string(m) + ',' +
                      std::to_string(total) + ',' + std::to_string(exceptional_count) + ',' +
                      fmt_double(proportion) + ',' + fmt_double(ci_halfwidth) + ',';
    if (bound_log2) row += fmt_double(*bound_log2);
    row += ',';
    if (vacuous) row += *vacuous ? "true" : "false";
    row += ',';
    if (bound_satisfied) row += *bound_satisfied ? "true" : "false";
    return row;
}

CensusRecord classify(const DicyclicGroup& g, const ConnectionSet& s, bool directed,
                      int degree_cap) {
    CensusContext ctx(g, degree_cap);
    return classify_in(ctx, s, directed);
}

CensusResult run_exhaustive(const DicyclicGroup& g, const CensusOptions& options) {
    CensusContext ctx(g, options.degree_cap);
    std::uint64_t total;
    InverseOrbits orbits;
    if (options.directed) {
        if (g.order() > 16)
            throw std::domain_error("directed exhaustive census needs 2^n <= cap, so n <= 16");
        total = std::uint64_t(1) << g.order();
        if (total > options.exhaustive_cap)
            throw std::domain_error("too many subsets to enumerate; use sampling");
    } else {
        BigInt count = count_inverse_closed(g);
        if (count > BigInt(options.exhaustive_cap))
            throw std::domain_error("too many inverse-closed subsets to enumerate; use sampling");
        total = count.convert_to<std::uint64_t>();
        orbits = inverse_orbits(g);
    }

    CensusResult result;
    result.records.resize(total);
    auto work = [&](std::uint64_t i) {
        ConnectionSet s = options.directed
                              ? [&] {
                                    ConnectionSet sub((int)g.order());
                                    for (int b = 0; b < (int)g.order(); ++b)
                                        if ((i >> b) & 1) sub.set(b);
                                    return sub;
                                }()
                              : inverse_closed_at(g, orbits, i);
        CensusRecord rec = classify_in(ctx, s, options.directed);
        rec.index = i;
        return rec;
    };
    sweep(result.records, work, options.jobs);

    CensusSummary& sum = result.summary;
    sum.group = ctx.spec;
    sum.n = g.order();
    sum.m = g.order_le2_count();
    sum.directed = options.directed;
    sum.exhaustive = true;
    sum.total = total;
    for (const auto& r : result.records)
        if (r.exceptional) ++sum.exceptional_count;
    sum.proportion = format_proportion(sum.exceptional_count, sum.total);
    if (!options.directed) check_bound(sum, g);
    return result;
}

CensusResult run_sampled(const DicyclicGroup& g, std::uint64_t trials, std::uint64_t seed,
                         const CensusOptions& options) {
    if (trials < 1) throw std::invalid_argument("sampled census needs at least one trial");
    CensusContext ctx(g, options.degree_cap);
    CensusResult result;
    result.records.resize(trials);
    auto work = [&](std::uint64_t i) {
        std::uint64_t child = derive_seed(seed, i);
        ConnectionSet s = options.directed ? sample_subset(g, child)
                                           : sample_inverse_closed(g, child);
        CensusRecord rec = classify_in(ctx, s, options.directed);
        rec.seed = seed;
        rec.draw = i;
        return rec;
    };
    sweep(result.records, work, options.jobs);

    CensusSummary& sum = result.summary;
    sum.group = ctx.spec;
    sum.n = g.order();
    sum.m = g.order_le2_count();
    sum.directed = options.directed;
    sum.exhaustive = false;
    sum.total = trials;
    sum.trials = trials;
    sum.seed = seed;
    for (const auto& r : result.records)
        if (r.exceptional) ++sum.exceptional_count;
    sum.proportion = format_proportion(sum.exceptional_count, sum.total);
    sum.ci_halfwidth = binomial_ci_halfwidth(sum.exceptional_count, trials);
    return result;
}

bool bound_holds(std::uint64_t exceptional_count, double bound_log2) {
    // 2^-20 slack absorbs the double-precision log2 terms; at desk scale the
    // margin between count and bound is orders of magnitude wider
    constexpr double kSlack = 9.5367431640625e-07;
    return exceptional_count == 0 ||
           std::log2((double)exceptional_count) <= bound_log2 + kSlack;
}

bool check_bound(CensusSummary& summary, const DicyclicGroup& g) {
    if (!summary.exhaustive)
        throw std::invalid_argument("the rarity bound is about exact counts; run exhaustively");
    EpsilonBound eb = epsilon_bound(g);
    bool ok = bound_holds(summary.exceptional_count, eb.bound_log2);
    summary.bound_log2 = eb.bound_log2;
    summary.vacuous = eb.vacuous;
    summary.bound_satisfied = ok;
    return ok;
}

double binomial_ci_halfwidth(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) return 0.0;
    double p = (double)successes / (double)trials;
    return 1.96 * std::sqrt(p * (1.0 - p) / (double)trials);
}

}  // namespace dcc
