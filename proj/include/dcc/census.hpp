#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "dcc/autgrp.hpp"
#include "dcc/canonical.hpp"
#include "dcc/cayley.hpp"
#include "dcc/dicyclic.hpp"

namespace dcc {

// One classified connection set. Undirected runs compare Aut(Cay(R,S))
// against the canonical group B, directed runs against the regular copy of
// R; in both cases the baseline is contained in Aut by construction, so a
// containment failure is an implementation bug and aborts the run.
struct CensusRecord {
    std::string group;
    bool directed = false;
    std::optional<std::uint64_t> index;  // exhaustive runs
    std::optional<std::uint64_t> seed;   // sampled runs
    std::optional<std::uint64_t> draw;
    std::string set_hex;
    BigInt aut_order = 0;
    BigInt b_order = 0;
    bool exceptional = false;  // true: PROPER_SUPERGROUP, false: EQUAL
    double elapsed_sec = 0.0;

    const char* verdict() const { return exceptional ? "PROPER_SUPERGROUP" : "EQUAL"; }
    nlohmann::ordered_json to_json() const;
    // record identity; elapsed_sec is provenance and not part of it
    bool same_result(const CensusRecord& o) const;
};

// exponent e(n) of the rarity bound: exceptional sets number at most
// total * 2^e(n), with e(n) = -n/48 + 2*log2(n)^2 + 4 in the generic case
// and e(n) = -n/512 + log2(n)^2 + 2 in the q8e case
struct EpsilonBound {
    double exponent;    // e(n)
    double total_log2;  // log2 of the number of inverse-closed subsets
    double bound_log2;  // total_log2 + exponent
    bool vacuous;       // bound >= total, i.e. e(n) >= 0
};

EpsilonBound epsilon_bound(const DicyclicGroup& g);

struct CensusSummary {
    std::string group;
    long long n = 0, m = 0;
    bool directed = false;
    bool exhaustive = false;
    std::uint64_t total = 0;   // sets examined
    std::uint64_t exceptional_count = 0;
    std::uint64_t trials = 0;  // sampled runs
    std::uint64_t seed = 0;
    double proportion = 0.0;
    double ci_halfwidth = 0.0;  // 95% interval, sampled runs only
    // filled by check_bound on exhaustive undirected runs
    std::optional<double> bound_log2;
    std::optional<bool> vacuous;
    std::optional<bool> bound_satisfied;

    nlohmann::ordered_json to_json() const;
    static std::string csv_header();
    std::string csv_row() const;
};

struct CensusOptions {
    bool directed = false;
    int jobs = 1;
    std::uint64_t exhaustive_cap = 1ull << 16;
    int degree_cap = kDefaultAutDegreeCap;
};

struct CensusResult {
    CensusSummary summary;
    std::vector<CensusRecord> records;
};

// classify one set against the canonical baseline
CensusRecord classify(const DicyclicGroup& g, const ConnectionSet& s, bool directed,
                      int degree_cap = kDefaultAutDegreeCap);

// every inverse-closed set (undirected) or every subset (directed; needs
// n <= 16); refuses when the total exceeds options.exhaustive_cap
CensusResult run_exhaustive(const DicyclicGroup& g, const CensusOptions& options);

// `trials` independent uniform draws, deterministic in `seed`
CensusResult run_sampled(const DicyclicGroup& g, std::uint64_t trials, std::uint64_t seed,
                         const CensusOptions& options);

// the comparator core: does `exceptional <= 2^bound_log2` hold? Comparison
// in log2 with a 2^-20 slack for the double-precision log terms.
bool bound_holds(std::uint64_t exceptional_count, double bound_log2);

// Compares the exceptional count against the rarity bound, filling the
// summary's bound fields; refuses sampled summaries (the bound is about
// exact counts).
bool check_bound(CensusSummary& summary, const DicyclicGroup& g);

// half-width of the 95% normal-approximation interval for a proportion
double binomial_ci_halfwidth(std::uint64_t successes, std::uint64_t trials);

}  // namespace dcc
