#include "dcc/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "dcc/autgrp.hpp"
#include "dcc/census.hpp"

namespace dcc::cli {

namespace {

int default_jobs() {
    if (const char* env = std::getenv("DCC_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

void cmd_group(const std::string& spec, std::ostream& out) {
    DicyclicGroup g = DicyclicGroup::parse(spec);
    nlohmann::ordered_json j;
    j["spec"] = g.spec();
    j["n"] = g.order();
    j["m"] = g.order_le2_count();
    j["q8e"] = g.is_q8_x_c2l();
    BigInt count = count_inverse_closed(g);
    j["inverse_closed_log2"] = (g.order_le2_count() + g.order()) / 2;
    if (count <= BigInt(std::uint64_t(-1)))
        j["inverse_closed"] = count.convert_to<std::uint64_t>();
    else
        j["inverse_closed"] = count.str();
    out << j.dump() << "\n";
}

int cmd_verify(const std::string& spec, std::ostream& out) {
    DicyclicGroup g = DicyclicGroup::parse(spec);
    CanonicalB b = build_canonical_B(g);
    FactReport rep = verify_canonical_facts(g, b);
    nlohmann::ordered_json j;
    j["group"] = g.spec();
    j["kind"] = b.kind == BKind::Q8E ? "q8e" : "generic";
    nlohmann::ordered_json facts = nlohmann::ordered_json::array();
    for (const auto& f : rep.facts) {
        nlohmann::ordered_json fj;
        fj["name"] = f.name;
        fj["pass"] = f.pass;
        if (!f.detail.empty()) fj["detail"] = f.detail;
        facts.push_back(fj);
    }
    j["facts"] = facts;
    j["all_pass"] = rep.all_pass();
    out << j.dump() << "\n";
    return rep.all_pass() ? 0 : 1;
}

void cmd_classify(const std::string& spec, const std::string& hex, bool directed, bool with_gens,
                  int degree_cap, std::ostream& out) {
    DicyclicGroup g = DicyclicGroup::parse(spec);
    ConnectionSet s = ConnectionSet::from_hex(hex, (int)g.order());
    CensusRecord rec = classify(g, s, directed, degree_cap);
    nlohmann::ordered_json j = rec.to_json();
    if (with_gens) {
        CayleyGraph graph = build_cayley(g, s, directed);
        PermGroup aut = automorphism_group(graph, degree_cap);
        nlohmann::ordered_json gens = nlohmann::ordered_json::array();
        for (const auto& p : aut.generators()) gens.push_back(p.to_string());
        j["aut_gens"] = gens;
    }
    out << j.dump() << "\n";
}

void append_csv(const std::string& path, const CensusSummary& sum) {
    bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream f(path, std::ios::app);
    if (!f) throw std::runtime_error("cannot open CSV file " + path);
    if (fresh) f << CensusSummary::csv_header() << "\n";
    f << sum.csv_row() << "\n";
}

int cmd_census(const std::string& spec, bool exhaustive, std::uint64_t trials,
               std::uint64_t seed, const CensusOptions& options, const std::string& out_path,
               const std::string& csv_path, std::ostream& out) {
    DicyclicGroup g = DicyclicGroup::parse(spec);
    CensusResult result = exhaustive ? run_exhaustive(g, options)
                                     : run_sampled(g, trials, seed, options);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file " + out_path);
        for (const auto& rec : result.records) f << rec.to_json().dump() << "\n";
    }
    if (!csv_path.empty()) append_csv(csv_path, result.summary);
    out << result.summary.to_json().dump() << "\n";
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"generalised dicyclic groups, their Cayley graphs and automorphism censuses"};
    app.require_subcommand(1);

    std::string spec, set_hex, out_path, csv_path;
    bool directed = false, with_gens = false, exhaustive = false;
    std::uint64_t trials = 0, seed = 1;
    int jobs = default_jobs();
    int degree_cap = kDefaultAutDegreeCap;
    std::uint64_t cap = 1ull << 16;

    auto* grp = app.add_subcommand("group", "print order, involution count and subset counts");
    grp->add_option("spec", spec, "group spec, e.g. dic:C6:y=3 or q8e:1")->required();

    auto* ver = app.add_subcommand("verify", "check the structural facts of the canonical group B");
    ver->add_option("spec", spec)->required();

    auto* cls = app.add_subcommand("classify", "classify one connection set");
    cls->add_option("spec", spec)->required();
    cls->add_option("--set", set_hex, "connection set as a hex mask, bit 0 = element 0")->required();
    cls->add_flag("--directed", directed, "treat the set as a digraph connection set");
    cls->add_flag("--gens", with_gens, "include automorphism group generators in the output");
    cls->add_option("--degree-cap", degree_cap, "automorphism search degree cap");

    auto* cen = app.add_subcommand("census", "classify many connection sets");
    cen->add_option("spec", spec)->required();
    auto* ex = cen->add_flag("--exhaustive", exhaustive, "every inverse-closed set (or every subset, directed)");
    auto* sa = cen->add_option("--sample", trials, "number of uniform random draws");
    ex->excludes(sa);
    sa->excludes(ex);
    cen->add_option("--seed", seed, "PRNG seed for sampled runs");
    cen->add_flag("--directed", directed, "digraph census: baseline is the regular copy of R");
    cen->add_option("--jobs", jobs, "worker threads (default $DCC_JOBS or 1)");
    cen->add_option("--out", out_path, "records file, one JSON object per line");
    cen->add_option("--csv", csv_path, "append the summary CSV row to this file");
    cen->add_option("--cap", cap, "exhaustive enumeration cap");
    cen->add_option("--degree-cap", degree_cap, "automorphism search degree cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (grp->parsed()) {
            cmd_group(spec, out);
            return 0;
        }
        if (ver->parsed()) return cmd_verify(spec, out);
        if (cls->parsed()) {
            cmd_classify(spec, set_hex, directed, with_gens, degree_cap, out);
            return 0;
        }
        if (cen->parsed()) {
            if (!exhaustive && trials == 0) {
                err << "error: census needs --exhaustive or --sample N\n";
                return 2;
            }
            CensusOptions options;
            options.directed = directed;
            options.jobs = jobs;
            options.exhaustive_cap = cap;
            options.degree_cap = degree_cap;
            return cmd_census(spec, exhaustive, trials, seed, options, out_path, csv_path, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "assertion failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace dcc::cli
