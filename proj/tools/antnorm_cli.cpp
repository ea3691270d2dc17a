// antnorm command line front end. Parses flags, hands everything to the
// shared library through the C API, prints the rendered result verbatim.

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "antnorm.h"

namespace {

struct ResultDeleter {
    void operator()(an_result* r) const { an_result_free(r); }
};
using ResultPtr = std::unique_ptr<an_result, ResultDeleter>;

int emit(ResultPtr r) {
    if (!r) {
        std::fputs("antnorm: out of memory\n", stderr);
        return ANTNORM_STATUS_USAGE;
    }
    std::fputs(an_result_output(r.get()), stdout);
    const char* msg = an_result_message(r.get());
    if (msg[0] != '\0')
        std::fprintf(stderr, "antnorm: %s\n", msg);
    return an_result_status(r.get());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"norm-residue symbol matrices and class-group rank heuristics over the "
                 "anticyclotomic 2-tower"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags like --format may follow the subcommand
    app.set_help_flag("--help", "print help and exit"); // frees -h for chevalley's --h
    app.set_version_flag("--version", an_version());

    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")->capture_default_str();

    // ---- lemmas ----------------------------------------------------------
    auto* lemmas = app.add_subcommand(
        "lemmas", "verify factor-split identities and eigenvalue-matrix ranks over a grid");
    std::string lem_ell, lem_n;
    lemmas->add_option("--ell", lem_ell, "prime list/range, e.g. 3..997")->required();
    lemmas->add_option("--n", lem_n, "level list/range, e.g. 3..7")->required();

    // ---- all-or-nothing --------------------------------------------------
    auto* aon = app.add_subcommand(
        "all-or-nothing", "scan symbol assignments for the rank dichotomy (0 or full)");
    std::string aon_ell, aon_n, aon_case = "both";
    bool aon_exhaustive = false;
    uint64_t aon_samples = 0, aon_seed = 0, aon_budget = 0;
    aon->add_option("--ell", aon_ell, "prime list/range")->required();
    aon->add_option("--n", aon_n, "level list/range (levels >= 2)")->required();
    aon->add_option("--case", aon_case, "fixed, shifted or both")->capture_default_str();
    auto* exh = aon->add_flag("--exhaustive", aon_exhaustive, "enumerate every assignment");
    aon->add_option("--sampled", aon_samples, "draw N assignments instead of enumerating")
        ->excludes(exh);
    aon->add_option("--seed", aon_seed, "seed for sampled mode")->capture_default_str();
    aon->add_option("--budget", aon_budget,
                    "max rank computations for exhaustive mode (default 100000000)");

    // ---- predict ----------------------------------------------------------
    auto* predict =
        app.add_subcommand("predict", "exact rank distribution of the ambiguous class group");
    uint64_t pre_ell = 0;
    unsigned pre_t = 1, pre_s = 0;
    std::string pre_n;
    predict->add_option("--ell", pre_ell, "odd prime ell")->required();
    predict->add_option("--t", pre_t, "ramified prime count")->capture_default_str();
    predict->add_option("--s", pre_s, "count of ramified primes = 7 mod 8")
        ->capture_default_str();
    predict->add_option("--n", pre_n, "level list/range, e.g. 0..2")->required();

    // ---- compare -----------------------------------------------------------
    auto* compare =
        app.add_subcommand("compare", "predictions vs the embedded observed rank counts");
    int cmp_table = 0;
    compare->add_option("--table", cmp_table, "observed dataset id: 3 or 4")->required();

    // ---- simulate ----------------------------------------------------------
    auto* simulate =
        app.add_subcommand("simulate", "Monte Carlo rank distribution at a fixed seed");
    uint64_t sim_ell = 0, sim_samples = 0, sim_seed = 0;
    unsigned sim_t = 1, sim_s = 0, sim_n = 0;
    simulate->add_option("--ell", sim_ell, "odd prime ell")->required();
    simulate->add_option("--t", sim_t, "ramified prime count")->capture_default_str();
    simulate->add_option("--s", sim_s, "count of ramified primes = 7 mod 8")
        ->capture_default_str();
    simulate->add_option("--n", sim_n, "level")->required();
    simulate->add_option("--samples", sim_samples, "sample count")->required();
    simulate->add_option("--seed", sim_seed, "master seed")->capture_default_str();

    // ---- tail ---------------------------------------------------------------
    auto* tail = app.add_subcommand("tail", "stabilization series partial sum and tail bound");
    uint64_t tail_ell = 0;
    unsigned tail_t = 1, tail_N = 2, tail_terms = 1;
    tail->add_option("--ell", tail_ell, "odd prime ell")->required();
    tail->add_option("--t", tail_t, "ramified prime count")->capture_default_str();
    tail->add_option("--N", tail_N, "first level of the partial sum")->required();
    tail->add_option("--terms", tail_terms, "number of terms")->required();

    // ---- chevalley ------------------------------------------------------------
    auto* chevalley = app.add_subcommand("chevalley", "ambiguous class number from the formula");
    std::string che_h = "1";
    unsigned che_e = 0, che_E = 0;
    uint64_t che_ell = 0;
    chevalley->add_option("--ell", che_ell, "odd prime ell (the extension degree)")->required();
    chevalley->add_option("--h", che_h, "ell-part of the base class number (a power of ell)")
        ->capture_default_str();
    chevalley->add_option("--e-exp", che_e, "e(L/K) = ell^e-exp")->required();
    chevalley->add_option("--E-exp", che_E, "unit norm index E(L/K) = ell^E-exp")
        ->capture_default_str();

    // ---- iwasawa ----------------------------------------------------------------
    auto* iwasawa =
        app.add_subcommand("iwasawa", "growth-law compatibility of an exponent sequence");
    std::string iwa_e;
    uint64_t iwa_ell = 0;
    unsigned iwa_s = 0;
    iwasawa->add_option("--e", iwa_e, "exponent list e_0,e_1,..., e.g. 1,2,6")->required();
    iwasawa->add_option("--ell", iwa_ell, "tower prime")->required();
    iwasawa->add_option("--s", iwa_s, "ramified-prime count for the mu lower bound")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    const char* fmt = format.c_str();

    if (lemmas->parsed())
        return emit(ResultPtr(an_lemmas(lem_ell.c_str(), lem_n.c_str(), fmt)));
    if (aon->parsed()) {
        const bool sampled = aon->count("--sampled") > 0;
        if (!sampled && !aon_exhaustive) {
            std::fputs("antnorm: all-or-nothing needs --exhaustive or --sampled N\n", stderr);
            return ANTNORM_STATUS_USAGE;
        }
        return emit(ResultPtr(an_all_or_nothing(aon_ell.c_str(), aon_n.c_str(),
                                                aon_case.c_str(), sampled ? 1 : 0, aon_samples,
                                                aon_seed, aon_budget, fmt)));
    }
    if (predict->parsed())
        return emit(ResultPtr(an_predict(pre_ell, pre_t, pre_s, pre_n.c_str(), fmt)));
    if (compare->parsed())
        return emit(ResultPtr(an_compare(cmp_table, fmt)));
    if (simulate->parsed())
        return emit(
            ResultPtr(an_simulate(sim_ell, sim_t, sim_s, sim_n, sim_samples, sim_seed, fmt)));
    if (tail->parsed())
        return emit(ResultPtr(an_tail(tail_ell, tail_t, tail_N, tail_terms, fmt)));
    if (chevalley->parsed())
        return emit(ResultPtr(an_chevalley(che_h.c_str(), che_e, che_ell, che_E, fmt)));
    if (iwasawa->parsed())
        return emit(ResultPtr(an_iwasawa(iwa_e.c_str(), iwa_ell, iwa_s, fmt)));

    std::fputs("antnorm: no subcommand\n", stderr);
    return ANTNORM_STATUS_USAGE;
}
