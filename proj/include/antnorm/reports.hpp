#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "antnorm/dichotomy.hpp"
#include "antnorm/heuristics.hpp"

namespace antnorm {

// ---------------------------------------------------------------------------
// Deterministic rendering helpers. All decimals are produced by exact
// integer arithmetic (round half away from zero to four places), so output
// is byte-stable across platforms and runs.
// ---------------------------------------------------------------------------

/// "0.6667", "1.0000", ...
std::string decimal4(const Rational& q);

/// "2/3 (0.6667)", "1 (1.0000)", ...
std::string rational_cell(const Rational& q);

/// Parses "3", "3,5,11", "3..13" and combinations, ascending order required
/// per token; duplicates removed.
std::vector<uint64_t> parse_spec_list(const std::string& spec, const char* flag);

/// Parses "2/3", "1", "0.5", ".6665" into an exact rational.
Rational parse_rational(const std::string& s);

// ---------------------------------------------------------------------------
// JSON serialization. Schemas are stable; parse(serialize(x)) == x.
// ---------------------------------------------------------------------------

nlohmann::ordered_json report_to_json(const DichotomyReport& r);
DichotomyReport report_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json distribution_to_json(const RamificationProfile& profile, unsigned n,
                                            const RankDistribution& dist);
/// Returns (profile, n, distribution).
std::tuple<RamificationProfile, unsigned, RankDistribution>
distribution_from_json(const nlohmann::ordered_json& j);

// ---------------------------------------------------------------------------
// Embedded reference datasets (predictions and observed class-group rank
// counts). One copy of the numbers lives in data/tables.json and is compiled
// into the library.
// ---------------------------------------------------------------------------

struct ObservedRow {
    unsigned n = 0;
    uint64_t fields = 0;
    std::vector<uint64_t> counts;     // by rank, from rank 0
    std::vector<std::string> printed; // proportions as originally published
};

struct PredictedRow {
    unsigned n = 0;
    std::vector<Rational> probs; // by rank, from rank 0
};

struct FixtureTable {
    std::string id; // "table1" .. "table4"
    RamificationProfile profile{3, 1, 1};
    std::string description;
    std::vector<PredictedRow> predicted; // table1/table2
    std::vector<ObservedRow> observed;   // table3/table4
};

/// table_id in 1..4.
const FixtureTable& fixture_table(int table_id);

/// Raw embedded fixture text (the contents of data/tables.json).
const char* fixture_json_text();

// ---------------------------------------------------------------------------
// Command layer: every CLI subcommand is a pure function from flags to a
// (status, output, message) triple. Status values match the process exit
// codes: 0 ok, 1 verification failure, 2 usage or resource error.
// ---------------------------------------------------------------------------

struct CommandResult {
    int status = 0;
    std::string output;  // rendered text or JSON, newline-terminated
    std::string message; // diagnostics for stderr, "" if none
};

enum class OutputFormat { Text, Json };
OutputFormat parse_format(const std::string& s);

struct CaseSelection {
    bool fixed = false;
    bool shifted = false;
};
CaseSelection parse_case_selection(const std::string& s);

CommandResult cmd_lemmas(const std::string& ell_spec, const std::string& n_spec,
                         OutputFormat format);

CommandResult cmd_all_or_nothing(const std::string& ell_spec, const std::string& n_spec,
                                 const std::string& case_spec, bool sampled, uint64_t samples,
                                 uint64_t seed, uint64_t budget, OutputFormat format);

CommandResult cmd_predict(uint64_t ell, unsigned t, unsigned s, const std::string& n_spec,
                          OutputFormat format);

CommandResult cmd_compare(int table_id, OutputFormat format);

CommandResult cmd_simulate(uint64_t ell, unsigned t, unsigned s, unsigned n, uint64_t samples,
                           uint64_t seed, OutputFormat format);

CommandResult cmd_tail(uint64_t ell, unsigned t, unsigned start_level, unsigned terms,
                       OutputFormat format);

CommandResult cmd_chevalley(const std::string& h, unsigned e_exp, uint64_t ell,
                            unsigned unit_index_exp, OutputFormat format);

CommandResult cmd_iwasawa(const std::string& e_list, uint64_t ell, unsigned s,
                          OutputFormat format);

} // namespace antnorm
