#pragma once

#include "nhf/corank_engine.hpp"
#include "nhf/equal_rank.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nhf {

// Embedded transcription of the classification tables the toolkit checks
// itself against. This is data: editing it changes diffs, never verdicts.
enum class ExpectedOutcome {
    Contradiction,    // the seed class must be refuted combinatorially
    Survivor,         // saturates; the derived h is in the admissible list
    SurvivorOracle,   // saturates; the matrix oracle must find no commuting pair
    ExcludedOracle,   // saturates; the matrix oracle must exhibit a flat splitting
};

struct CorankExpectedRow {
    std::string klass;          // seed class key
    ExpectedOutcome outcome;
    std::string h_type;         // canonical type string for survivors
    std::string k_type;         // canonical type of a proper k, when pinned
    std::string oracle;         // "so5-core" | "berger" | "sp3-endgame"
    std::string coset_names;    // display names of the resulting spaces
};

struct ExpectedTable {
    // g name -> canonical survivor type strings
    std::map<std::string, std::vector<std::string>> equal_rank;
    // g name -> per-class corank-one expectations
    std::map<std::string, std::vector<CorankExpectedRow>> corank_one;
    // display names for the equal-rank survivors
    std::map<std::string, std::string> survivor_names;  // "<g>|<h>" -> names
    std::vector<std::string> riemannian_forced;  // adjoint-orbit test must not fail
    std::vector<std::string> non_riemannian;     // adjoint-orbit test must fail
};

const ExpectedTable& expected_table();
std::string expected_table_json();  // the raw embedded document

// ---------------------------------------------------------------------------
// Reports

struct Diff {
    std::string where;
    std::string expected;
    std::string actual;
};

struct EqualRankSection {
    std::string g_name;
    std::vector<std::string> survivors;      // canonical type strings
    std::vector<std::string> survivor_names; // display names
    std::size_t candidates = 0;
};

struct CorankSection {
    std::string g_name;
    struct Row {
        std::string id, klass;
        std::string status;        // "contradiction" | "saturated"
        std::string rule;
        std::string h_type, k_type;
        std::string resolution;    // survivor names, oracle outcome, or ""
    };
    std::vector<Row> rows;
};

struct ConditionRSection {
    std::string space;
    bool fails = false;
    std::vector<std::string> independent_at;
    bool family_unverified = false;
};

struct VerifyReport {
    std::vector<EqualRankSection> equal_rank;
    std::vector<CorankSection> corank;
    std::vector<ConditionRSection> condition_r;
    std::vector<Diff> diffs;
    double elapsed_seconds = 0;

    bool ok() const { return diffs.empty(); }
    std::string to_json() const;      // deterministic serialization
    std::string to_markdown() const;  // per-case summary tables
};

struct VerifyOptions {
    int rank_cap_a = 4, rank_cap_b = 4, rank_cap_c = 4, rank_cap_d = 4;
    bool include_e = true;      // corank-one runs on the E series
    bool run_condition_r = true;
    bool run_finsler = false;   // optional numeric spot checks
};

VerifyReport verify_theorem1(const VerifyOptions& opt = {});

// Oracle resolution for one saturated corank row; returns the updated
// resolution string or a diff description on failure.
std::string resolve_oracle(const std::string& oracle, bool expect_excluded, bool& ok);

// JSON for a root system per the external interface.
std::string root_system_json(const RootSystem& rs);
std::string equal_rank_json(const EqualRankReport& report);
std::string corank_json(const CaseTable& table, bool with_traces);

// Parse "A", rank pairs and compound names like "A2+A1".
RootSystem parse_system(const std::string& type, int rank);

} // namespace nhf
