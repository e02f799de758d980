#pragma once

#include "nhf/root_system.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nhf {

// Full-rank candidate subalgebra h inside g, described at the root level:
// h gets a closed symmetric subset of the root planes, m the complement.
struct EqualRankCandidate {
    const RootSystem* rs = nullptr;
    std::vector<int> h_planes;  // sorted, closed
    std::vector<int> m_planes;  // complement, sorted
    TypeDecomp h_type;
    std::string signature;
};

EqualRankCandidate make_candidate(const RootSystem& rs, const std::vector<int>& h_planes);

struct Verdict {
    enum class Status { Pass, Fail } status = Status::Pass;
    std::string failing_rule;                       // set when Fail
    std::vector<ExactVector> witness;               // roots backing a Fail

    bool pass() const { return status == Status::Pass; }
    static Verdict ok() { return Verdict{}; }
    static Verdict fail(std::string rule, std::vector<ExactVector> w) {
        return Verdict{Status::Fail, std::move(rule), std::move(w)};
    }
};

// Fail iff some pair of m-roots a != +-b has neither a+b nor a-b a root of g.
Verdict commuting_pair_filter(const EqualRankCandidate& cand);

// Fail iff some pair of m-roots at angle pi/3 or 2pi/3, outside any G2 factor
// of g, has neither a+b nor a-b a root of h.
Verdict acute_pair_filter(const EqualRankCandidate& cand);

// Symmetric-pair filter: when every bracket of m-root planes lands in h the
// pair (g,h) is symmetric; it is then admissible only if m carries no
// commuting plane pair and (g,h) is one of the rank-one symmetric pairs.
Verdict symmetric_excess_rank(const EqualRankCandidate& cand);

// Pre-filter for reducible g: m-roots spread over two simple factors are
// immediately inadmissible.
Verdict factor_spread(const EqualRankCandidate& cand);

struct EqualRankResult {
    EqualRankCandidate candidate;
    Verdict verdict;
};

struct EqualRankReport {
    std::string g_name;
    std::vector<EqualRankResult> results;   // deterministic order
    std::shared_ptr<const RootSystem> owned;  // keeps candidate back-pointers valid
    std::vector<TypeDecomp> survivors() const;
};

EqualRankReport classify_equal_rank(const RootSystem& rs, int rank_cap = 8,
                                    double budget_seconds = 0);
EqualRankReport classify_equal_rank(TypeLabel type, int rank, int rank_cap = 8,
                                    double budget_seconds = 0);

// The rank-one symmetric pairs admissible for the symmetric filter.
bool in_rank_one_symmetric_table(const RootSystem& rs, const TypeDecomp& h_type);

// Equal-rank survivor types of a simple g, as classified here; used by the
// corank-one engine both for Case I seeds and for subalgebra reduction.
std::vector<TypeDecomp> equal_rank_survivor_types(TypeLabel type, int rank);

} // namespace nhf
