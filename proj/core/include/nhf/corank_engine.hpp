#pragma once

#include "nhf/equal_rank.hpp"
#include "nhf/root_system.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nhf {

// Seeds for the corank-one analysis (rk H = rk G - 1). Case I: every root
// plane of h is a g-plane, h = k minus a central torus direction z of k.
// Cases II/III: a root pair (a, b), pr(a) = pr(b) =: a' nonzero, where pr is
// the projection along z ~ a - b; Case II across two simple factors, Case III
// inside one.
enum class SeedKind { CaseI, CaseII, CaseIII };

struct CorankSeed {
    SeedKind kind = SeedKind::CaseIII;
    ExactVector alpha, beta;       // Cases II/III
    ExactVector z;                 // direction of t cap m
    std::vector<int> k_planes;     // Case I: planes of k
    TypeDecomp k_type;             // Case I
    std::string id;                // stable identifier, e.g. "F4:c2"
    std::string klass;             // class key (see seed_class_key)
    std::string signature;         // full dedup signature
};

enum class PlaneLabel { U, H, M };

struct HRootInfo {
    std::vector<int> carrier;  // all planes whose projection is +-lambda
    bool diagonal = false;     // known to spread across >= 2 carrier planes
};

struct TraceStep {
    std::string rule;
    std::string detail;
};

struct CaseState {
    const RootSystem* rs = nullptr;
    CorankSeed seed;
    ExactVector alpha_prime;                  // canonical seed root of h (II/III)
    std::vector<PlaneLabel> label;            // per plane
    std::map<ExactVector, HRootInfo> h_roots; // canonical projection -> info
    std::set<ExactVector> eliminated;         // canonical projections ruled out
    std::map<ExactVector, std::vector<int>> carrier_of;  // all nonzero projections
    std::vector<TraceStep> trace;

    ExactVector pr(const ExactVector& v) const { return project_off(v, seed.z); }
};

struct CaseVerdict {
    enum class Status { Contradiction, Saturated } status = Status::Saturated;
    std::string rule;     // rule that closed the case (Contradiction) or ""
    std::string witness;  // human-readable witness description
    TypeDecomp derived_h_type;  // Saturated only
    bool k_proper = false;      // a proper k was identified
    TypeDecomp k_type;          // valid when k_proper
    std::vector<TraceStep> trace;
};

// Rule identifiers used in verdicts and traces:
//   orth_torus_root   roots orthogonal to z must be roots of h
//   axis_plane        planes parallel to z lie in m
//   crystal_elim      projection incompatible with an established h-root
//   acute_pair        pi/3-2pi/3 m-pair with both candidate projections dead
//   bracket_transport ad(v)-transport along a fully-h plane
//   flat_split        commuting m-plane pair whose Cartan intersection splits
//   orth_m_plane      m-plane orthogonal to z
//   carrier_collapse  seed carrier reduced to a single plane
//   proportional      two proportional h-roots with ratio != +-1
//   factor_commute    Case II: factor planes not commuting with the seed plane
//   reduction         h + t generates a proper subalgebra of the wrong type
//   seed_angle        Case III seed pair at angle pi/3 or 2pi/3 outside G2

std::string seed_class_key(const RootSystem& rs, const ExactVector& a, const ExactVector& b);
std::string seed_signature(const RootSystem& rs, const ExactVector& a, const ExactVector& b);

// One representative per signature class of root pairs {a, b}, a != +-b,
// plus Case I seeds from the equal-rank survivors with central directions.
// On reducible systems only cross-factor (Case II) pairs are enumerated;
// in-factor seeds reduce to the simple-factor runs.
std::vector<CorankSeed> enumerate_seeds(const RootSystem& rs);

CaseState init_case(const RootSystem& rs, const CorankSeed& seed);

// Rule application order; permutable for the order-independence check.
struct SaturateOptions {
    std::vector<int> rule_order;  // permutation of 0..N-1; empty = default
};

CaseVerdict saturate(CaseState& state, const SaturateOptions& opt = {});

struct CaseRow {
    CorankSeed seed;
    CaseVerdict verdict;
};

struct CaseTable {
    std::string g_name;
    std::vector<CaseRow> rows;
};

CaseTable run_corank_one(const RootSystem& rs, int rank_cap = 8);
CaseTable run_corank_one(TypeLabel type, int rank, int rank_cap = 8);

} // namespace nhf
