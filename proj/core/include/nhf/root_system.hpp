#pragma once

#include "nhf/exact_vector.hpp"
#include "nhf/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace nhf {

enum class TypeLabel { A, B, C, D, E, F, G };

std::string type_name(TypeLabel t);

struct Factor {
    TypeLabel type;
    int rank;
    friend bool operator==(const Factor&, const Factor&) = default;
    friend bool operator<(const Factor& a, const Factor& b) {
        return a.type != b.type ? a.type < b.type : a.rank < b.rank;
    }
    std::string str() const { return type_name(type) + std::to_string(rank); }
};

// Finite reduced root system in the coordinate presentation used throughout:
//   A_n in R^{n+1}:  +-(e_i - e_j)
//   B_n in R^n:      +-e_i, +-e_i +- e_j
//   C_n in R^n:      +-2e_i, +-e_i +- e_j
//   D_n in R^n:      +-e_i +- e_j
//   G_2 in R^2:      (+-sqrt3, 0), (+-sqrt3/2, +-3/2), (0, +-1), (+-sqrt3/2, +-1/2)
//   F_4 in R^4:      +-e_i, +-e_i +- e_j, (+-e1 +- e2 +- e3 +- e4)/2
//   E_6 in R^6:      +-e_i +- e_j (i<j<=5), (+-e1...+-e5)/2 + (sqrt3/2) t e6,
//                    the number of plus signs odd exactly when t = +1
//   E_7 in R^7:      +-e_i +- e_j (i<j<=6), +-sqrt2 e7,
//                    (+-e1...+-e6)/2 +- (sqrt2/2) e7 with an even number of +1/2's
//   E_8 in R^8:      +-e_i +- e_j, (+-e1...+-e8)/2 with an even number of plus signs
// Direct sums are built by ambient concatenation.
class RootSystem {
public:
    std::vector<Factor> factors;
    std::size_t ambient_dim = 0;
    std::vector<ExactVector> roots;  // sorted, closed under negation
    std::vector<int> factor_of_root;

    // Root planes {+-v}, indexed by the sign-canonical representative.
    std::vector<ExactVector> plane_reps;  // sorted
    std::vector<int> plane_of_root;
    std::vector<int> factor_of_plane;

    std::size_t rank() const;

    int index_of_root(const ExactVector& v) const;  // -1 when absent
    bool is_root(const ExactVector& v) const { return index_of_root(v) >= 0; }
    int plane_index(const ExactVector& v) const;    // -1 when absent

    // Rational inner product of plane representatives i, j.
    const Rational& gram(int i, int j) const { return gram_[i][j]; }
    const Rational& plane_len_sq(int i) const { return gram_[i][i]; }

    std::string name() const;

    static RootSystem build(TypeLabel type, int rank);
    static RootSystem direct_sum(const RootSystem& a, const RootSystem& b);

private:
    std::vector<std::vector<Rational>> gram_;
    void finish();  // sorts, indexes planes, fills gram
};

enum class SumDiff { both, sum_only, diff_only, neither };

// Which of a+b, a-b are roots of rs; requires a, b roots with a != +-b.
SumDiff sum_diff_status(const RootSystem& rs, const ExactVector& a, const ExactVector& b);

struct AngleClass {
    Rational four_cos_sq;  // 4 (a,b)^2 / (|a|^2 |b|^2)
    Rational len_ratio_sq; // |a|^2 / |b|^2
};

AngleClass angle_class(const ExactVector& a, const ExactVector& b);

// Reflection of v in the root alpha of rs; maps roots to roots.
ExactVector reflect(const RootSystem& rs, const ExactVector& alpha, const ExactVector& v);

// ---------------------------------------------------------------------------
// Subset classification

struct TypeDecomp {
    std::vector<Factor> factors;  // canonicalized (C2 -> B2, D3 -> A3, ...), sorted
    int torus_corank = 0;         // ambient rank not covered by the factors

    std::string str() const;
    friend bool operator==(const TypeDecomp&, const TypeDecomp&) = default;
    friend bool operator<(const TypeDecomp& a, const TypeDecomp& b) {
        return a.factors != b.factors ? a.factors < b.factors
                                      : a.torus_corank < b.torus_corank;
    }
};

// Normalization of the low-rank coincidences B1=C1=A1, C2=B2, D2=A1+A1, D3=A3.
std::vector<Factor> canonical_factors(const std::vector<Factor>& fs);

// Identify the Cartan type of a symmetric set of root vectors; ambient_rank
// is the rank of the enclosing system (for the torus corank). Throws if the
// set is not symmetric or not itself a root system.
TypeDecomp identify_type(const std::vector<ExactVector>& symmetric_roots,
                         std::size_t ambient_rank);

// Convenience overload for a subset of rs given by plane indices.
TypeDecomp identify_type(const RootSystem& rs, const std::vector<int>& planes);

// Rank of the span of a set of vectors, exactly.
std::size_t exact_rank(const std::vector<ExactVector>& vs);

// Isometry-invariant fingerprint of a plane subset (cardinality, length
// multiset, pair angle classes, identified decomposition when available).
std::string subset_signature(const RootSystem& rs, const std::vector<int>& planes);

// ---------------------------------------------------------------------------
// Closed subsystem enumeration

struct ClosedSubsystem {
    std::vector<int> planes;  // sorted plane indices into rs
    TypeDecomp type;
    std::string signature;
};

// All symmetric closed subsets of rs up to signature equivalence, including
// the empty set (torus) and rs itself. Enumerated by recursive extended-diagram
// node deletion plus Levi node deletion; rank capped. A positive budget bounds
// the wall time (seconds) and aborts with an exception when exceeded.
std::vector<ClosedSubsystem> closed_subsystems(const RootSystem& rs, int rank_cap = 8,
                                               double budget_seconds = 0);

// Exhaustive reference enumeration over all symmetric subsets; practical only
// for systems with at most ~16 planes.
std::vector<ClosedSubsystem> closed_subsystems_brute(const RootSystem& rs);

// Closure of a symmetric plane set under root addition.
std::vector<int> close_planes(const RootSystem& rs, std::vector<int> planes);

bool planes_closed(const RootSystem& rs, const std::vector<int>& planes);

} // namespace nhf
