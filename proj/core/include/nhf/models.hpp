#pragma once

#include "nhf/charpoly.hpp"
#include "nhf/cmatrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nhf {

// Explicit compact matrix algebra g with a distinguished subalgebra h and the
// orthogonal complement m for the pairing <X,Y> = -Re tr(XY).
struct MatrixAlgebra {
    std::string name;
    std::size_t dim_ambient = 0;       // matrix size
    std::vector<CMatrix> g_basis;
    std::vector<CMatrix> h_basis;
    std::vector<CMatrix> m_basis;      // filled by finalize()

    std::size_t dim_g() const { return g_basis.size(); }
    std::size_t dim_h() const { return h_basis.size(); }
    std::size_t dim_m() const { return m_basis.size(); }
};

// Catalog of the spaces used for the non-Riemannian existence analysis.
// Supported names:
//   su(n)/su(n-1)           n >= 2
//   su(n)/s(u(n-1)u(1))     n >= 2
//   u(n)/u(n-1)             n >= 1
//   sp(n)/sp(n-1)           n >= 1
//   so(n)/so(n-1)           n >= 2
//   sp(2)/su(2)-berger
//   su(5)/sp(2)+R
//   su(3)/t
//   spin9-vt-family         (no h basis; only the v(t) data is used)
MatrixAlgebra build_model(const std::string& name);
std::vector<std::string> model_catalog();

// Oracle models for the corank-one endgames.
MatrixAlgebra build_so5_core_model();      // so(5) with so(3) on coordinates {1,4,5}
MatrixAlgebra build_sp3_endgame_model();   // sp(3) with su(2)_principal + sp(1)

// m = the orthogonal complement of h in g; throws when the pairing is
// degenerate on the span.
std::vector<CMatrix> orth_complement(const MatrixAlgebra& model);

// Exact centralizer of a set of elements inside g.
std::vector<CMatrix> centralizer(const MatrixAlgebra& model, const std::vector<CMatrix>& xs);

struct FlatWitness {
    CMatrix u, v;
    std::vector<CMatrix> s0_basis;  // center of the centralizer of {u, v}
    bool split_ok = false;          // s0 = (s0 cap h) + (s0 cap m)
    std::size_t dim_m_part = 0;
};

// Flat-splitting detection through a concrete commuting pair in m: s0 is the
// center of the centralizer (an intersection of Cartan subalgebras); a witness
// is returned iff s0 splits along h + m with at least a 2-dimensional m part.
std::optional<FlatWitness> flat_splitting_test(const MatrixAlgebra& model, const CMatrix& u,
                                               const CMatrix& v);

struct CommutingSearch {
    std::optional<std::pair<CMatrix, CMatrix>> pair;  // exact, verified
    double achieved_min = 0;  // smallest |[X,Y]|^2 over orthonormal pairs seen
};

// Exact plane-kernel search followed by numerical minimization of |[X,Y]|^2
// over orthonormal pairs in m; numeric candidates are rationalized and
// re-verified exactly before being returned.
CommutingSearch commuting_pair_search(const MatrixAlgebra& model, int starts = 24,
                                      unsigned seed = 12345);

// The one-parameter families v(t) in m used for the adjoint-orbit test.
CMatrix model_family_vt(const std::string& name, const Rational& t);

struct ConditionRReport {
    std::string space;
    std::vector<Rational> samples;
    std::vector<Rational> independent_at;  // t with seq(v(t)) independent of seq(v(0))
    bool fails_condition_r = false;
    bool family_unverified = false;  // v(t) membership in m taken as given data
};

ConditionRReport condition_r_report(const std::string& name, const std::vector<Rational>& ts);

// Random rational m-pairs all have proportional eigenvalue sequences?
bool random_m_pairs_dependent(const MatrixAlgebra& model, int count, unsigned seed);

} // namespace nhf
