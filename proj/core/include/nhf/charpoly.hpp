#pragma once

#include "nhf/cmatrix.hpp"
#include "nhf/rational.hpp"

#include <vector>

namespace nhf {

// Real polynomial over Q(sqrt2,sqrt3); coefficient of x^k at index k.
using Poly = std::vector<QExt>;

Poly poly_trim(Poly p);
Poly poly_derivative(const Poly& p);
QExt poly_eval(const Poly& p, const Rational& x);
// quotient and remainder over the field
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd_monic(Poly a, Poly b);

// p = prod_i f_i^i with the f_i squarefree and pairwise coprime (Yun).
std::vector<Poly> squarefree_decomposition(const Poly& p);

struct IsolatedRoot {
    Rational lo, hi;   // isolating interval, possibly degenerate
    int multiplicity = 1;
    double approx = 0; // midpoint after refinement below tol
};

// All real roots of p with multiplicity, pairwise disjoint intervals,
// refined until their width is below tol; sorted ascending.
std::vector<IsolatedRoot> isolate_real_roots(const Poly& p, double tol = 1e-12);

// Characteristic polynomial of the Hermitian matrix -i X for anti-Hermitian X
// (monic, real coefficients); its roots are the imaginary parts of the
// eigenvalues of X.
Poly charpoly_of_anti_hermitian(const CMatrix& x);

struct EigenSeq {
    Poly charpoly;                    // exact, of -iX
    std::vector<IsolatedRoot> roots;  // ascending, with multiplicity
    std::vector<double> values() const;  // multiplicity expanded, ascending
};

EigenSeq eigenvalue_sequence(const CMatrix& x);

// Exact proportionality test of the eigenvalue multisets of two
// anti-Hermitian matrices of equal size: true iff spec(Y) = c spec(X) for
// some real c != 0 (or one of them vanishes). Decided on characteristic
// polynomial coefficients, no numerics.
bool seq_dependent(const CMatrix& x, const CMatrix& y);

} // namespace nhf
