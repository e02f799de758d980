#pragma once

#include "nhf/qext.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nhf {

// Complex scalar over the real field Q(sqrt2, sqrt3).
struct GaussQ {
    QExt re, im;

    GaussQ() = default;
    GaussQ(long long r) : re(r) {}
    GaussQ(QExt r) : re(std::move(r)) {}
    GaussQ(QExt r, QExt i) : re(std::move(r)), im(std::move(i)) {}
    static GaussQ I() { return GaussQ(QExt(0), QExt(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussQ conj() const { return GaussQ(re, -im); }

    GaussQ operator-() const { return GaussQ(-re, -im); }
    friend GaussQ operator+(const GaussQ& a, const GaussQ& b) {
        return GaussQ(a.re + b.re, a.im + b.im);
    }
    friend GaussQ operator-(const GaussQ& a, const GaussQ& b) {
        return GaussQ(a.re - b.re, a.im - b.im);
    }
    friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
        return GaussQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    GaussQ inverse() const {
        QExt n = re * re + im * im;
        QExt inv = n.inverse();
        return GaussQ(re * inv, -(im * inv));
    }
    friend GaussQ operator/(const GaussQ& a, const GaussQ& b) { return a * b.inverse(); }
    GaussQ& operator+=(const GaussQ& o) { return *this = *this + o; }
    GaussQ& operator-=(const GaussQ& o) { return *this = *this - o; }
    GaussQ& operator*=(const GaussQ& o) { return *this = *this * o; }
    friend bool operator==(const GaussQ& a, const GaussQ& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }

    std::string str() const;
};

// Dense square complex matrix with exact entries.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t n) : n_(n), a_(n * n) {}

    std::size_t size() const { return n_; }
    const GaussQ& at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
    GaussQ& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

    bool is_zero() const;
    bool is_anti_hermitian() const;

    CMatrix operator-() const;
    friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const GaussQ& s, const CMatrix& a);
    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    GaussQ trace() const;
    CMatrix conj_transpose() const;
    std::string str() const;

private:
    std::size_t n_ = 0;
    std::vector<GaussQ> a_;
};

CMatrix bracket(const CMatrix& x, const CMatrix& y);

// Bi-invariant pairing <X,Y> = -Re trace(XY); positive definite on compact
// algebras of anti-Hermitian matrices.
QExt minus_re_trace_prod(const CMatrix& x, const CMatrix& y);

// ---------------------------------------------------------------------------
// Exact linear algebra over the real span of matrices

// Coordinates of x in the real span of basis; nullopt when outside.
std::optional<std::vector<QExt>> expand_in_basis(const std::vector<CMatrix>& basis,
                                                 const CMatrix& x);

bool in_real_span(const std::vector<CMatrix>& basis, const CMatrix& x);

std::size_t real_span_rank(const std::vector<CMatrix>& mats);

// Basis of { X in span(space) : [c, X] = 0 for all c in commutants }.
std::vector<CMatrix> centralizer_in_span(const std::vector<CMatrix>& space,
                                         const std::vector<CMatrix>& commutants);

// Basis of { X in span(space) : <X, c> = 0 for all c in constraints }.
std::vector<CMatrix> orthogonal_in_span(const std::vector<CMatrix>& space,
                                        const std::vector<CMatrix>& constraints);

} // namespace nhf
