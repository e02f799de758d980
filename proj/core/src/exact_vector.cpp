#include "nhf/exact_vector.hpp"

#include <sstream>
#include <stdexcept>

namespace nhf {

bool ExactVector::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

ExactVector ExactVector::operator-() const {
    std::vector<QExt> out;
    out.reserve(coords_.size());
    for (const auto& c : coords_) out.push_back(-c);
    return ExactVector(std::move(out));
}

ExactVector operator+(const ExactVector& a, const ExactVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("ExactVector: dimension mismatch");
    std::vector<QExt> out;
    out.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a[i] + b[i]);
    return ExactVector(std::move(out));
}

ExactVector operator-(const ExactVector& a, const ExactVector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("ExactVector: dimension mismatch");
    std::vector<QExt> out;
    out.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(a[i] - b[i]);
    return ExactVector(std::move(out));
}

ExactVector operator*(const QExt& s, const ExactVector& v) {
    std::vector<QExt> out;
    out.reserve(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(s * v[i]);
    return ExactVector(std::move(out));
}

bool operator<(const ExactVector& a, const ExactVector& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        int c = QExt::lex_compare(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string ExactVector::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ",";
        os << coords_[i].str();
    }
    os << ")";
    return os.str();
}

QExt inner(const ExactVector& u, const ExactVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("inner: dimension mismatch");
    QExt s;
    for (std::size_t i = 0; i < u.dim(); ++i) s += u[i] * v[i];
    return s;
}

QExt norm_sq(const ExactVector& v) { return inner(v, v); }

ExactVector project_off(const ExactVector& v, const ExactVector& u) {
    QExt uu = norm_sq(u);
    if (uu.is_zero()) throw std::invalid_argument("project_off: zero direction");
    QExt c = inner(v, u) / uu;
    return v - (c * u);
}

ExactVector reflect_vector(const ExactVector& alpha, const ExactVector& v) {
    QExt aa = norm_sq(alpha);
    if (aa.is_zero()) throw std::invalid_argument("reflect: zero root");
    QExt c = (QExt(2) * inner(v, alpha)) / aa;
    return v - (c * alpha);
}

bool proportional(const ExactVector& u, const ExactVector& v) {
    if (u.dim() != v.dim() || v.is_zero()) return false;
    // u = c v with c = (u,v)/(v,v) iff u - c v = 0.
    QExt c = inner(u, v) / norm_sq(v);
    return (u - (c * v)).is_zero();
}

CartanPair cartan_pair(const ExactVector& lambda, const ExactVector& mu) {
    if (lambda.is_zero() || mu.is_zero())
        throw std::invalid_argument("cartan_pair: zero vector");
    QExt two(2);
    QExt lm = inner(lambda, mu);
    QExt n1 = two * lm / norm_sq(mu);
    QExt n2 = two * lm / norm_sq(lambda);
    CartanPair out{n1, n2, false};
    if (lambda == mu || lambda == -mu) {
        out.compatible = true;
        return out;
    }
    auto i1 = as_integer(n1);
    auto i2 = as_integer(n2);
    if (i1 && i2) {
        Int p = (*i1) * (*i2);
        out.compatible = (p >= 0 && p <= 3);
    }
    return out;
}

ExactVector plane_canonical(const ExactVector& v) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
        int s = v[i].sign();
        if (s > 0) return v;
        if (s < 0) return -v;
    }
    return v;
}

} // namespace nhf
