#pragma once

#include "nhf/qext.hpp"

#include <cstddef>
#include <vector>

namespace nhf {

// Vector with QExt coordinates in a fixed ambient dimension.
class ExactVector {
public:
    ExactVector() = default;
    explicit ExactVector(std::size_t dim) : coords_(dim) {}
    explicit ExactVector(std::vector<QExt> coords) : coords_(std::move(coords)) {}

    std::size_t dim() const { return coords_.size(); }
    const QExt& operator[](std::size_t i) const { return coords_[i]; }
    QExt& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<QExt>& coords() const { return coords_; }

    bool is_zero() const;

    ExactVector operator-() const;
    friend ExactVector operator+(const ExactVector& a, const ExactVector& b);
    friend ExactVector operator-(const ExactVector& a, const ExactVector& b);
    friend ExactVector operator*(const QExt& s, const ExactVector& v);
    friend bool operator==(const ExactVector& a, const ExactVector& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const ExactVector& a, const ExactVector& b) { return !(a == b); }

    // Lexicographic order on coordinates (canonical container order).
    friend bool operator<(const ExactVector& a, const ExactVector& b);

    std::string str() const;

private:
    std::vector<QExt> coords_;
};

// Standard coordinate inner product; throws on dimension mismatch.
QExt inner(const ExactVector& u, const ExactVector& v);

QExt norm_sq(const ExactVector& v);

// v with the u-component removed: v - ((v,u)/(u,u)) u.
ExactVector project_off(const ExactVector& v, const ExactVector& u);

// Reflection of v in the hyperplane orthogonal to alpha.
ExactVector reflect_vector(const ExactVector& alpha, const ExactVector& v);

// true iff u = c*v for some scalar c (v != 0).
bool proportional(const ExactVector& u, const ExactVector& v);

struct CartanPair {
    QExt n1;          // 2(l,m)/(m,m)
    QExt n2;          // 2(l,m)/(l,l)
    bool compatible;  // both integers with product in {0,1,2,3}, or l = +-m
};

// Crystallographic compatibility of a candidate pair of root vectors.
CartanPair cartan_pair(const ExactVector& lambda, const ExactVector& mu);

// Sign-canonical representative of {v, -v}: first nonzero coordinate positive.
ExactVector plane_canonical(const ExactVector& v);

} // namespace nhf
