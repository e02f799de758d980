#pragma once

#include "nhf/rational.hpp"

#include <array>
#include <optional>
#include <string>

namespace nhf {

// Element of Q(sqrt2, sqrt3) stored on the basis (1, sqrt2, sqrt3, sqrt6).
// The four basis elements are linearly independent over Q, so the
// representation is unique and equality is coefficient-wise.
class QExt {
public:
    QExt() = default;
    QExt(long long n) : c_{Rational(n), Rational(), Rational(), Rational()} {}
    QExt(Rational r) : c_{std::move(r), Rational(), Rational(), Rational()} {}
    QExt(Rational c1, Rational c2, Rational c3, Rational c6)
        : c_{std::move(c1), std::move(c2), std::move(c3), std::move(c6)} {}

    static QExt sqrt2() { return QExt(Rational(0), Rational(1), Rational(0), Rational(0)); }
    static QExt sqrt3() { return QExt(Rational(0), Rational(0), Rational(1), Rational(0)); }
    static QExt sqrt6() { return QExt(Rational(0), Rational(0), Rational(0), Rational(1)); }
    static QExt half() { return QExt(Rational::of(1, 2)); }

    const Rational& c1() const { return c_[0]; }
    const Rational& c_sqrt2() const { return c_[1]; }
    const Rational& c_sqrt3() const { return c_[2]; }
    const Rational& c_sqrt6() const { return c_[3]; }

    bool is_zero() const {
        return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    bool is_rational() const {
        return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
    }
    // Valid only when is_rational().
    const Rational& rational_part() const { return c_[0]; }

    QExt operator-() const { return QExt(-c_[0], -c_[1], -c_[2], -c_[3]); }

    friend QExt operator+(const QExt& a, const QExt& b) {
        return QExt(a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]);
    }
    friend QExt operator-(const QExt& a, const QExt& b) {
        return QExt(a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]);
    }
    friend QExt operator*(const QExt& a, const QExt& b);
    friend QExt operator/(const QExt& a, const QExt& b) { return a * b.inverse(); }

    QExt& operator+=(const QExt& o) { return *this = *this + o; }
    QExt& operator-=(const QExt& o) { return *this = *this - o; }
    QExt& operator*=(const QExt& o) { return *this = *this * o; }

    friend bool operator==(const QExt& a, const QExt& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QExt& a, const QExt& b) { return !(a == b); }

    // Exact sign, decided algebraically by the two-level conjugate tower
    // over Q(sqrt2); never consults floating point.
    int sign() const;

    QExt inverse() const;

    double to_double() const;
    std::string str() const;

    // Total order induced by the real embedding.
    friend bool operator<(const QExt& a, const QExt& b) { return (a - b).sign() < 0; }
    friend bool operator>(const QExt& a, const QExt& b) { return b < a; }
    friend bool operator<=(const QExt& a, const QExt& b) { return !(b < a); }
    friend bool operator>=(const QExt& a, const QExt& b) { return !(a < b); }

    // Lexicographic key on coefficients; used only for canonical container order.
    static int lex_compare(const QExt& a, const QExt& b);

private:
    std::array<Rational, 4> c_{};
};

inline QExt abs(const QExt& x) { return x.sign() < 0 ? -x : x; }

// Exact integrality test: x is an integer iff it is rational with denominator 1.
std::optional<Int> as_integer(const QExt& x);

} // namespace nhf
