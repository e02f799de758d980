#include "nhf/qext.hpp"

#include <cmath>
#include <sstream>

namespace nhf {

QExt operator*(const QExt& a, const QExt& b) {
    const auto& x = a.c_;
    const auto& y = b.c_;
    Rational two(2), three(3), six(6);
    // Products of basis elements: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3,
    // sqrt3*sqrt6 = 3*sqrt2, sqrt6*sqrt6 = 6.
    Rational c1 = x[0] * y[0] + two * x[1] * y[1] + three * x[2] * y[2] + six * x[3] * y[3];
    Rational c2 = x[0] * y[1] + x[1] * y[0] + three * (x[2] * y[3] + x[3] * y[2]);
    Rational c3 = x[0] * y[2] + x[2] * y[0] + two * (x[1] * y[3] + x[3] * y[1]);
    Rational c6 = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
    return QExt(std::move(c1), std::move(c2), std::move(c3), std::move(c6));
}

namespace {

// Sign of a + b*sqrt2, exactly.
int sign_q2(const Rational& a, const Rational& b) {
    int sa = a.sign(), sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare |a| with |b*sqrt2| via squares.
    Rational d = a * a - Rational(2) * b * b;
    int sd = d.sign();
    return sd == 0 ? 0 : sa * sd;
}

} // namespace

int QExt::sign() const {
    // Write x = X + Y*sqrt3 with X = c1 + c2*sqrt2 and Y = c3 + c6*sqrt2.
    const Rational& x1 = c_[0];
    const Rational& x2 = c_[1];
    const Rational& y1 = c_[2];
    const Rational& y2 = c_[3];
    bool Y0 = y1.is_zero() && y2.is_zero();
    bool X0 = x1.is_zero() && x2.is_zero();
    if (Y0) return sign_q2(x1, x2);
    if (X0) return sign_q2(y1, y2);
    int sx = sign_q2(x1, x2);
    int sy = sign_q2(y1, y2);
    if (sx == sy) return sx;
    // sign(X + Y*sqrt3) = sign(X) * sign(X^2 - 3 Y^2) when X, Y have opposite signs.
    // X^2 - 3 Y^2 stays inside Q(sqrt2).
    Rational three(3), two(2);
    Rational p1 = x1 * x1 + two * x2 * x2 - three * (y1 * y1 + two * y2 * y2);
    Rational p2 = two * x1 * x2 - three * (two * y1 * y2);
    // p2 carries the sqrt2 coefficient of X^2 - 3 Y^2: (a+b*sqrt2)^2 = a^2+2b^2 + 2ab*sqrt2.
    int sd = sign_q2(p1, p2);
    return sd == 0 ? 0 : sx * sd;
}

QExt QExt::inverse() const {
    if (is_zero()) throw std::domain_error("QExt: inverse of zero");
    // Galois conjugates: s2 flips sqrt2 (and sqrt6), s3 flips sqrt3 (and sqrt6).
    QExt s2(c_[0], -c_[1], c_[2], -c_[3]);
    QExt s3(c_[0], c_[1], -c_[2], -c_[3]);
    QExt s23(c_[0], -c_[1], -c_[2], c_[3]);
    QExt prod = s2 * s3 * s23;
    QExt norm = *this * prod;
    if (!norm.is_rational() || norm.rational_part().is_zero())
        throw std::logic_error("QExt: field norm must be a nonzero rational");
    Rational inv_n = Rational(1) / norm.rational_part();
    return QExt(prod.c1() * inv_n, prod.c_sqrt2() * inv_n, prod.c_sqrt3() * inv_n,
                prod.c_sqrt6() * inv_n);
}

double QExt::to_double() const {
    static const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
    return c_[0].to_double() + c_[1].to_double() * s2 + c_[2].to_double() * s3 +
           c_[3].to_double() * s6;
}

std::string QExt::str() const {
    static const char* tag[4] = {"", "*r2", "*r3", "*r6"};
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (c_[i].is_zero()) continue;
        if (!first && c_[i].sign() > 0) os << "+";
        os << c_[i].str() << tag[i];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

int QExt::lex_compare(const QExt& a, const QExt& b) {
    for (int i = 0; i < 4; ++i) {
        if (a.c_[i] < b.c_[i]) return -1;
        if (b.c_[i] < a.c_[i]) return 1;
    }
    return 0;
}

std::optional<Int> as_integer(const QExt& x) {
    if (!x.is_rational() || !x.rational_part().is_integer()) return std::nullopt;
    return x.rational_part().num();
}

} // namespace nhf
