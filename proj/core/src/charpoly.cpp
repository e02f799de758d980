#include "nhf/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nhf {

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(QExt(static_cast<long long>(k)) * p[k]);
    return poly_trim(std::move(d));
}

QExt poly_eval(const Poly& p, const Rational& x) {
    QExt acc;
    QExt qx{x};
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * qx + p[k];
    return acc;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    Poly r = poly_trim(a), d = poly_trim(b);
    if (d.empty()) throw std::domain_error("poly_divmod: division by zero polynomial");
    Poly q(r.size() > d.size() - 1 ? r.size() - d.size() + 1 : 0);
    QExt lead_inv = d.back().inverse();
    while (r.size() >= d.size() && !r.empty()) {
        QExt f = r.back() * lead_inv;
        std::size_t shift = r.size() - d.size();
        q[shift] = f;
        for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
        r = poly_trim(std::move(r));
    }
    return {poly_trim(std::move(q)), std::move(r)};
}

Poly poly_gcd_monic(Poly a, Poly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        QExt inv = a.back().inverse();
        for (auto& c : a) c *= inv;
    }
    return a;
}

namespace {

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly d(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < d.size(); ++i) {
        QExt v;
        if (i < a.size()) v += a[i];
        if (i < b.size()) v -= b[i];
        d[i] = v;
    }
    return poly_trim(std::move(d));
}

} // namespace

std::vector<Poly> squarefree_decomposition(const Poly& p0) {
    // Yun's algorithm; returns f_1, f_2, ... with p = prod f_i^i (up to scale).
    Poly p = poly_trim(p0);
    std::vector<Poly> out;
    if (p.size() <= 1) return out;
    Poly dp = poly_derivative(p);
    Poly a = poly_gcd_monic(p, dp);
    Poly b = poly_divmod(p, a).first;
    Poly c = poly_divmod(dp, a).first;
    Poly d = poly_sub(c, poly_derivative(b));
    while (true) {
        Poly f = poly_gcd_monic(b, d);
        out.push_back(f);
        b = poly_divmod(b, f).first;
        if (b.size() <= 1) break;
        c = poly_divmod(d, f).first;
        d = poly_sub(c, poly_derivative(b));
    }
    return out;
}

namespace {

int sign_at(const Poly& p, const Rational& x) { return poly_eval(p, x).sign(); }

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(poly_trim(p));
    chain.push_back(poly_derivative(p));
    while (!chain.back().empty() && chain.back().size() > 1) {
        Poly r = poly_divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    return chain;
}

int variations(const std::vector<Poly>& chain, const Rational& x) {
    int count = 0, last = 0;
    for (const auto& p : chain) {
        if (p.empty()) continue;
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

Rational cauchy_bound(const Poly& p) {
    // 1 + max |a_i| / |a_n| with a crude rational over-approximation
    double lead = std::abs(p.back().to_double());
    double mx = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        mx = std::max(mx, std::abs(p[i].to_double()));
    double bound = 2.0 + 2.0 * mx / lead;
    long long b = static_cast<long long>(bound) + 2;
    return Rational(b);
}

// roots of a squarefree polynomial
std::vector<IsolatedRoot> isolate_squarefree(const Poly& p, double tol) {
    std::vector<IsolatedRoot> out;
    Poly q = poly_trim(p);
    if (q.size() <= 1) return out;
    auto chain = sturm_chain(q);
    Rational B = cauchy_bound(q);
    struct Seg {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Seg> work{{-B, B, variations(chain, -B), variations(chain, B)}};
    std::vector<std::pair<Rational, Rational>> intervals;
    std::vector<Rational> exact;
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        int nroots = s.vlo - s.vhi;
        if (nroots <= 0) continue;
        if (nroots == 1) {
            intervals.emplace_back(s.lo, s.hi);
            continue;
        }
        Rational mid = (s.lo + s.hi) * Rational::of(1, 2);
        if (sign_at(q, mid) == 0) {
            exact.push_back(mid);
            // perturb the split point off the root
            Rational eps = (s.hi - s.lo) * Rational::of(1, 1024);
            Rational lo2 = mid - eps, hi2 = mid + eps;
            work.push_back({s.lo, lo2, s.vlo, variations(chain, lo2)});
            work.push_back({hi2, s.hi, variations(chain, hi2), s.vhi});
        } else {
            int vm = variations(chain, mid);
            work.push_back({s.lo, mid, s.vlo, vm});
            work.push_back({mid, s.hi, vm, s.vhi});
        }
    }
    // refine each isolating interval by bisection
    for (auto& [lo, hi] : intervals) {
        int slo = sign_at(q, lo);
        while ((hi - lo).to_double() > tol) {
            Rational mid = (lo + hi) * Rational::of(1, 2);
            int sm = sign_at(q, mid);
            if (sm == 0) {
                lo = hi = mid;
                break;
            }
            if (sm == slo)
                lo = mid;
            else
                hi = mid;
        }
        IsolatedRoot r;
        r.lo = lo;
        r.hi = hi;
        r.approx = ((lo + hi) * Rational::of(1, 2)).to_double();
        out.push_back(std::move(r));
    }
    for (const auto& x : exact) {
        IsolatedRoot r;
        r.lo = r.hi = x;
        r.approx = x.to_double();
        out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.approx < b.approx; });
    return out;
}

} // namespace

std::vector<IsolatedRoot> isolate_real_roots(const Poly& p, double tol) {
    std::vector<IsolatedRoot> out;
    auto factors = squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        for (auto r : isolate_squarefree(factors[i], tol)) {
            r.multiplicity = static_cast<int>(i) + 1;
            out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.approx < b.approx; });
    return out;
}

Poly charpoly_of_anti_hermitian(const CMatrix& x) {
    if (!x.is_anti_hermitian())
        throw std::invalid_argument("charpoly: matrix must be anti-Hermitian");
    std::size_t n = x.size();
    // H = -i X, Hermitian
    CMatrix h(n);
    GaussQ mi(QExt(0), QExt(-1));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) h.at(r, c) = mi * x.at(r, c);

    // Faddeev-LeVerrier: det(tI - H) = t^n + a_{n-1} t^{n-1} + ... + a_0
    std::vector<GaussQ> a(n);
    CMatrix N(n);
    for (std::size_t i = 0; i < n; ++i) N.at(i, i) = GaussQ(1);
    CMatrix M = N;
    for (std::size_t k = 1; k <= n; ++k) {
        CMatrix HM = h * M;
        GaussQ tr = HM.trace();
        QExt coef = -(tr.re / QExt(static_cast<long long>(k)));
        QExt coef_im = tr.im;
        if (!coef_im.is_zero())
            throw std::logic_error("charpoly: Hermitian trace must be real");
        a[n - k] = GaussQ(coef);
        if (k < n) {
            M = HM;
            for (std::size_t i = 0; i < n; ++i) M.at(i, i) += a[n - k];
        }
    }
    Poly p(n + 1);
    p[n] = QExt(1);
    for (std::size_t i = 0; i < n; ++i) {
        if (!a[i].im.is_zero()) throw std::logic_error("charpoly: complex coefficient");
        p[i] = a[i].re;
    }
    return p;
}

std::vector<double> EigenSeq::values() const {
    std::vector<double> out;
    for (const auto& r : roots)
        for (int i = 0; i < r.multiplicity; ++i) out.push_back(r.approx);
    return out;
}

EigenSeq eigenvalue_sequence(const CMatrix& x) {
    EigenSeq seq;
    seq.charpoly = charpoly_of_anti_hermitian(x);
    seq.roots = isolate_real_roots(seq.charpoly);
    return seq;
}

bool seq_dependent(const CMatrix& x, const CMatrix& y) {
    if (x.size() != y.size()) throw std::invalid_argument("seq_dependent: size mismatch");
    if (x.is_zero() || y.is_zero()) return true;
    Poly px = charpoly_of_anti_hermitian(x);
    Poly py = charpoly_of_anti_hermitian(y);
    std::size_t n = x.size();
    // spec(Y) = c spec(X) iff for every k >= 1: b_{n-k} = c^k a_{n-k}
    std::vector<std::size_t> support;
    for (std::size_t k = 1; k <= n; ++k) {
        bool ax = !px[n - k].is_zero();
        bool ay = !py[n - k].is_zero();
        if (ax != ay) return false;
        if (ax) support.push_back(k);
    }
    if (support.empty()) return true;  // both nilpotent: zero spectra
    // c^g for g = gcd of the support, via Bezout combination of the ratios
    long long g = 0;
    for (auto k : support) g = std::gcd(g, static_cast<long long>(k));
    auto ratio = [&](std::size_t k) { return py[n - k] / px[n - k]; };
    // find integers u_i with sum u_i k_i = g by folding extended gcd
    QExt s(1);
    {
        long long acc = 0;
        QExt acc_val(1);
        for (auto k : support) {
            long long kk = static_cast<long long>(k);
            if (acc == 0) {
                acc = kk;
                acc_val = ratio(k);
                continue;
            }
            // extended gcd of acc and kk
            long long old_r = acc, r = kk;
            long long old_su = 1, su = 0;
            long long old_t = 0, tu = 1;
            while (r != 0) {
                long long qd = old_r / r;
                std::tie(old_r, r) = std::make_tuple(r, old_r - qd * r);
                std::tie(old_su, su) = std::make_tuple(su, old_su - qd * su);
                std::tie(old_t, tu) = std::make_tuple(tu, old_t - qd * tu);
            }
            // old_r = old_su*acc + old_t*kk
            auto ipow = [](QExt base, long long e) {
                if (e < 0) {
                    base = base.inverse();
                    e = -e;
                }
                QExt acc2(1);
                while (e) {
                    if (e & 1) acc2 *= base;
                    base *= base;
                    e >>= 1;
                }
                return acc2;
            };
            acc_val = ipow(acc_val, old_su) * ipow(ratio(k), old_t);
            acc = old_r;
        }
        s = acc_val;  // candidate value of c^g
    }
    // verify the candidate on the whole support
    auto ipow = [](QExt base, long long e) {
        QExt acc2(1);
        while (e) {
            if (e & 1) acc2 *= base;
            base *= base;
            e >>= 1;
        }
        return acc2;
    };
    for (auto k : support) {
        long long e = static_cast<long long>(k) / g;
        if (ipow(s, e) != ratio(k)) return false;
    }
    // a real c with c^g = s exists iff g is odd or s > 0
    if (g % 2 == 0 && s.sign() <= 0) return false;
    return true;
}

} // namespace nhf
