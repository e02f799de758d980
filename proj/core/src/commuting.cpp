#include "nhf/models.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

namespace nhf {

namespace {

using Cd = std::complex<double>;
using Md = Eigen::MatrixXcd;

Md to_double(const CMatrix& m) {
    Md out(m.size(), m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c)
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Cd(m.at(r, c).re.to_double(), m.at(r, c).im.to_double());
    return out;
}

double pair_norm_sq(const Md& z) { return z.squaredNorm(); }

GaussQ gqs(long long s) { return GaussQ(QExt(s)); }

// continued-fraction rationalization with bounded denominator
Rational rationalize(double x, long long max_den = 1000000) {
    bool neg = x < 0;
    if (neg) x = -x;
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double y = x;
    for (int it = 0; it < 40; ++it) {
        long long a = static_cast<long long>(std::floor(y));
        long long p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double frac = y - static_cast<double>(a);
        if (frac < 1e-14) break;
        y = 1.0 / frac;
    }
    Rational r(Int(p1), Int(q1 == 0 ? 1 : q1));
    return neg ? -r : r;
}

} // namespace

CommutingSearch commuting_pair_search(const MatrixAlgebra& model, int starts, unsigned seed) {
    CommutingSearch result;
    const auto& m = model.m_basis;
    if (m.size() < 2) {
        result.achieved_min = -1;
        return result;
    }

    // Stage (i): exact kernels. For candidate elements v of m, the space
    // { u in m : [u, v] = 0 } is linear; any second dimension gives a pair.
    // Candidates are small signed combinations of the basis so that flats
    // through rational points are hit directly.
    std::vector<CMatrix> candidates = m;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size() && candidates.size() < 400; ++j) {
            candidates.push_back(m[i] + m[j]);
            candidates.push_back(m[i] - m[j]);
        }
    if (m.size() <= 8) {
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j)
                for (std::size_t l = j + 1; l < m.size() && candidates.size() < 1200; ++l)
                    for (int s1 : {1, -1})
                        for (int s2 : {1, -1}) {
                            CMatrix c = m[i] + (gqs(s1) * m[j]) + (gqs(s2) * m[l]);
                            candidates.push_back(std::move(c));
                        }
    }
    for (const auto& v : candidates) {
        if (v.is_zero()) continue;
        std::vector<CMatrix> ker = centralizer_in_span(m, {v});
        if (ker.size() < 2) continue;
        for (const auto& u : ker) {
            if (real_span_rank({u, v}) != 2) continue;
            result.pair = std::make_pair(u, v);
            result.achieved_min = 0;
            return result;
        }
    }

    // Stage (ii): numerical minimization of |[X,Y]|^2 over orthonormal pairs
    // in m, followed by exact rationalization of any near-zero minimum.
    // Orthonormalize the m basis for the trace pairing first.
    std::vector<Md> B;
    {
        std::vector<Md> raw;
        for (const auto& b : m) raw.push_back(to_double(b));
        for (auto& v : raw) {
            for (const auto& u : B) {
                Cd c = (u.adjoint() * v).trace();
                v -= c.real() * u;  // real span: keep real coefficients
            }
            double n = std::sqrt(v.squaredNorm());
            if (n > 1e-12) B.push_back(v / n);
        }
    }
    std::size_t k = B.size();
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss;

    auto eval = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& y, Md& X, Md& Y) {
        X = Md::Zero(static_cast<Eigen::Index>(model.dim_ambient),
                     static_cast<Eigen::Index>(model.dim_ambient));
        Y = X;
        for (std::size_t i = 0; i < k; ++i) {
            X += x(static_cast<Eigen::Index>(i)) * B[i];
            Y += y(static_cast<Eigen::Index>(i)) * B[i];
        }
        Md Z = X * Y - Y * X;
        return pair_norm_sq(Z);
    };

    double best = std::numeric_limits<double>::infinity();
    Eigen::VectorXd best_x, best_y;

    for (int s = 0; s < starts; ++s) {
        Eigen::VectorXd x(static_cast<Eigen::Index>(k)), y(static_cast<Eigen::Index>(k));
        for (std::size_t i = 0; i < k; ++i) {
            x(static_cast<Eigen::Index>(i)) = gauss(rng);
            y(static_cast<Eigen::Index>(i)) = gauss(rng);
        }
        auto renorm = [&]() {
            x.normalize();
            y -= y.dot(x) * x;
            double n = y.norm();
            if (n < 1e-12) return false;
            y /= n;
            return true;
        };
        if (!renorm()) continue;

        double step = 0.2;
        Md X, Y;
        double f = eval(x, y, X, Y);
        for (int it = 0; it < 4000 && f > 1e-22; ++it) {
            // gradients: d/dx_i |Z|^2 = 2 Re tr( [B_i, Y]^* Z ), likewise for y
            Md Z = X * Y - Y * X;
            Eigen::VectorXd gx(static_cast<Eigen::Index>(k)), gy(static_cast<Eigen::Index>(k));
            for (std::size_t i = 0; i < k; ++i) {
                Md bi_y = B[i] * Y - Y * B[i];
                Md x_bi = X * B[i] - B[i] * X;
                gx(static_cast<Eigen::Index>(i)) = 2.0 * (bi_y.adjoint() * Z).trace().real();
                gy(static_cast<Eigen::Index>(i)) = 2.0 * (x_bi.adjoint() * Z).trace().real();
            }
            bool improved = false;
            for (int halve = 0; halve < 30; ++halve) {
                Eigen::VectorXd nx = x - step * gx;
                Eigen::VectorXd ny = y - step * gy;
                nx.normalize();
                ny -= ny.dot(nx) * nx;
                double n = ny.norm();
                if (n < 1e-12) break;
                ny /= n;
                Md NX, NY;
                double nf = eval(nx, ny, NX, NY);
                if (nf < f) {
                    x = nx;
                    y = ny;
                    X = NX;
                    Y = NY;
                    f = nf;
                    improved = true;
                    step *= 1.5;
                    break;
                }
                step *= 0.5;
            }
            if (!improved) break;
        }
        if (f < best) {
            best = f;
            best_x = x;
            best_y = y;
        }
    }
    result.achieved_min = best;

    if (best < 1e-10) {
        // rationalize and verify exactly
        CMatrix U(model.dim_ambient), V(model.dim_ambient);
        // express the orthonormalized coordinates back in the raw m basis by
        // solving the double system, then rationalize those raw coordinates.
        Md X, Y;
        eval(best_x, best_y, X, Y);
        Eigen::MatrixXd G(static_cast<Eigen::Index>(m.size()),
                          static_cast<Eigen::Index>(m.size()));
        Eigen::VectorXd bx(static_cast<Eigen::Index>(m.size())),
            by(static_cast<Eigen::Index>(m.size()));
        std::vector<Md> raw;
        for (const auto& b : m) raw.push_back(to_double(b));
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < m.size(); ++j)
                G(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    (raw[i].adjoint() * raw[j]).trace().real();
            bx(static_cast<Eigen::Index>(i)) = (raw[i].adjoint() * X).trace().real();
            by(static_cast<Eigen::Index>(i)) = (raw[i].adjoint() * Y).trace().real();
        }
        Eigen::VectorXd cx = G.ldlt().solve(bx);
        Eigen::VectorXd cy = G.ldlt().solve(by);
        for (std::size_t i = 0; i < m.size(); ++i) {
            Rational rx = rationalize(cx(static_cast<Eigen::Index>(i)));
            Rational ry = rationalize(cy(static_cast<Eigen::Index>(i)));
            if (!rx.is_zero()) U = U + (GaussQ(QExt(rx)) * m[i]);
            if (!ry.is_zero()) V = V + (GaussQ(QExt(ry)) * m[i]);
        }
        if (!U.is_zero() && !V.is_zero() && bracket(U, V).is_zero() &&
            real_span_rank({U, V}) == 2) {
            result.pair = std::make_pair(U, V);
            result.achieved_min = 0;
        }
    }
    return result;
}

} // namespace nhf
