#include "nhf/finsler.hpp"

#include <cmath>
#include <stdexcept>

namespace nhf {

namespace {

double sq(double x) { return x * x; }

// Richardson-extrapolated central differences (two steps, fourth order).
template <typename F>
double d1(F&& f, double h) {
    auto slope = [&](double s) { return (f(s) - f(-s)) / (2 * s); };
    return (4 * slope(h / 2) - slope(h)) / 3;
}

template <typename F>
double d2(F&& f, double h) {
    double f0 = f(0.0);
    auto curv = [&](double s) { return (f(s) - 2 * f0 + f(-s)) / (s * s); };
    return (4 * curv(h / 2) - curv(h)) / 3;
}

// mixed second derivative d^2/da db via the 4-point rule, extrapolated
template <typename F>
double d11(F&& f, double ha, double hb) {
    auto mixed = [&](double sa, double sb) {
        return (f(sa, sb) - f(sa, -sb) - f(-sa, sb) + f(-sa, -sb)) / (4 * sa * sb);
    };
    return (4 * mixed(ha / 2, hb / 2) - mixed(ha, hb)) / 3;
}

double scale_of(const VecD& y) { return std::max(1.0, y.cwiseAbs().maxCoeff()); }

// positions are chart coordinates: steps stay absolute; velocity steps scale
// with |y| (the formulas are homogeneous in y)
double vel_scale(const VecD& y) {
    double m = y.cwiseAbs().maxCoeff();
    return std::max(m, 1e-2);
}

MatD hessian_impl(const std::function<double(const VecD&)>& F, std::size_t n, const VecD& y,
                  double h_fd) {
    double h = h_fd * vel_scale(y);
    auto f2 = [&](const VecD& z) { return sq(F(z)); };
    MatD g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double v;
            if (i == j) {
                v = d2(
                    [&](double s) {
                        VecD z = y;
                        z(static_cast<Eigen::Index>(i)) += s;
                        return f2(z);
                    },
                    h);
            } else {
                v = d11(
                    [&](double sa, double sb) {
                        VecD z = y;
                        z(static_cast<Eigen::Index>(i)) += sa;
                        z(static_cast<Eigen::Index>(j)) += sb;
                        return f2(z);
                    },
                    h, h);
            }
            g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v / 2;
            g(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v / 2;
        }
    }
    return g;
}

} // namespace

MinkowskiNorm ChartMetric::at(const VecD& x) const {
    MinkowskiNorm F;
    F.dimension = dimension;
    F.h_fd = h_fd;
    auto val = value;
    VecD x0 = x;
    F.value = [val, x0](const VecD& y) { return val(x0, y); };
    return F;
}

MatD hessian_g(const MinkowskiNorm& F, const VecD& y) {
    if (y.norm() == 0) throw std::invalid_argument("hessian_g: y must be nonzero");
    MatD g = hessian_impl(F.value, F.dimension, y, F.h_fd);
    Eigen::LLT<MatD> llt(g);
    if (llt.info() != Eigen::Success)
        throw std::domain_error("hessian_g: fundamental tensor is not positive definite");
    return g;
}

MatD hessian_g(const ChartMetric& M, const VecD& x, const VecD& y) {
    return hessian_g(M.at(x), y);
}

double g_inner(const MatD& g, const VecD& u, const VecD& v) { return u.dot(g * v); }

// ---------------------------------------------------------------------------
// submersion of norms

namespace {

// minimize f along the affine fiber v0 + span(K) by damped Newton with
// finite-difference derivatives of F^2
VecD fiber_minimizer(const MinkowskiNorm& F1, const MatD& proj, const VecD& w) {
    Eigen::CompleteOrthogonalDecomposition<MatD> cod(proj);
    VecD v0 = cod.pseudoInverse() * w;
    MatD K = Eigen::FullPivLU<MatD>(proj).kernel();  // n x k
    if (K.cols() == 0) return v0;

    auto f2 = [&](const VecD& k) { return sq(F1(v0 + K * k)); };
    VecD k = VecD::Zero(K.cols());
    double h = 1e-4 * scale_of(v0);
    for (int it = 0; it < 200; ++it) {
        // gradient and Hessian in the fiber coordinates
        VecD grad(K.cols());
        MatD hess(K.cols(), K.cols());
        for (Eigen::Index a = 0; a < K.cols(); ++a) {
            grad(a) = d1(
                [&](double s) {
                    VecD kk = k;
                    kk(a) += s;
                    return f2(kk);
                },
                h);
            for (Eigen::Index b = a; b < K.cols(); ++b) {
                double v;
                if (a == b)
                    v = d2(
                        [&](double s) {
                            VecD kk = k;
                            kk(a) += s;
                            return f2(kk);
                        },
                        h);
                else
                    v = d11(
                        [&](double sa, double sb) {
                            VecD kk = k;
                            kk(a) += sa;
                            kk(b) += sb;
                            return f2(kk);
                        },
                        h, h);
                hess(a, b) = v;
                hess(b, a) = v;
            }
        }
        if (grad.norm() < 1e-12 * std::max(1.0, f2(k))) break;
        VecD step = hess.ldlt().solve(grad);
        double t = 1.0;
        double base = f2(k);
        for (int halve = 0; halve < 40; ++halve) {
            if (f2(k - t * step) < base) break;
            t /= 2;
        }
        k -= t * step;
        if (t * step.norm() < 1e-14 * std::max(1.0, k.norm())) break;
    }
    return v0 + K * k;
}

} // namespace

double subduced_norm(const MinkowskiNorm& F1, const MatD& proj, const VecD& w) {
    if (w.norm() == 0) return 0;
    return F1(fiber_minimizer(F1, proj, w));
}

VecD horizontal_lift(const MinkowskiNorm& F1, const MatD& proj, const VecD& w) {
    if (w.norm() == 0) return VecD::Zero(proj.cols());
    VecD v = fiber_minimizer(F1, proj, w);
    // the defining property: ker(proj) is g_v-orthogonal to v
    MatD K = Eigen::FullPivLU<MatD>(proj).kernel();
    if (K.cols() > 0) {
        MatD g = hessian_g(F1, v);
        double s = std::max(1.0, std::abs(g_inner(g, v, v)));
        for (Eigen::Index a = 0; a < K.cols(); ++a)
            if (std::abs(g_inner(g, v, K.col(a))) > 1e-8 * s)
                throw std::runtime_error("horizontal_lift: orthogonality check failed");
    }
    return v;
}

// ---------------------------------------------------------------------------
// spray and curvature

VecD spray(const ChartMetric& M, const VecD& x, const VecD& y) {
    std::size_t n = M.dimension;
    double hx = M.h_fd;
    double hy = M.h_fd * vel_scale(y);
    auto f2 = [&](const VecD& xx, const VecD& yy) { return sq(M(xx, yy)); };

    MatD g = hessian_g(M, x, y);
    VecD rhs(n);
    for (std::size_t l = 0; l < n; ++l) {
        // sum_k d^2 f2 / dx_k dy_l * y_k  -  d f2 / dx_l
        double acc = 0;
        for (std::size_t k = 0; k < n; ++k) {
            double yk = y(static_cast<Eigen::Index>(k));
            if (yk == 0.0) continue;
            acc += yk * d11(
                             [&](double sx, double sy) {
                                 VecD xx = x, yy = y;
                                 xx(static_cast<Eigen::Index>(k)) += sx;
                                 yy(static_cast<Eigen::Index>(l)) += sy;
                                 return f2(xx, yy);
                             },
                             hx, hy);
        }
        acc -= d1(
            [&](double s) {
                VecD xx = x;
                xx(static_cast<Eigen::Index>(l)) += s;
                return f2(xx, y);
            },
            hx);
        rhs(static_cast<Eigen::Index>(l)) = acc;
    }
    return g.ldlt().solve(rhs) / 4;
}

MatD riemann_curvature(const ChartMetric& M, const VecD& x, const VecD& y,
                       CurvatureDiagnostics* diag) {
    std::size_t n = M.dimension;
    double hx = 0.06;
    double hy = 0.06 * vel_scale(y);
    // The nested differencing would otherwise sit on the spray's roundoff
    // floor; the inner evaluations run at a coarser step than the default.
    ChartMetric Mi = M;
    Mi.h_fd = std::max(M.h_fd, 8e-3);
    VecD G0 = spray(Mi, x, y);

    auto sprayv = [&](const VecD& xx, const VecD& yy) { return spray(Mi, xx, yy); };

    // first derivatives dG/dx_k, dG/dy_k (vector valued), extrapolated to
    // sixth order (three step sizes)
    auto dvec = [&](bool in_x, std::size_t k) {
        auto at = [&](double s) {
            VecD xx = x, yy = y;
            (in_x ? xx : yy)(static_cast<Eigen::Index>(k)) += s;
            return sprayv(xx, yy);
        };
        double h = in_x ? hx : hy;
        auto slope = [&](double s) { return ((at(s) - at(-s)) / (2 * s)).eval(); };
        VecD d_h = slope(h), d_2 = slope(h / 2), d_4 = slope(h / 4);
        VecD r1 = (4 * d_2 - d_h) / 3;
        VecD r2 = (4 * d_4 - d_2) / 3;
        return ((16 * r2 - r1) / 15).eval();
    };
    std::vector<VecD> Gx(n), Gy(n);
    for (std::size_t k = 0; k < n; ++k) {
        Gx[k] = dvec(true, k);
        Gy[k] = dvec(false, k);
    }
    // mixed second derivatives d^2 G / dx_j dy_k and d^2 G / dy_j dy_k
    auto d2vec = [&](bool first_x, std::size_t j, std::size_t k) {
        auto at = [&](double sa, double sb) {
            VecD xx = x, yy = y;
            (first_x ? xx : yy)(static_cast<Eigen::Index>(j)) += sa;
            yy(static_cast<Eigen::Index>(k)) += sb;
            return sprayv(xx, yy);
        };
        double ha = first_x ? hx : hy;
        auto mixed = [&](double sa, double sb) {
            return ((at(sa, sb) - at(sa, -sb) - at(-sa, sb) + at(-sa, -sb)) / (4 * sa * sb))
                .eval();
        };
        VecD m_h = mixed(ha, hy), m_2 = mixed(ha / 2, hy / 2), m_4 = mixed(ha / 4, hy / 4);
        VecD r1 = (4 * m_2 - m_h) / 3;
        VecD r2 = (4 * m_4 - m_2) / 3;
        return ((16 * r2 - r1) / 15).eval();
    };

    MatD R(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        VecD col = 2 * Gx[k];
        for (std::size_t j = 0; j < n; ++j) {
            double yj = y(static_cast<Eigen::Index>(j));
            if (yj != 0.0) col -= yj * d2vec(true, j, k);
            double Gj = G0(static_cast<Eigen::Index>(j));
            if (Gj != 0.0) col += 2 * Gj * d2vec(false, j, k);
            col -= Gy[j] * Gy[k](static_cast<Eigen::Index>(j));
        }
        R.col(static_cast<Eigen::Index>(k)) = col;
    }

    if (diag) {
        MatD g = hessian_g(M, x, y);
        double scale = std::max(1.0, R.cwiseAbs().maxCoeff()) * std::max(1.0, y.squaredNorm());
        diag->scale = scale;
        diag->ry_y_residual = (R * y).norm() / scale;
        MatD A = g * R;  // <R u, w>_y = u^T R^T g w; self-adjoint iff g R symmetric
        diag->self_adjoint_residual = (A - A.transpose()).cwiseAbs().maxCoeff() / scale;
    }
    return R;
}

double flag_curvature(const ChartMetric& M, const VecD& x, const VecD& y, const VecD& v) {
    MatD g = hessian_g(M, x, y);
    MatD R = riemann_curvature(M, x, y);
    double yy = g_inner(g, y, y);
    double vv = g_inner(g, v, v);
    double yv = g_inner(g, y, v);
    double denom = yy * vv - yv * yv;
    if (std::abs(denom) < 1e-8 * std::max(1.0, yy * vv))
        throw std::domain_error("flag_curvature: degenerate flag");
    return g_inner(g, R * v, v) / denom;
}

SubmersionReport submersion_inequality_check(const ChartMetric& M1, const ChartMetric& M2,
                                             const MatD& proj,
                                             const std::vector<SubmersionSample>& samples,
                                             double tol) {
    SubmersionReport rep;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (const auto& s : samples) {
        VecD x2 = proj * s.x1;
        MinkowskiNorm F1 = M1.at(s.x1);
        VecD y1 = horizontal_lift(F1, proj, s.y2);
        // lift of v2 with respect to <.,.>_{y1}
        MatD g1 = hessian_g(F1, y1);
        MatD A = proj * g1.ldlt().solve(proj.transpose());
        VecD v1 = g1.ldlt().solve(proj.transpose() * A.ldlt().solve(s.v2));
        double k1 = flag_curvature(M1, s.x1, y1, v1);
        double k2 = flag_curvature(M2, x2, s.y2, s.v2);
        double margin = k2 - k1;
        rep.worst_margin = std::min(rep.worst_margin, margin);
        if (margin < -tol) ++rep.violations;
        ++rep.samples;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// S-curvature

namespace {

double unit_ball_volume(std::size_t n) {
    if (n == 1) return 2.0;
    if (n == 2) return M_PI;
    if (n == 3) return 4.0 * M_PI / 3.0;
    throw std::invalid_argument("unit_ball_volume: dimension must be <= 3");
}

double indicatrix_volume(const ChartMetric& M, const VecD& x) {
    std::size_t n = M.dimension;
    if (n == 1) {
        VecD e(1);
        e(0) = 1;
        return 1.0 / M(x, e) + 1.0 / M(x, -e);
    }
    if (n == 2) {
        // vol = 1/2 int F(x, u(theta))^-2 dtheta, spectrally convergent
        auto integrand = [&](double th) {
            VecD u(2);
            u(0) = std::cos(th);
            u(1) = std::sin(th);
            double f = M(x, u);
            return 1.0 / (f * f);
        };
        int N = 32;
        auto trap = [&](int k) {
            double s = 0;
            for (int i = 0; i < k; ++i) s += integrand(2 * M_PI * i / k);
            return M_PI * s / k;  // (1/2) * (2 pi / k) * sum
        };
        double prev = trap(N), cur = trap(2 * N);
        while (std::abs(cur - prev) > 1e-11 * std::max(1.0, std::abs(cur)) && N < 1 << 14) {
            N *= 2;
            prev = cur;
            cur = trap(2 * N);
        }
        return cur;
    }
    // n == 3: vol = (1/3) int_{S^2} F^-3 dA, product rule with doubling
    auto integrand = [&](double th, double ph) {
        VecD u(3);
        u(0) = std::sin(th) * std::cos(ph);
        u(1) = std::sin(th) * std::sin(ph);
        u(2) = std::cos(th);
        double f = M(x, u);
        return std::sin(th) / (f * f * f);
    };
    auto grid = [&](int K) {
        // Simpson in theta, trapezoid (periodic) in phi
        double total = 0;
        for (int i = 0; i <= 2 * K; ++i) {
            double th = M_PI * i / (2 * K);
            double wth = (i == 0 || i == 2 * K) ? 1 : (i % 2 ? 4 : 2);
            double s = 0;
            for (int j = 0; j < 4 * K; ++j) s += integrand(th, 2 * M_PI * j / (4 * K));
            total += wth * s * (2 * M_PI / (4 * K));
        }
        return total * (M_PI / (2 * K)) / 3.0 / 3.0;
    };
    int K = 8;
    double prev = grid(K), cur = grid(2 * K);
    while (std::abs(cur - prev) > 1e-9 * std::max(1.0, std::abs(cur)) && K < 512) {
        K *= 2;
        prev = cur;
        cur = grid(2 * K);
    }
    return cur;
}

double distortion(const ChartMetric& M, const VecD& x, const VecD& y) {
    MatD g = hessian_g(M, x, y);
    double det = g.determinant();
    if (det <= 0) throw std::domain_error("distortion: non-positive Hessian determinant");
    return std::log(std::sqrt(det) / bh_density(M, x));
}

} // namespace

double bh_density(const ChartMetric& M, const VecD& x) {
    return unit_ball_volume(M.dimension) / indicatrix_volume(M, x);
}

std::pair<VecD, VecD> geodesic_flow(const ChartMetric& M, const VecD& x, const VecD& y,
                                    double t) {
    // adaptive RKF45 on (x, y)' = (y, -2G(x,y)); F(c') constancy as monitor
    VecD cx = x, cy = y;
    double f0 = M(x, y);
    double remaining = t;
    double dir = t >= 0 ? 1.0 : -1.0;
    double h = dir * std::max(1e-4, std::min(0.05, std::abs(t)));
    auto deriv = [&](const VecD& px, const VecD& py) {
        return std::make_pair(py, (-2 * spray(M, px, py)).eval());
    };
    int guard = 0;
    while (dir * remaining > 1e-15 && ++guard < 100000) {
        if (dir * h > dir * remaining) h = remaining;
        auto [k1x, k1y] = deriv(cx, cy);
        auto [k2x, k2y] = deriv(cx + h / 4 * k1x, cy + h / 4 * k1y);
        auto [k3x, k3y] = deriv(cx + h * (3. / 32 * k1x + 9. / 32 * k2x),
                                cy + h * (3. / 32 * k1y + 9. / 32 * k2y));
        auto [k4x, k4y] =
            deriv(cx + h * (1932. / 2197 * k1x - 7200. / 2197 * k2x + 7296. / 2197 * k3x),
                  cy + h * (1932. / 2197 * k1y - 7200. / 2197 * k2y + 7296. / 2197 * k3y));
        auto [k5x, k5y] = deriv(
            cx + h * (439. / 216 * k1x - 8. * k2x + 3680. / 513 * k3x - 845. / 4104 * k4x),
            cy + h * (439. / 216 * k1y - 8. * k2y + 3680. / 513 * k3y - 845. / 4104 * k4y));
        auto [k6x, k6y] =
            deriv(cx + h * (-8. / 27 * k1x + 2. * k2x - 3544. / 2565 * k3x +
                            1859. / 4104 * k4x - 11. / 40 * k5x),
                  cy + h * (-8. / 27 * k1y + 2. * k2y - 3544. / 2565 * k3y +
                            1859. / 4104 * k4y - 11. / 40 * k5y));
        VecD x4 = cx + h * (25. / 216 * k1x + 1408. / 2565 * k3x + 2197. / 4104 * k4x -
                            1. / 5 * k5x);
        VecD y4 = cy + h * (25. / 216 * k1y + 1408. / 2565 * k3y + 2197. / 4104 * k4y -
                            1. / 5 * k5y);
        VecD x5 = cx + h * (16. / 135 * k1x + 6656. / 12825 * k3x + 28561. / 56430 * k4x -
                            9. / 50 * k5x + 2. / 55 * k6x);
        VecD y5 = cy + h * (16. / 135 * k1y + 6656. / 12825 * k3y + 28561. / 56430 * k4y -
                            9. / 50 * k5y + 2. / 55 * k6y);
        double err = (x5 - x4).norm() + (y5 - y4).norm();
        double tol_step = 1e-11 * std::max(1.0, cy.norm());
        if (err > tol_step && std::abs(h) > 1e-8) {
            h /= 2;
            continue;
        }
        cx = x5;
        cy = y5;
        remaining -= h;
        // speed-constancy monitor
        double f = M(cx, cy);
        if (std::abs(f - f0) > 1e-6 * std::max(1.0, f0) && std::abs(h) > 1e-8) {
            h /= 2;
        } else if (err < tol_step / 16) {
            h *= 2;
        }
    }
    return {cx, cy};
}

double s_curvature(const ChartMetric& M, const VecD& x, const VecD& y) {
    double delta = 1e-2 / std::max(1.0, y.norm());
    auto tau_at = [&](double t) {
        auto [cx, cy] = geodesic_flow(M, x, y, t);
        return distortion(M, cx, cy);
    };
    auto slope = [&](double d) { return (tau_at(d) - tau_at(-d)) / (2 * d); };
    return (4 * slope(delta / 2) - slope(delta)) / 3;
}

} // namespace nhf
