#include <doctest.h>

#include "nhf/metrics.hpp"

#include <cmath>
#include <random>

using namespace nhf;

namespace {

VecD vec(std::initializer_list<double> xs) {
    VecD v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v(i++) = x;
    return v;
}

// closed-form Randers fundamental tensor for F = |y| + <b, y>
MatD randers_g(const VecD& b, const VecD& y) {
    double a = y.norm();
    double F = a + b.dot(y);
    std::size_t n = static_cast<std::size_t>(y.size());
    MatD g(n, n);
    VecD l = y / a + b;  // dF/dy
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double dij = i == j ? 1.0 : 0.0;
            double hess_f =
                (dij - y(static_cast<Eigen::Index>(i)) * y(static_cast<Eigen::Index>(j)) /
                           (a * a)) /
                a;
            g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                F * hess_f + l(static_cast<Eigen::Index>(i)) * l(static_cast<Eigen::Index>(j));
        }
    return g;
}

} // namespace

TEST_CASE("fundamental tensor") {
    SUBCASE("Euclidean norm gives the identity") {
        ChartMetric M = make_metric("euclidean:2");
        MatD g = hessian_g(M, vec({0, 0}), vec({0.3, -1.2}));
        CHECK((g - MatD::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-8);
    }
    SUBCASE("Randers Hessian matches the closed form at 20 samples") {
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> u(-0.3, 0.3);
        for (int s = 0; s < 20; ++s) {
            VecD b = vec({u(rng), u(rng)});
            VecD y = vec({1.0 + u(rng), u(rng) * 2});
            ChartMetric M{2, [b](const VecD&, const VecD& yy) { return yy.norm() + b.dot(yy); },
                          1e-3};
            MatD g = hessian_g(M, vec({0, 0}), y);
            MatD want = randers_g(b, y);
            double rel = (g - want).cwiseAbs().maxCoeff() / want.cwiseAbs().maxCoeff();
            CHECK(rel < 1e-6);
        }
    }
    SUBCASE("quartic norm matches the hand-differentiated Hessian") {
        ChartMetric M = make_metric("quartic");
        VecD y = vec({1.0, 1.0});
        MatD g = hessian_g(M, vec({0, 0}), y);
        // F^2 = sqrt(y1^4 + y2^4): at (1,1): g_ij = 3 delta_ij / sqrt2 - 1 / sqrt2...
        double q = std::sqrt(2.0);
        MatD want(2, 2);
        want(0, 0) = 3 / q - 1 / q;  // 6 y1^2 / (2 sqrtQ) - 4 y1^6/(2 Q^{3/2}) at (1,1)
        want(1, 1) = want(0, 0);
        want(0, 1) = want(1, 0) = -1 / q;  // -4 y1^3 y2^3 / (2 Q^{3/2})
        CHECK((g - want).cwiseAbs().maxCoeff() < 1e-7);
    }
    SUBCASE("zero-homogeneity and the Euler relation") {
        ChartMetric M = make_metric("randers");
        VecD x = vec({0, 0});
        for (auto y : {vec({1.0, 0.2}), vec({-0.4, 1.1})}) {
            MatD g1 = hessian_g(M, x, y);
            MatD g2 = hessian_g(M, x, 3.7 * y);
            CHECK((g1 - g2).cwiseAbs().maxCoeff() < 1e-6);
            double f = M(x, y);
            CHECK(std::abs(g_inner(g1, y, y) - f * f) < 1e-8 * f * f);
        }
    }
}

TEST_CASE("subduced norms and horizontal lifts") {
    MatD proj(1, 2);
    proj.setZero();
    proj(0, 0) = 1;

    SUBCASE("orthogonal fiber of the Euclidean norm") {
        MinkowskiNorm F{2, [](const VecD& y) { return y.norm(); }, 1e-3};
        CHECK(subduced_norm(F, proj, vec({1.0})) == doctest::Approx(1.0).epsilon(1e-10));
        VecD v = horizontal_lift(F, proj, vec({1.0}));
        CHECK(std::abs(v(0) - 1) < 1e-9);
        CHECK(std::abs(v(1)) < 1e-9);
    }
    SUBCASE("ellipse norm: the subduced value is 1 at w = 1") {
        MinkowskiNorm F{2,
                        [](const VecD& y) {
                            return std::sqrt(y(0) * y(0) + 4 * y(1) * y(1));
                        },
                        1e-3};
        CHECK(std::abs(subduced_norm(F, proj, vec({1.0})) - 1.0) < 1e-8);
        VecD v = horizontal_lift(F, proj, vec({1.0}));
        CHECK(std::abs(v(1)) < 1e-8);
    }
    SUBCASE("quartic norm projects to the coordinate value") {
        MinkowskiNorm F{2,
                        [](const VecD& y) {
                            return std::pow(std::pow(y(0), 4) + std::pow(y(1), 4), 0.25);
                        },
                        1e-3};
        CHECK(std::abs(subduced_norm(F, proj, vec({1.0})) - 1.0) < 1e-8);
    }
    SUBCASE("lift of zero is zero") {
        MinkowskiNorm F{2, [](const VecD& y) { return y.norm(); }, 1e-3};
        CHECK(horizontal_lift(F, proj, vec({0.0})).norm() == 0.0);
    }
    SUBCASE("subduced norm stays homogeneous and convex") {
        MinkowskiNorm F{2,
                        [](const VecD& y) {
                            return std::sqrt(y(0) * y(0) + 4 * y(1) * y(1)) + 0.2 * y(0);
                        },
                        1e-3};
        double f1 = subduced_norm(F, proj, vec({1.0}));
        double f2 = subduced_norm(F, proj, vec({2.0}));
        CHECK(std::abs(f2 - 2 * f1) < 1e-7);
        double fm = subduced_norm(F, proj, vec({-1.0}));
        // triangle inequality through 0
        CHECK(f1 + fm >= -1e-9);
    }
}

TEST_CASE("spray and curvature") {
    SUBCASE("locally Minkowski metrics have vanishing spray and curvature") {
        for (const char* name : {"euclidean:2", "quartic"}) {
            ChartMetric M = make_metric(name);
            VecD x = vec({0.1, -0.2});
            VecD y = vec({0.8, 0.5});
            CHECK(spray(M, x, y).norm() < 1e-9);
            CurvatureDiagnostics diag;
            MatD R = riemann_curvature(M, x, y, &diag);
            CHECK(R.cwiseAbs().maxCoeff() < 1e-7);
            VecD v = vec({-0.5, 1.0});
            CHECK(std::abs(flag_curvature(M, x, y, v)) < 1e-6);
        }
    }
    SUBCASE("spray is 2-homogeneous in y") {
        ChartMetric M = make_metric("sphere2");
        VecD x = vec({0.9, 0.4});
        VecD y = vec({0.3, 0.7});
        VecD g1 = spray(M, x, y);
        VecD g2 = spray(M, x, 2 * y);
        CHECK((g2 - 4 * g1).cwiseAbs().maxCoeff() < 1e-6 * std::max(1.0, g1.norm()));
    }
    SUBCASE("round sphere has constant curvature one") {
        ChartMetric M = make_metric("sphere2");
        std::mt19937 rng(3);
        std::uniform_real_distribution<double> ux(0.6, 2.4), uy(-1.0, 1.0);
        for (int s = 0; s < 20; ++s) {
            VecD x = vec({ux(rng), uy(rng)});
            VecD y = vec({uy(rng), uy(rng)});
            VecD v = vec({uy(rng), uy(rng)});
            if (std::abs(y(0) * v(1) - y(1) * v(0)) < 0.1) continue;
            if (y.norm() < 0.3) continue;
            double K = flag_curvature(M, x, y, v);
            CHECK(K == doctest::Approx(1.0).epsilon(1e-3));
        }
    }
    SUBCASE("sphere spray matches the Christoffel coefficients") {
        ChartMetric M = make_metric("sphere2");
        VecD x = vec({1.1, 0.5});
        VecD y = vec({0.4, -0.7});
        VecD G = spray(M, x, y);
        // 2 G^i = Gamma^i_{jk} y^j y^k for the polar round metric
        double th = x(0), yt = y(0), yp = y(1);
        double want_t = -std::sin(th) * std::cos(th) * yp * yp / 2;
        double want_p = std::cos(th) / std::sin(th) * yt * yp;
        CHECK(G(0) == doctest::Approx(want_t).epsilon(1e-5));
        CHECK(G(1) == doctest::Approx(want_p).epsilon(1e-5));
    }
    SUBCASE("Poincare disk has curvature minus one") {
        ChartMetric M = make_metric("poincare");
        VecD x = vec({0.2, 0.1});
        VecD y = vec({0.5, 0.1});
        VecD v = vec({-0.1, 0.8});
        CHECK(flag_curvature(M, x, y, v) == doctest::Approx(-1.0).epsilon(1e-3));
    }
    SUBCASE("curvature diagnostics: pole annihilation and self-adjointness") {
        for (const char* name : {"sphere2", "poincare", "randers"}) {
            ChartMetric M = make_metric(name);
            VecD x = name == std::string("sphere2") ? vec({1.2, 0.3}) : vec({0.15, -0.1});
            VecD y = vec({0.7, 0.4});
            CurvatureDiagnostics diag;
            riemann_curvature(M, x, y, &diag);
            CAPTURE(name);
            CHECK(diag.ry_y_residual < 1e-6);
            CHECK(diag.self_adjoint_residual < 1e-6);
        }
    }
    SUBCASE("flag curvature is invariant under allowed changes") {
        ChartMetric M = make_metric("sphere2");
        VecD x = vec({1.0, 0.2});
        VecD y = vec({0.5, 0.6});
        VecD v = vec({-0.7, 0.3});
        double k = flag_curvature(M, x, y, v);
        CHECK(flag_curvature(M, x, 2.5 * y, v) == doctest::Approx(k).epsilon(1e-4));
        CHECK(flag_curvature(M, x, y, v + 0.8 * y) == doctest::Approx(k).epsilon(1e-4));
        CHECK(flag_curvature(M, x, y, 3.0 * v) == doctest::Approx(k).epsilon(1e-4));
    }
}

TEST_CASE("submersion inequality") {
    SUBCASE("identity submersion gives equality") {
        ChartMetric M = make_metric("sphere2");
        MatD proj = MatD::Identity(2, 2);
        std::vector<SubmersionSample> samples{{vec({1.1, 0.2}), vec({0.4, 0.5}), vec({-0.6, 0.3})}};
        auto rep = submersion_inequality_check(M, M, proj, samples);
        CHECK(rep.violations == 0);
        CHECK(std::abs(rep.worst_margin) < 1e-4);
    }
    SUBCASE("product metric over the sphere factor") {
        ChartMetric M1 = make_metric("sphere2xR");
        ChartMetric M2 = make_metric("sphere2");
        MatD proj(2, 3);
        proj.setZero();
        proj(0, 0) = 1;
        proj(1, 1) = 1;
        std::vector<SubmersionSample> samples;
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> u(-0.6, 0.6);
        for (int s = 0; s < 5; ++s)
            samples.push_back(
                {vec({1.2 + u(rng) / 2, u(rng), u(rng)}), vec({0.5 + u(rng) / 4, 0.4}),
                 vec({u(rng), 0.9})});
        auto rep = submersion_inequality_check(M1, M2, proj, samples);
        CHECK(rep.samples == 5);
        CHECK(rep.violations == 0);
    }
    SUBCASE("flat product projects flat") {
        ChartMetric M1 = make_metric("euclidean:3");
        ChartMetric M2 = make_metric("euclidean:2");
        MatD proj(2, 3);
        proj.setZero();
        proj(0, 0) = 1;
        proj(1, 1) = 1;
        std::vector<SubmersionSample> samples{{vec({0, 0, 0}), vec({1.0, 0.2}), vec({0.1, 1.0})}};
        auto rep = submersion_inequality_check(M1, M2, proj, samples);
        CHECK(rep.violations == 0);
        CHECK(std::abs(rep.worst_margin) < 1e-5);
    }
}

TEST_CASE("S-curvature") {
    SUBCASE("locally Minkowski charts have vanishing S-curvature") {
        ChartMetric M = make_metric("quartic");
        CHECK(std::abs(s_curvature(M, vec({0.1, 0.0}), vec({0.7, 0.4}))) < 1e-6);
    }
    SUBCASE("Riemannian charts have vanishing S-curvature") {
        ChartMetric M = make_metric("sphere2");
        CHECK(std::abs(s_curvature(M, vec({1.2, 0.1}), vec({0.5, 0.3}))) < 1e-4);
        ChartMetric P = make_metric("poincare");
        CHECK(std::abs(s_curvature(P, vec({0.2, -0.1}), vec({0.4, 0.3}))) < 1e-4);
    }
    SUBCASE("a drifted metric has a self-consistent S-curvature") {
        // Randers metric with an x-dependent drift
        ChartMetric M{2,
                      [](const VecD& x, const VecD& y) {
                          double b = 0.3 * std::sin(x(1));
                          return y.norm() + b * y(0);
                      },
                      1e-3};
        VecD x = vec({0.2, 0.4});
        VecD y = vec({0.8, 0.3});
        double s = s_curvature(M, x, y);
        // direct finite difference of the distortion along the geodesic at a
        // halved step must agree
        auto tau = [&](double t) {
            auto [cx, cy] = geodesic_flow(M, x, y, t);
            MatD g = hessian_g(M, cx, cy);
            return std::log(std::sqrt(g.determinant()) / bh_density(M, cx));
        };
        double d1 = (tau(5e-3) - tau(-5e-3)) / 1e-2;
        CHECK(s == doctest::Approx(d1).epsilon(1e-3));
        CHECK(std::abs(s) > 1e-4);  // genuinely nonzero drift
    }
}

TEST_CASE("metric files") {
    SUBCASE("riemannian matrix field") {
        ChartMetric M = metric_from_json_text(R"json({
            "dimension": 2,
            "kind": "riemannian_matrix_field",
            "parameters": { "g": [["1", "0"], ["0", "sin(x1)^2"]] }
        })json");
        VecD x = vec({1.1, 0.5});
        VecD y = vec({0.4, -0.7});
        ChartMetric S = make_metric("sphere2");
        CHECK(M(x, y) == doctest::Approx(S(x, y)).epsilon(1e-12));
    }
    SUBCASE("randers from json") {
        ChartMetric M = metric_from_json_text(R"json({
            "dimension": 2,
            "kind": "randers",
            "parameters": { "alpha": [["1", "0"], ["0", "1"]], "beta": ["0.5", "0"] }
        })json");
        VecD y = vec({0.3, 0.4});
        CHECK(M(vec({0, 0}), y) == doctest::Approx(0.5 + 0.15).epsilon(1e-12));
    }
    SUBCASE("custom expression") {
        ChartMetric M = metric_from_json_text(R"json({
            "dimension": 2,
            "kind": "custom_expression",
            "parameters": { "expression": "sqrt(y1^2 + exp(2*x1)*y2^2)" }
        })json");
        CHECK(M(vec({0.0, 0.0}), vec({3.0, 4.0})) == doctest::Approx(5.0).epsilon(1e-12));
    }
}
