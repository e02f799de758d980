#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nhf {

using VecD = Eigen::VectorXd;
using MatD = Eigen::MatrixXd;

// Smooth positively 1-homogeneous norm with positive definite Hessian of
// F^2/2 away from 0; evaluated pointwise.
struct MinkowskiNorm {
    std::size_t dimension = 0;
    std::function<double(const VecD&)> value;
    double h_fd = 1e-3;

    double operator()(const VecD& y) const { return value(y); }
};

// Finsler metric on an open chart: (x, y) -> F(x, y).
struct ChartMetric {
    std::size_t dimension = 0;
    std::function<double(const VecD&, const VecD&)> value;
    double h_fd = 1e-3;

    double operator()(const VecD& x, const VecD& y) const { return value(x, y); }
    MinkowskiNorm at(const VecD& x) const;
};

// Fundamental tensor g_ij(y) = (1/2) d^2 F^2 / dy_i dy_j, symmetrized;
// throws when the result is not positive definite.
MatD hessian_g(const MinkowskiNorm& F, const VecD& y);
MatD hessian_g(const ChartMetric& M, const VecD& x, const VecD& y);

// Inner product <u,v>_y of the fundamental tensor.
double g_inner(const MatD& g, const VecD& u, const VecD& v);

// Norm subduced through a surjection: F2(w) = inf { F1(v) : proj v = w }.
double subduced_norm(const MinkowskiNorm& F1, const MatD& proj, const VecD& w);

// The minimizer of the fiber problem; <lift, ker proj>_lift = 0 is verified.
VecD horizontal_lift(const MinkowskiNorm& F1, const MatD& proj, const VecD& w);

// Geodesic spray coefficients G^i(x, y).
VecD spray(const ChartMetric& M, const VecD& x, const VecD& y);

struct CurvatureDiagnostics {
    double ry_y_residual = 0;        // |R_y y| / scale
    double self_adjoint_residual = 0; // max |<Ru,w>_y - <u,Rw>_y| / scale
    double scale = 1;
};

// Riemann curvature operator R^i_k(y) from the spray.
MatD riemann_curvature(const ChartMetric& M, const VecD& x, const VecD& y,
                       CurvatureDiagnostics* diag = nullptr);

// Flag curvature K(x, y, span(y, v)).
double flag_curvature(const ChartMetric& M, const VecD& x, const VecD& y, const VecD& v);

struct SubmersionSample {
    VecD x1, y2, v2;
};

struct SubmersionReport {
    int samples = 0;
    int violations = 0;
    double worst_margin = 0;  // most negative K2 - K1 observed
};

// K1(lifted flag) <= K2(flag) for a linear chart submersion x2 = proj x1.
SubmersionReport submersion_inequality_check(const ChartMetric& M1, const ChartMetric& M2,
                                             const MatD& proj,
                                             const std::vector<SubmersionSample>& samples,
                                             double tol = 1e-4);

// S-curvature: derivative of the distortion along the geodesic through (x,y);
// the Busemann-Hausdorff normalization is computed by quadrature (dim <= 3).
double s_curvature(const ChartMetric& M, const VecD& x, const VecD& y);

// Busemann-Hausdorff density sigma(x) = omega_n / vol{ y : F(x,y) < 1 }.
double bh_density(const ChartMetric& M, const VecD& x);

// One adaptive embedded Runge-Kutta geodesic step bundle: integrate the spray
// equation from (x, y) for time t (either sign); F(c') constancy is used as
// the step monitor.
std::pair<VecD, VecD> geodesic_flow(const ChartMetric& M, const VecD& x, const VecD& y,
                                    double t);

} // namespace nhf
