#include "nhf/metrics.hpp"

#include "nhf/expr.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace nhf {

namespace {

ChartMetric chart(std::size_t n, std::function<double(const VecD&, const VecD&)> f) {
    ChartMetric m;
    m.dimension = n;
    m.value = std::move(f);
    return m;
}

} // namespace

std::vector<std::string> metric_catalog() {
    return {"euclidean:2", "euclidean:3", "quartic", "randers", "sphere2", "poincare",
            "sphere2xR"};
}

ChartMetric make_metric(const std::string& name) {
    if (name.rfind("euclidean:", 0) == 0) {
        std::size_t n = static_cast<std::size_t>(std::stoi(name.substr(10)));
        return chart(n, [](const VecD&, const VecD& y) { return y.norm(); });
    }
    if (name == "quartic") {
        return chart(2, [](const VecD&, const VecD& y) {
            double a = y(0), b = y(1);
            return std::pow(a * a * a * a + b * b * b * b, 0.25);
        });
    }
    if (name == "randers") {
        return chart(2, [](const VecD&, const VecD& y) { return y.norm() + 0.5 * y(0); });
    }
    if (name == "sphere2") {
        // polar chart: x1 the colatitude, x2 the longitude
        return chart(2, [](const VecD& x, const VecD& y) {
            double s = std::sin(x(0));
            return std::sqrt(y(0) * y(0) + s * s * y(1) * y(1));
        });
    }
    if (name == "poincare") {
        return chart(2, [](const VecD& x, const VecD& y) {
            double r2 = x.squaredNorm();
            return 2.0 * y.norm() / (1.0 - r2);
        });
    }
    if (name == "sphere2xR") {
        return chart(3, [](const VecD& x, const VecD& y) {
            double s = std::sin(x(0));
            return std::sqrt(y(0) * y(0) + s * s * y(1) * y(1) + y(2) * y(2));
        });
    }
    throw std::invalid_argument("make_metric: unknown metric '" + name + "'");
}

ChartMetric metric_from_json_text(const std::string& json_text) {
    nlohmann::json doc = nlohmann::json::parse(json_text);
    std::size_t n = doc.at("dimension").get<std::size_t>();
    std::string kind = doc.at("kind").get<std::string>();
    const auto& params = doc.at("parameters");

    std::map<std::string, int> xvars, xyvars;
    for (std::size_t i = 0; i < n; ++i) {
        xvars["x" + std::to_string(i + 1)] = static_cast<int>(i);
        xyvars["x" + std::to_string(i + 1)] = static_cast<int>(i);
        xyvars["y" + std::to_string(i + 1)] = static_cast<int>(n + i);
    }

    if (kind == "custom_expression") {
        Expr e = Expr::parse(params.at("expression").get<std::string>(), xyvars);
        return ChartMetric{n,
                           [e, n](const VecD& x, const VecD& y) {
                               std::vector<double> v(2 * n);
                               for (std::size_t i = 0; i < n; ++i) {
                                   v[i] = x(static_cast<Eigen::Index>(i));
                                   v[n + i] = y(static_cast<Eigen::Index>(i));
                               }
                               return e.eval(v);
                           },
                           1e-3};
    }

    auto parse_matrix = [&](const nlohmann::json& rows) {
        std::vector<std::vector<Expr>> out;
        for (const auto& row : rows) {
            std::vector<Expr> r;
            for (const auto& cell : row) r.push_back(Expr::parse(cell.get<std::string>(), xvars));
            out.push_back(std::move(r));
        }
        if (out.size() != n) throw std::invalid_argument("metric json: bad matrix shape");
        return out;
    };
    auto eval_matrix = [n](const std::vector<std::vector<Expr>>& g, const VecD& x) {
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = x(static_cast<Eigen::Index>(i));
        MatD out(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                    g[i][j].eval(v);
        return out;
    };

    if (kind == "riemannian_matrix_field") {
        auto g = parse_matrix(params.at("g"));
        return ChartMetric{n,
                           [g, eval_matrix](const VecD& x, const VecD& y) {
                               MatD G = eval_matrix(g, x);
                               return std::sqrt(y.dot(G * y));
                           },
                           1e-3};
    }
    if (kind == "randers") {
        auto alpha = parse_matrix(params.at("alpha"));
        std::vector<Expr> beta;
        for (const auto& cell : params.at("beta"))
            beta.push_back(Expr::parse(cell.get<std::string>(), xvars));
        if (beta.size() != n) throw std::invalid_argument("metric json: bad beta shape");
        return ChartMetric{n,
                           [alpha, beta, eval_matrix, n](const VecD& x, const VecD& y) {
                               MatD A = eval_matrix(alpha, x);
                               std::vector<double> v(n);
                               for (std::size_t i = 0; i < n; ++i)
                                   v[i] = x(static_cast<Eigen::Index>(i));
                               double drift = 0;
                               for (std::size_t i = 0; i < n; ++i)
                                   drift += beta[i].eval(v) * y(static_cast<Eigen::Index>(i));
                               return std::sqrt(y.dot(A * y)) + drift;
                           },
                           1e-3};
    }
    throw std::invalid_argument("metric json: unknown kind '" + kind + "'");
}

} // namespace nhf
