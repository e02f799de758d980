#pragma once

#include "nhf/finsler.hpp"

#include <string>
#include <vector>

namespace nhf {

// Built-in chart metrics.
//   euclidean:<n>      flat Euclidean norm on R^n
//   quartic            locally Minkowski quartic norm on R^2
//   randers            Euclidean + constant drift (1/2, 0) on R^2
//   sphere2            round 2-sphere in polar coordinates (x1, x2)
//   poincare           Poincare disk (curvature -1) on |x| < 1
//   sphere2xR          product of the round 2-sphere with a line
ChartMetric make_metric(const std::string& name);
std::vector<std::string> metric_catalog();

// Metric from a JSON document:
// { "dimension": n,
//   "kind": "riemannian_matrix_field" | "randers" | "custom_expression",
//   "parameters": ... }
// riemannian_matrix_field: parameters.g = n x n matrix of expressions in x1..xn
// randers:                 parameters.alpha = matrix exprs, parameters.beta = covector exprs
// custom_expression:       parameters.expression in x1..xn, y1..yn
ChartMetric metric_from_json_text(const std::string& json_text);

} // namespace nhf
