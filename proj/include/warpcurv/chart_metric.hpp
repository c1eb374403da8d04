#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "warpcurv/types.hpp"

namespace warpcurv {

// Riemannian metric on an open coordinate box, with first and (optionally)
// second derivative access. When derivative evaluators are absent they are
// replaced by central finite differences of the next-lower level.
class ChartMetric {
  public:
    using MetricFn = std::function<Mat(const Vec&)>;
    // dg(x)[k] = matrix of partials d_k g_ij
    using Deriv1Fn = std::function<std::vector<Mat>(const Vec&)>;
    // d2g(x)[k][l] = matrix of partials d_k d_l g_ij
    using Deriv2Fn = std::function<std::vector<std::vector<Mat>>(const Vec&)>;

    ChartMetric() = default;
    ChartMetric(int dim, Box domain, MetricFn g, Deriv1Fn dg = nullptr, Deriv2Fn d2g = nullptr,
                double fd_step = 1e-5)
        : dim_(dim),
          domain_(std::move(domain)),
          g_(std::move(g)),
          dg_(std::move(dg)),
          d2g_(std::move(d2g)),
          fd_step_(fd_step) {}

    int dim() const { return dim_; }
    const Box& domain() const { return domain_; }
    bool analytic() const { return static_cast<bool>(dg_); }
    double fd_step() const { return fd_step_; }

    // Validated evaluation: domain membership, symmetry to 1e-12, SPD via
    // Cholesky. Throws PointOutsideDomain / MetricNotSPD.
    Mat metric(const Vec& x) const;
    Mat metric_unchecked(const Vec& x) const { return g_(x); }
    Mat inverse(const Vec& x) const;

    // d_k g_ij, analytic when supplied, central differences otherwise.
    std::vector<Mat> deriv(const Vec& x) const;
    // d_k d_l g_ij; analytic, or differences of deriv().
    std::vector<std::vector<Mat>> deriv2(const Vec& x) const;

    void require_inside(const Vec& x) const;

    double inner(const Vec& x, const Vec& u, const Vec& v) const {
        return u.dot(metric(x) * v);
    }
    double norm(const Vec& x, const Vec& u) const { return std::sqrt(inner(x, u, u)); }

    // Standard charts used across the catalog and the tests.
    static ChartMetric euclidean(int m);
    // Upper half-space model: metric delta_ij / x_m^2 on {x_m > 0}.
    static ChartMetric hyperbolic_half_space(int m);
    // Unit sphere, stereographic chart: 4 delta_ij / (1+|x|^2)^2.
    static ChartMetric sphere_stereographic(int m);

  private:
    int dim_ = 0;
    Box domain_;
    MetricFn g_;
    Deriv1Fn dg_;
    Deriv2Fn d2g_;
    double fd_step_ = 1e-5;
};

// Scalar function on a chart with optional analytic coordinate derivatives.
class ScalarField {
  public:
    using Fn = std::function<double(const Vec&)>;
    using GradFn = std::function<Vec(const Vec&)>;   // coordinate partials
    using HessFn = std::function<Mat(const Vec&)>;   // coordinate second partials

    ScalarField() = default;
    ScalarField(Fn f, GradFn df = nullptr, HessFn d2f = nullptr, double fd_step = 1e-5)
        : f_(std::move(f)), df_(std::move(df)), d2f_(std::move(d2f)), fd_step_(fd_step) {}

    bool analytic() const { return static_cast<bool>(df_); }
    double fd_step() const { return fd_step_; }

    double value(const Vec& x) const { return f_(x); }
    Vec partials(const Vec& x) const;
    Mat second_partials(const Vec& x) const;

  private:
    Fn f_;
    GradFn df_;
    HessFn d2f_;
    double fd_step_ = 1e-5;
};

// Vector field in chart components with optional analytic Jacobian.
class VectorField {
  public:
    using Fn = std::function<Vec(const Vec&)>;
    using JacFn = std::function<Mat(const Vec&)>;  // J(i,k) = d_k X^i

    VectorField() = default;
    VectorField(Fn X, JacFn J = nullptr, double fd_step = 1e-5)
        : X_(std::move(X)), J_(std::move(J)), fd_step_(fd_step) {}

    Vec value(const Vec& x) const { return X_(x); }
    Mat jacobian(const Vec& x) const;

  private:
    Fn X_;
    JacFn J_;
    double fd_step_ = 1e-5;
};

}  // namespace warpcurv
