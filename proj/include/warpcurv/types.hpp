#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "warpcurv/errors.hpp"

namespace warpcurv {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Relative finite-difference step: h = step * max(1, |x|).
inline double fd_step_at(double x, double step) { return step * std::max(1.0, std::abs(x)); }

// Open axis-aligned box; bounds may be infinite.
struct Box {
    Vec lo;
    Vec hi;

    int dim() const { return static_cast<int>(lo.size()); }

    bool contains(const Vec& x, double margin = 0.0) const {
        if (x.size() != lo.size()) return false;
        for (int i = 0; i < lo.size(); ++i) {
            if (!(x[i] > lo[i] + margin) || !(x[i] < hi[i] - margin)) return false;
        }
        return true;
    }

    static Box whole_space(int m) {
        Box b;
        b.lo = Vec::Constant(m, -kInf);
        b.hi = Vec::Constant(m, kInf);
        return b;
    }
};

// Open interval, bounds may be infinite.
struct Interval {
    double lo = -kInf;
    double hi = kInf;

    bool contains(double t, double margin = 0.0) const { return t > lo + margin && t < hi - margin; }
    double midpoint() const {
        if (std::isfinite(lo) && std::isfinite(hi)) return 0.5 * (lo + hi);
        if (std::isfinite(lo)) return lo + 1.0;
        if (std::isfinite(hi)) return hi - 1.0;
        return 0.0;
    }
};

// Tangent vector attached to a chart point.
struct TangentData {
    Vec base;
    Vec vec;
};

// Signs of the terms entering the extrinsic-curvature formulas. The defaults
// are the engine's fixed convention; flipping a single entry is used by the
// sign-mutation self-test to confirm the identity suite detects it.
struct SignConvention {
    double hess_term = -1.0;    // coefficient sign of the Hessian term in the shape form
    double metric_term = +1.0;  // coefficient sign of the psi^3 H <v,w> term
    double grad_term = +1.0;    // coefficient sign of the <grad f,v><grad f,w> term
    double theta = -1.0;        // Theta = theta_sign * psi/W
    double slice_mean = +1.0;   // slice mean curvature = sign * psi'/psi
    double normal_sectional = +1.0;  // slice normal sectional = sign * (-psi''/psi)

    bool is_standard() const {
        return hess_term == -1.0 && metric_term == +1.0 && grad_term == +1.0 && theta == -1.0 &&
               slice_mean == +1.0 && normal_sectional == +1.0;
    }

    // Flips one named sign; recognized names:
    //   shape-hess, shape-metric, shape-grad, theta, slice-mean, normal-sectional
    void flip(const std::string& name);
};

inline void SignConvention::flip(const std::string& name) {
    if (name == "shape-hess")
        hess_term = -hess_term;
    else if (name == "shape-metric")
        metric_term = -metric_term;
    else if (name == "shape-grad")
        grad_term = -grad_term;
    else if (name == "theta")
        theta = -theta;
    else if (name == "slice-mean")
        slice_mean = -slice_mean;
    else if (name == "normal-sectional")
        normal_sectional = -normal_sectional;
    else
        throw ConfigError("unknown sign mutation: " + name);
}

// Engine tolerance ladder; every entry can be overridden from the run config.
struct Tolerances {
    double metric_symmetry = 1e-12;
    double identity_analytic = 1e-8;
    double identity_fd = 1e-5;
    double quadrature_abs = 1e-10;
    double divergence_cap = 1e8;
    double plane_degeneracy = 1e-14;
    double unit_vector = 1e-10;
    double estimate = 1e-3;
    double omori_grad = 1e-4;
    double omori_hess = 1e-3;
};

}  // namespace warpcurv
