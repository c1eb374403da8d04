#pragma once

#include <functional>

#include "warpcurv/quadrature.hpp"
#include "warpcurv/types.hpp"

namespace warpcurv {

enum class ReciprocalAreaClass {
    finite,
    sigma_bounded_above_only,
    sigma_bounded_below_only,
    unbounded_both,
};

const char* to_string(ReciprocalAreaClass c);

struct ReciprocalAreaReport {
    ReciprocalAreaClass cls = ReciprocalAreaClass::unbounded_both;
    double total = kNaN;       // integral of 1/psi over I, when finite
    bool left_finite = false;  // tail toward inf I
    bool right_finite = false; // tail toward sup I
};

// Positive warping function on an open interval, with derivative access and
// the anchors (t0, sigma0) fixing the antiderivative sigma.
class WarpingFunction {
  public:
    using Fn = std::function<double(double)>;

    WarpingFunction() = default;
    WarpingFunction(Fn psi, Fn dpsi, Fn ddpsi, Interval interval, double t0, double sigma0,
                    double fd_step = 1e-5)
        : psi_(std::move(psi)),
          dpsi_(std::move(dpsi)),
          ddpsi_(std::move(ddpsi)),
          interval_(interval),
          t0_(t0),
          sigma0_(sigma0),
          fd_step_(fd_step) {}

    const Interval& interval() const { return interval_; }
    double t0() const { return t0_; }
    double sigma0() const { return sigma0_; }
    bool analytic() const { return static_cast<bool>(dpsi_); }

    // Validated evaluation: t interior to I, psi(t) > 0.
    double value(double t) const;
    double d1(double t) const;
    double d2(double t) const;

    void require_inside(double t) const;

    // sigma(t) = sigma0 - int_{t0}^{t} du/psi(u), adaptive quadrature.
    double sigma(double t, const QuadratureOptions& opt = {}) const;

    // Probes int_I 1/psi toward both endpoints and classifies boundedness of
    // sigma. Throws InconclusiveClassification when a tail can be resolved
    // neither as convergent nor as divergent within budget.
    ReciprocalAreaReport reciprocal_area(const QuadratureOptions& opt = {}) const;

    // Mirror image: psi_bar(t) = psi(-t) on -I, anchors (-t0, sigma0).
    WarpingFunction reflect() const;

    static WarpingFunction cosh_warp(double t0 = 0.0, double sigma0 = M_PI / 2.0);
    static WarpingFunction exp_warp(double t0 = 0.0, double sigma0 = 1.0);
    static WarpingFunction sinh_warp(double t0 = 1.0);
    static WarpingFunction sin_warp(double t0 = M_PI / 2.0, double sigma0 = 0.0);
    static WarpingFunction linear_warp(double t0 = 1.0, double sigma0 = 0.0);
    static WarpingFunction unit_warp(double t0 = 0.0, double sigma0 = 0.0);

  private:
    Fn psi_;
    Fn dpsi_;
    Fn ddpsi_;
    Interval interval_;
    double t0_ = 0.0;
    double sigma0_ = 0.0;
    double fd_step_ = 1e-5;
};

}  // namespace warpcurv
