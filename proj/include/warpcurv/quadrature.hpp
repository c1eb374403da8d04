#pragma once

#include <functional>

#include "warpcurv/types.hpp"

namespace warpcurv {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    long eval_budget = 1000000;
    double divergence_cap = 1e8;
};

// Adaptive Simpson on a finite interval. Throws QuadratureNonConvergent when
// the evaluation budget is exhausted before the tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt = {});

enum class TailStatus { converged, divergent, inconclusive };

struct TailResult {
    TailStatus status = TailStatus::inconclusive;
    double value = 0.0;  // meaningful only when converged
    int levels = 0;
};

// Improper integral of f from `from` toward the open endpoint `endpoint`
// (finite or +/-inf, on either side of `from`). The endpoint is approached
// through a geometric sequence of cut points; the per-level contributions are
// monitored both against the divergence cap and for failure to decay.
TailResult integrate_to_endpoint(const std::function<double(double)>& f, double from,
                                 double endpoint, const QuadratureOptions& opt = {});

}  // namespace warpcurv
