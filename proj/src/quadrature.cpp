#include "warpcurv/quadrature.hpp"

#include <cmath>

#include "warpcurv/errors.hpp"

namespace warpcurv {

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    long evals = 0;
    long budget;

    double eval(double x) {
        if (++evals > budget) throw QuadratureNonConvergent("quadrature evaluation budget exceeded");
        return f(x);
    }
};

double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(SimpsonState& st, double a, double b, double fa, double fm, double fb, double whole,
             double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = st.eval(lm);
    double frm = st.eval(rm);
    double left = simpson(fa, flm, fm, a, m);
    double right = simpson(fm, frm, fb, m, b);
    double err = left + right - whole;
    if (depth > 60) return left + right + err / 15.0;
    if (std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
    return adapt(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adapt(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opt) {
    if (a == b) return 0.0;
    SimpsonState st{f, 0, opt.eval_budget};
    double fa = st.eval(a);
    double fb = st.eval(b);
    double fm = st.eval(0.5 * (a + b));
    double whole = simpson(fa, fm, fb, a, b);
    return adapt(st, a, b, fa, fm, fb, whole, opt.abs_tol, 0);
}

TailResult integrate_to_endpoint(const std::function<double(double)>& f, double from,
                                 double endpoint, const QuadratureOptions& opt) {
    TailResult res;
    const int max_levels = 400;
    const int decay_window = 8;

    // Cut points approaching the endpoint: doubling distance for infinite
    // endpoints, halving gap for finite ones.
    auto cut = [&](int k) -> double {
        if (std::isinf(endpoint)) {
            double d = std::max(1.0, std::abs(from));
            return from + (endpoint > 0 ? 1.0 : -1.0) * d * std::pow(2.0, k);
        }
        return endpoint - (endpoint - from) * std::pow(2.0, -(k + 1));
    };

    QuadratureOptions seg = opt;
    double total = 0.0;
    double prev_cut = from;
    std::vector<double> contributions;
    for (int k = 0; k < max_levels; ++k) {
        double c = cut(k);
        double piece;
        try {
            piece = integrate(f, prev_cut, c, seg);
        } catch (const QuadratureNonConvergent&) {
            res.status = TailStatus::inconclusive;
            res.levels = k;
            return res;
        }
        total += piece;
        prev_cut = c;
        contributions.push_back(std::abs(piece));
        res.levels = k + 1;

        if (std::abs(total) > opt.divergence_cap) {
            res.status = TailStatus::divergent;
            return res;
        }
        if (std::abs(piece) < 0.25 * opt.abs_tol * std::max(1.0, std::abs(total)) && k >= 2) {
            // Two further levels as a guard against premature convergence calls.
            bool settled = true;
            for (int j = 0; j < 2 && settled; ++j) {
                double c2 = cut(k + 1 + j);
                double p2 = integrate(f, prev_cut, c2, seg);
                total += p2;
                prev_cut = c2;
                if (std::abs(p2) >= opt.abs_tol * std::max(1.0, std::abs(total))) settled = false;
            }
            if (settled) {
                res.status = TailStatus::converged;
                res.value = total;
                return res;
            }
        }
        // Non-decaying level contributions signal a divergent tail long before
        // the partial sums reach the cap (e.g. integrands ~ 1/t).
        if (k >= 24) {
            double now = contributions[k];
            double earlier = contributions[k - decay_window];
            if (earlier > 0 && now > 0.98 * earlier) {
                res.status = TailStatus::divergent;
                return res;
            }
        }
    }
    res.status = TailStatus::inconclusive;
    return res;
}

}  // namespace warpcurv
