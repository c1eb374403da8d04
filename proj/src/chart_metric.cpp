#include "warpcurv/chart_metric.hpp"

#include <Eigen/Cholesky>

#include <sstream>

namespace warpcurv {

namespace {

std::string point_str(const Vec& x) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
    os << ")";
    return os.str();
}

}  // namespace

void ChartMetric::require_inside(const Vec& x) const {
    if (x.size() != dim_) throw DimensionMismatch("point dimension does not match chart");
    if (!domain_.contains(x)) throw PointOutsideDomain("point outside chart domain: " + point_str(x));
}

Mat ChartMetric::metric(const Vec& x) const {
    require_inside(x);
    Mat g = g_(x);
    if (g.rows() != dim_ || g.cols() != dim_) throw DimensionMismatch("metric evaluator dimension");
    if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12)
        throw MetricNotSPD("metric not symmetric at " + point_str(x));
    Eigen::LLT<Mat> llt(g);
    if (llt.info() != Eigen::Success)
        throw MetricNotSPD("metric not positive definite at " + point_str(x));
    return g;
}

Mat ChartMetric::inverse(const Vec& x) const {
    Mat g = metric(x);
    return g.llt().solve(Mat::Identity(dim_, dim_));
}

std::vector<Mat> ChartMetric::deriv(const Vec& x) const {
    require_inside(x);
    if (dg_) return dg_(x);
    std::vector<Mat> out(dim_);
    Vec xp = x, xm = x;
    for (int k = 0; k < dim_; ++k) {
        double h = fd_step_at(x[k], fd_step_);
        xp[k] = x[k] + h;
        xm[k] = x[k] - h;
        out[k] = (g_(xp) - g_(xm)) / (2.0 * h);
        xp[k] = x[k];
        xm[k] = x[k];
    }
    return out;
}

std::vector<std::vector<Mat>> ChartMetric::deriv2(const Vec& x) const {
    require_inside(x);
    if (d2g_) return d2g_(x);
    auto dg_at = [this](const Vec& p) -> std::vector<Mat> {
        if (dg_) return dg_(p);
        std::vector<Mat> out(dim_);
        Vec pp = p, pm = p;
        for (int k = 0; k < dim_; ++k) {
            double h = fd_step_at(p[k], fd_step_);
            pp[k] = p[k] + h;
            pm[k] = p[k] - h;
            out[k] = (g_(pp) - g_(pm)) / (2.0 * h);
            pp[k] = p[k];
            pm[k] = p[k];
        }
        return out;
    };
    // Differences of the first derivatives; a wider step keeps the noise of
    // nested differencing in check when those are themselves finite-difference.
    double h0 = dg_ ? fd_step_ : std::max(1e-4, fd_step_);
    std::vector<std::vector<Mat>> out(dim_, std::vector<Mat>(dim_));
    Vec xp = x, xm = x;
    for (int l = 0; l < dim_; ++l) {
        double h = fd_step_at(x[l], h0);
        xp[l] = x[l] + h;
        xm[l] = x[l] - h;
        std::vector<Mat> dp = dg_at(xp);
        std::vector<Mat> dm = dg_at(xm);
        for (int k = 0; k < dim_; ++k) out[k][l] = (dp[k] - dm[k]) / (2.0 * h);
        xp[l] = x[l];
        xm[l] = x[l];
    }
    // Symmetrize in the two derivative slots.
    for (int k = 0; k < dim_; ++k)
        for (int l = 0; l < k; ++l) {
            Mat s = 0.5 * (out[k][l] + out[l][k]);
            out[k][l] = s;
            out[l][k] = s;
        }
    return out;
}

ChartMetric ChartMetric::euclidean(int m) {
    auto g = [m](const Vec&) { return Mat::Identity(m, m); };
    auto dg = [m](const Vec&) { return std::vector<Mat>(m, Mat::Zero(m, m)); };
    auto d2g = [m](const Vec&) {
        return std::vector<std::vector<Mat>>(m, std::vector<Mat>(m, Mat::Zero(m, m)));
    };
    return ChartMetric(m, Box::whole_space(m), g, dg, d2g);
}

ChartMetric ChartMetric::hyperbolic_half_space(int m) {
    Box dom = Box::whole_space(m);
    dom.lo[m - 1] = 0.0;
    auto g = [m](const Vec& x) -> Mat {
        double y = x[m - 1];
        return Mat::Identity(m, m) / (y * y);
    };
    auto dg = [m](const Vec& x) {
        double y = x[m - 1];
        std::vector<Mat> out(m, Mat::Zero(m, m));
        out[m - 1] = -2.0 / (y * y * y) * Mat::Identity(m, m);
        return out;
    };
    auto d2g = [m](const Vec& x) {
        double y = x[m - 1];
        std::vector<std::vector<Mat>> out(m, std::vector<Mat>(m, Mat::Zero(m, m)));
        out[m - 1][m - 1] = 6.0 / (y * y * y * y) * Mat::Identity(m, m);
        return out;
    };
    return ChartMetric(m, dom, g, dg, d2g);
}

ChartMetric ChartMetric::sphere_stereographic(int m) {
    auto g = [m](const Vec& x) -> Mat {
        double u = 1.0 + x.squaredNorm();
        return 4.0 / (u * u) * Mat::Identity(m, m);
    };
    auto dg = [m](const Vec& x) {
        double u = 1.0 + x.squaredNorm();
        std::vector<Mat> out(m);
        for (int k = 0; k < m; ++k) out[k] = -16.0 * x[k] / (u * u * u) * Mat::Identity(m, m);
        return out;
    };
    auto d2g = [m](const Vec& x) {
        double u = 1.0 + x.squaredNorm();
        std::vector<std::vector<Mat>> out(m, std::vector<Mat>(m));
        for (int k = 0; k < m; ++k)
            for (int l = 0; l < m; ++l) {
                double kron = (k == l) ? 1.0 : 0.0;
                double c = -16.0 * (kron * u - 6.0 * x[k] * x[l]) / (u * u * u * u);
                out[k][l] = c * Mat::Identity(m, m);
            }
        return out;
    };
    return ChartMetric(m, Box::whole_space(m), g, dg, d2g);
}

Vec ScalarField::partials(const Vec& x) const {
    if (df_) return df_(x);
    int m = static_cast<int>(x.size());
    Vec out(m);
    Vec xp = x, xm = x;
    for (int k = 0; k < m; ++k) {
        double h = fd_step_at(x[k], fd_step_);
        xp[k] = x[k] + h;
        xm[k] = x[k] - h;
        out[k] = (f_(xp) - f_(xm)) / (2.0 * h);
        xp[k] = x[k];
        xm[k] = x[k];
    }
    return out;
}

Mat ScalarField::second_partials(const Vec& x) const {
    if (d2f_) return d2f_(x);
    int m = static_cast<int>(x.size());
    Mat out(m, m);
    if (df_) {
        Vec xp = x, xm = x;
        for (int l = 0; l < m; ++l) {
            double h = fd_step_at(x[l], fd_step_);
            xp[l] = x[l] + h;
            xm[l] = x[l] - h;
            out.col(l) = (df_(xp) - df_(xm)) / (2.0 * h);
            xp[l] = x[l];
            xm[l] = x[l];
        }
    } else {
        double step = std::max(1e-4, fd_step_);
        double f0 = f_(x);
        Vec xs = x;
        for (int k = 0; k < m; ++k) {
            double hk = fd_step_at(x[k], step);
            xs[k] = x[k] + hk;
            double fp = f_(xs);
            xs[k] = x[k] - hk;
            double fm = f_(xs);
            xs[k] = x[k];
            out(k, k) = (fp - 2.0 * f0 + fm) / (hk * hk);
            for (int l = k + 1; l < m; ++l) {
                double hl = fd_step_at(x[l], step);
                xs[k] = x[k] + hk;
                xs[l] = x[l] + hl;
                double fpp = f_(xs);
                xs[l] = x[l] - hl;
                double fpm = f_(xs);
                xs[k] = x[k] - hk;
                double fmm = f_(xs);
                xs[l] = x[l] + hl;
                double fmp = f_(xs);
                xs[k] = x[k];
                xs[l] = x[l];
                out(k, l) = (fpp - fpm - fmp + fmm) / (4.0 * hk * hl);
            }
        }
    }
    return 0.5 * (out + out.transpose());
}

Mat VectorField::jacobian(const Vec& x) const {
    if (J_) return J_(x);
    int m = static_cast<int>(x.size());
    Vec X0 = X_(x);
    Mat J(X0.size(), m);
    Vec xp = x, xm = x;
    for (int k = 0; k < m; ++k) {
        double h = fd_step_at(x[k], fd_step_);
        xp[k] = x[k] + h;
        xm[k] = x[k] - h;
        J.col(k) = (X_(xp) - X_(xm)) / (2.0 * h);
        xp[k] = x[k];
        xm[k] = x[k];
    }
    return J;
}

}  // namespace warpcurv
