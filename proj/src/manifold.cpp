#include "warpcurv/manifold.hpp"

#include <cmath>

namespace warpcurv {

std::vector<Mat> christoffel(const ChartMetric& M, const Vec& x) {
    int m = M.dim();
    Mat ginv = M.inverse(x);  // validates SPD and domain
    std::vector<Mat> dg = M.deriv(x);
    std::vector<Mat> Gamma(m, Mat::Zero(m, m));
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i < m; ++i) {
            for (int j = i; j < m; ++j) {
                double s = 0.0;
                for (int l = 0; l < m; ++l)
                    s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
                Gamma[k](i, j) = 0.5 * s;
                Gamma[k](j, i) = Gamma[k](i, j);
            }
        }
    }
    return Gamma;
}

namespace {

// d_i Gamma^l_jk. Analytic metrics go through second derivatives of g; pure
// finite-difference metrics difference christoffel() itself with a wider step.
std::vector<std::vector<Mat>> christoffel_partials(const ChartMetric& M, const Vec& x) {
    int m = M.dim();
    std::vector<std::vector<Mat>> out(m, std::vector<Mat>(m, Mat::Zero(m, m)));
    if (M.analytic()) {
        Mat ginv = M.inverse(x);
        std::vector<Mat> dg = M.deriv(x);
        std::vector<std::vector<Mat>> d2g = M.deriv2(x);
        // d_i g^{kl} = -(ginv dg_i ginv)^{kl}
        std::vector<Mat> dginv(m);
        for (int i = 0; i < m; ++i) dginv[i] = -ginv * dg[i] * ginv;
        for (int i = 0; i < m; ++i)
            for (int l = 0; l < m; ++l)
                for (int j = 0; j < m; ++j)
                    for (int k = 0; k < m; ++k) {
                        double s = 0.0;
                        for (int p = 0; p < m; ++p) {
                            s += dginv[i](l, p) * (dg[j](k, p) + dg[k](j, p) - dg[p](j, k));
                            s += ginv(l, p) * (d2g[i][j](k, p) + d2g[i][k](j, p) - d2g[i][p](j, k));
                        }
                        out[i][l](j, k) = 0.5 * s;
                    }
        return out;
    }
    double step = std::max(1e-4, M.fd_step());
    Vec xp = x, xm = x;
    for (int i = 0; i < m; ++i) {
        double h = fd_step_at(x[i], step);
        xp[i] = x[i] + h;
        xm[i] = x[i] - h;
        std::vector<Mat> Gp = christoffel(M, xp);
        std::vector<Mat> Gm = christoffel(M, xm);
        for (int l = 0; l < m; ++l) out[i][l] = (Gp[l] - Gm[l]) / (2.0 * h);
        xp[i] = x[i];
        xm[i] = x[i];
    }
    return out;
}

}  // namespace

double RiemannTensor::apply(const Vec& u, const Vec& v, const Vec& w, const Vec& z) const {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) {
        if (u[i] == 0.0) continue;
        for (int j = 0; j < dim; ++j) {
            if (v[j] == 0.0) continue;
            for (int k = 0; k < dim; ++k) {
                if (w[k] == 0.0) continue;
                for (int l = 0; l < dim; ++l)
                    s += u[i] * v[j] * w[k] * z[l] * (*this)(i, j, k, l);
            }
        }
    }
    return s;
}

RiemannTensor riemann(const ChartMetric& M, const Vec& x) {
    int m = M.dim();
    Mat g = M.metric(x);
    std::vector<Mat> Gamma = christoffel(M, x);
    std::vector<std::vector<Mat>> dGamma = christoffel_partials(M, x);

    RiemannTensor R;
    R.dim = m;
    R.low.assign(static_cast<size_t>(m) * m * m * m, 0.0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            for (int k = 0; k < m; ++k) {
                for (int l = 0; l < m; ++l) {
                    // dx^l-component of R(d_i,d_j)d_k, lowered against g
                    double up = dGamma[i][l](j, k) - dGamma[j][l](i, k);
                    for (int p = 0; p < m; ++p)
                        up += Gamma[l](i, p) * Gamma[p](j, k) - Gamma[l](j, p) * Gamma[p](i, k);
                    for (int q = 0; q < m; ++q) R.at(i, j, k, q) += g(l, q) * up;
                }
            }
        }
    return R;
}

double sectional(const ChartMetric& M, const RiemannTensor& R, const Mat& g, const Vec& u,
                 const Vec& v, double degeneracy_tol) {
    (void)M;
    double uu = u.dot(g * u);
    double vv = v.dot(g * v);
    double uv = u.dot(g * v);
    double area2 = uu * vv - uv * uv;
    if (area2 < degeneracy_tol)
        throw DegeneratePlane("plane spanned by u, v is degenerate (|u^v|^2 < tol)");
    return R.apply(u, v, v, u) / area2;
}

double sectional(const ChartMetric& M, const Vec& x, const Vec& u, const Vec& v,
                 double degeneracy_tol) {
    Mat g = M.metric(x);
    RiemannTensor R = riemann(M, x);
    return sectional(M, R, g, u, v, degeneracy_tol);
}

Vec grad(const ChartMetric& M, const ScalarField& f, const Vec& x) {
    M.require_inside(x);
    return M.inverse(x) * f.partials(x);
}

Mat hess(const ChartMetric& M, const ScalarField& f, const Vec& x) {
    M.require_inside(x);
    int m = M.dim();
    Vec df = f.partials(x);
    Mat H = f.second_partials(x);
    std::vector<Mat> Gamma = christoffel(M, x);
    for (int k = 0; k < m; ++k) H -= Gamma[k] * df[k];
    return 0.5 * (H + H.transpose());
}

double divergence_density(const ChartMetric& M, const VectorField& X, const Vec& x) {
    M.require_inside(x);
    int m = M.dim();
    // central differences of sqrt(det g) X^i, component by component
    auto dens = [&](const Vec& p) -> Vec {
        double det = M.metric_unchecked(p).determinant();
        return std::sqrt(det) * X.value(p);
    };
    double sum = 0.0;
    Vec xp = x, xm = x;
    for (int i = 0; i < m; ++i) {
        double h = fd_step_at(x[i], M.fd_step());
        xp[i] = x[i] + h;
        xm[i] = x[i] - h;
        sum += (dens(xp)[i] - dens(xm)[i]) / (2.0 * h);
        xp[i] = x[i];
        xm[i] = x[i];
    }
    double det = M.metric(x).determinant();
    return sum / std::sqrt(det);
}

double divergence_covariant(const ChartMetric& M, const VectorField& X, const Vec& x) {
    M.require_inside(x);
    int m = M.dim();
    Mat J = X.jacobian(x);
    Vec Xv = X.value(x);
    std::vector<Mat> Gamma = christoffel(M, x);
    double s = J.trace();
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) s += Gamma[i](i, k) * Xv[k];
    return s;
}

double divergence(const ChartMetric& M, const VectorField& X, const Vec& x) {
    return divergence_covariant(M, X, x);
}

std::vector<Vec> orthonormal_completion(const Mat& g, const Vec& u) {
    int m = static_cast<int>(u.size());
    std::vector<Vec> basis;
    auto inner = [&](const Vec& a, const Vec& b) { return a.dot(g * b); };
    Vec e0 = u / std::sqrt(inner(u, u));
    basis.push_back(e0);
    for (int k = 0; k < m && static_cast<int>(basis.size()) < m; ++k) {
        Vec cand = Vec::Zero(m);
        cand[k] = 1.0;
        for (const Vec& e : basis) cand -= inner(cand, e) * e;
        double n2 = inner(cand, cand);
        if (n2 > 1e-14) basis.push_back(cand / std::sqrt(n2));
    }
    if (static_cast<int>(basis.size()) != m)
        throw EvaluationFailure("failed to complete orthonormal basis");
    return basis;
}

double ricci_dir(const ChartMetric& M, const RiemannTensor& R, const Mat& g, const Vec& x,
                 const Vec& u, double unit_tol) {
    (void)x;
    int m = static_cast<int>(u.size());
    if (m < 2) throw DimensionTooSmall("ricci_dir needs dimension >= 2");
    double nrm = std::sqrt(u.dot(g * u));
    if (std::abs(nrm - 1.0) > unit_tol) throw NonUnitVector("direction is not g-unit");
    std::vector<Vec> basis = orthonormal_completion(g, u);
    double s = 0.0;
    for (int i = 1; i < m; ++i) s += R.apply(basis[0], basis[i], basis[i], basis[0]);
    return s / (m - 1);
}

double ricci_dir(const ChartMetric& M, const Vec& x, const Vec& u, double unit_tol) {
    Mat g = M.metric(x);
    RiemannTensor R = riemann(M, x);
    return ricci_dir(M, R, g, x, u, unit_tol);
}

}  // namespace warpcurv
