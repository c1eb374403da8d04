#pragma once

#include <vector>

#include "warpcurv/chart_metric.hpp"
#include "warpcurv/types.hpp"

namespace warpcurv {

// Levi-Civita connection coefficients, Gamma[k](i,j) = Gamma^k_ij.
std::vector<Mat> christoffel(const ChartMetric& M, const Vec& x);

// Curvature tensor with the convention
//   R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
// riemann_up[l][i][j][k] is the dx^l-component of R(d_i, d_j) d_k.
struct RiemannTensor {
    int dim = 0;
    // lowered components: low(i,j,k,l) = <R(d_i,d_j)d_k, d_l>
    std::vector<double> low;

    double operator()(int i, int j, int k, int l) const {
        return low[((i * dim + j) * dim + k) * dim + l];
    }
    double& at(int i, int j, int k, int l) {
        return low[((i * dim + j) * dim + k) * dim + l];
    }
    // R(u,v,w,z)
    double apply(const Vec& u, const Vec& v, const Vec& w, const Vec& z) const;
};

RiemannTensor riemann(const ChartMetric& M, const Vec& x);

// Sectional curvature of span(u,v):  K = R(u,v,v,u) / (|u|^2|v|^2 - <u,v>^2).
double sectional(const ChartMetric& M, const Vec& x, const Vec& u, const Vec& v,
                 double degeneracy_tol = 1e-14);
double sectional(const ChartMetric& M, const RiemannTensor& R, const Mat& g, const Vec& u,
                 const Vec& v, double degeneracy_tol = 1e-14);

// Gradient vector field components, (grad f)^i = g^{ij} d_j f.
Vec grad(const ChartMetric& M, const ScalarField& f, const Vec& x);

// Covariant Hessian, Hess_ij = d_i d_j f - Gamma^k_ij d_k f.
Mat hess(const ChartMetric& M, const ScalarField& f, const Vec& x);

// Divergence by the volume-density formula (1/sqrt(det g)) d_i (sqrt(det g) X^i),
// with the density derivative taken by central differences.
double divergence_density(const ChartMetric& M, const VectorField& X, const Vec& x);
// Divergence as the trace of the covariant derivative, d_i X^i + Gamma^i_ik X^k.
double divergence_covariant(const ChartMetric& M, const VectorField& X, const Vec& x);
// Default route (covariant trace).
double divergence(const ChartMetric& M, const VectorField& X, const Vec& x);

// Normalized Ricci curvature in direction u (|u|_g = 1):
// average of sectional curvatures over a g-orthonormal completion of u.
double ricci_dir(const ChartMetric& M, const Vec& x, const Vec& u, double unit_tol = 1e-10);
double ricci_dir(const ChartMetric& M, const RiemannTensor& R, const Mat& g, const Vec& x,
                 const Vec& u, double unit_tol = 1e-10);

// g-orthonormal basis whose first vector is u/|u| (Gram-Schmidt over coordinate
// directions).
std::vector<Vec> orthonormal_completion(const Mat& g, const Vec& u);

}  // namespace warpcurv
