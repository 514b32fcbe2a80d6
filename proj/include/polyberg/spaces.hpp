#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "polyberg/disc_poly.hpp"
#include "polyberg/special.hpp"

namespace polyberg {

using ComplexFn = std::function<cplx(cplx)>;

/// Product rule for integrals against dmu_g = (1-|z|^2)^g dxdy on the disc:
/// radial Gauss-Jacobi nodes (after t = 1 - 2r^2 the radial weight becomes
/// (1+t)^g) crossed with uniform angular nodes.  Node order is radial-major,
/// ascending r, for deterministic summation.
struct QuadRule {
    double gamma;
    int radial_count;
    int angular_count;
    std::vector<cplx> nodes;
    std::vector<double> weights;
};

inline QuadRule build_quad_rule(double gamma, int radial_nodes,
                                int angular_nodes) {
    check_gamma(gamma);
    if (radial_nodes < 1 || angular_nodes < 1)
        throw std::domain_error("build_quad_rule: node counts must be >= 1");
    auto gj = gauss_jacobi_nodes(radial_nodes, gamma, 0.0);
    QuadRule q{gamma, radial_nodes, angular_nodes, {}, {}};
    q.nodes.reserve(size_t(radial_nodes) * angular_nodes);
    q.weights.reserve(size_t(radial_nodes) * angular_nodes);
    const double wscale =
        std::pow(2.0, -gamma - 2.0) * (2.0 * kPi / angular_nodes);
    // gj nodes ascend in t; r = sqrt((1-t)/2) descends, so walk t backwards.
    for (int i = radial_nodes - 1; i >= 0; --i) {
        const double r = std::sqrt((1.0 - gj[i].node) / 2.0);
        const double w = wscale * gj[i].weight;
        for (int a = 0; a < angular_nodes; ++a) {
            const double th = 2.0 * kPi * a / angular_nodes;
            q.nodes.push_back(cplx(r * std::cos(th), r * std::sin(th)));
            q.weights.push_back(w);
        }
    }
    return q;
}

/// <f,h>_g = int f conj(h) dmu_g by quadrature, fixed node order.
inline cplx inner_product(const ComplexFn& f, const ComplexFn& h,
                          const QuadRule& q) {
    cplx acc{0.0};
    for (size_t i = 0; i < q.nodes.size(); ++i)
        acc += q.weights[i] * f(q.nodes[i]) * std::conj(h(q.nodes[i]));
    return acc;
}

inline double norm_squared(const ComplexFn& f, const QuadRule& q) {
    double acc = 0.0;
    for (size_t i = 0; i < q.nodes.size(); ++i)
        acc += q.weights[i] * std::norm(f(q.nodes[i]));
    return acc;
}

/// Expansion coefficients a_{m,j} of f in the R^g_{m,j} basis,
/// rows m = 0..M, columns j = 0..J.
struct CoeffTable {
    double gamma;
    int M;
    int J;
    Eigen::MatrixXcd a;  // (M+1) x (J+1)
};

/// Basis values at the quadrature nodes; column index m*(J+1)+j.
inline Eigen::MatrixXcd basis_matrix(double gamma, int M, int J,
                                     const QuadRule& q) {
    const int cols = (M + 1) * (J + 1);
    Eigen::MatrixXcd B(q.nodes.size(), cols);
    for (int m = 0; m <= M; ++m)
        for (int j = 0; j <= J; ++j)
            for (size_t i = 0; i < q.nodes.size(); ++i)
                B(i, m * (J + 1) + j) = disc_poly(gamma, m, j, q.nodes[i]);
    return B;
}

inline CoeffTable expand(const ComplexFn& f, int M, int J, const QuadRule& q) {
    const size_t N = q.nodes.size();
    Eigen::VectorXcd fv(N);
    for (size_t i = 0; i < N; ++i) fv(i) = q.weights[i] * f(q.nodes[i]);
    const Eigen::MatrixXcd B = basis_matrix(q.gamma, M, J, q);
    const Eigen::VectorXcd proj = B.adjoint() * fv;
    CoeffTable t{q.gamma, M, J, Eigen::MatrixXcd(M + 1, J + 1)};
    for (int m = 0; m <= M; ++m)
        for (int j = 0; j <= J; ++j)
            t.a(m, j) = proj(m * (J + 1) + j) / disc_norm(q.gamma, m, j);
    return t;
}

/// Evaluate the finite combination sum a_{m,j} R^g_{m,j} at z.
inline cplx eval_table(const CoeffTable& t, cplx z) {
    cplx acc{0.0};
    for (int m = 0; m <= t.M; ++m)
        for (int j = 0; j <= t.J; ++j)
            if (t.a(m, j) != cplx{0.0})
                acc += t.a(m, j) * disc_poly(t.gamma, m, j, z);
    return acc;
}

inline ComplexFn table_fn(CoeffTable t) {
    return [t = std::move(t)](cplx z) { return eval_table(t, z); };
}

/// Plancherel energy sum d^g_{m,j} |a_{m,j}|^2 of an index range.
inline double table_energy(const CoeffTable& t, int j_lo, int j_hi) {
    double acc = 0.0;
    for (int m = 0; m <= t.M; ++m)
        for (int j = j_lo; j <= std::min(j_hi, t.J); ++j)
            acc += disc_norm(t.gamma, m, j) * std::norm(t.a(m, j));
    return acc;
}

/// Orthogonal projection onto the n-th true space, computed in coefficient
/// space: keep column n of the expansion and resum.
inline ComplexFn project_true(const ComplexFn& f, int n, int M,
                              const QuadRule& q) {
    CoeffTable t = expand(f, M, n, q);
    CoeffTable kept{t.gamma, t.M, t.J,
                    Eigen::MatrixXcd::Zero(t.M + 1, t.J + 1)};
    kept.a.col(n) = t.a.col(n);
    return table_fn(std::move(kept));
}

/// Projection onto the order-(n+1) poly-Bergman space: keep columns j <= n.
inline ComplexFn project_poly(const ComplexFn& f, int n, int M,
                              const QuadRule& q) {
    CoeffTable t = expand(f, M, n, q);
    return table_fn(std::move(t));
}

struct MembershipResult {
    bool member;
    double residual;  // tail energy sum_{j>n} sum_m d |a|^2
    double total;     // quadrature ||f||^2
};

/// Coefficient-vanishing membership test for the order-(n+1) space:
/// member iff the energy in columns j > n stays below tol^2 ||f||^2.
inline MembershipResult membership_test(const ComplexFn& f, int n, int M, int J,
                                        const QuadRule& q, double tol) {
    if (J <= n) throw std::domain_error("membership_test: requires J > n");
    const CoeffTable t = expand(f, M, J, q);
    const double tail = table_energy(t, n + 1, J);
    const double total = norm_squared(f, q);
    return {tail < tol * tol * total, tail, total};
}

struct RandomPolyanalytic {
    CoeffTable truth;
    ComplexFn fn;
};

/// Seeded finite combination sum_{j<=order, m<=degree} c R^g_{m,j} with
/// coefficients uniform in [-1,1]^2; returns both the callable and the
/// exact coefficients.
inline RandomPolyanalytic random_polyanalytic(double gamma, int order,
                                              int degree, unsigned seed) {
    check_gamma(gamma);
    if (order < 0 || degree < 0)
        throw std::domain_error("random_polyanalytic: negative size");
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    CoeffTable t{gamma, degree, order, Eigen::MatrixXcd(degree + 1, order + 1)};
    for (int m = 0; m <= degree; ++m)
        for (int j = 0; j <= order; ++j)
            t.a(m, j) = cplx(dist(rng), dist(rng));
    RandomPolyanalytic out{t, table_fn(t)};
    return out;
}

}  // namespace polyberg
