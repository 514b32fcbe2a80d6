#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace polyberg {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// Thrown when a series fails to meet its tolerance within the term cap.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr double kSeriesTol = 1e-13;
inline constexpr long kSeriesTermCap = 100000;

/// Rising factorial (a)_k = a(a+1)...(a+k-1), forward product.
inline double pochhammer(double a, int k) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= a + i;
    return p;
}

/// log (a)_k for a > 0; used once factorial products would overflow.
inline double log_pochhammer(double a, int k) {
    return std::lgamma(a + k) - std::lgamma(a);
}

/// Falling factorial a(a-1)...(a-k+1).
inline double falling_factorial(double a, int k) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= a - i;
    return p;
}

inline double factorial(int n) {
    double p = 1.0;
    for (int i = 2; i <= n; ++i) p *= i;
    return p;
}

inline double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double p = 1.0;
    for (int i = 0; i < k; ++i) p = p * (n - i) / (i + 1);
    return p;
}

/// Integer power by repeated multiplication; exact for small exponents,
/// unlike the exp/log path of std::pow on complex arguments.
template <typename Scalar>
Scalar ipow(Scalar z, int k) {
    Scalar r{1.0};
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

struct HypergeoParams {
    double a;
    double b;
    double c;
};

/// Gauss hypergeometric series sum_j (a)_j (b)_j / ((c)_j j!) x^j by direct
/// summation with term-ratio updates. Requires |x| < 1 and c not a
/// nonpositive integer.
template <typename Scalar>
Scalar gauss_2f1(double a, double b, double c, Scalar x,
                 double tol = kSeriesTol, long term_cap = kSeriesTermCap) {
    if (std::abs(x) >= 1.0)
        throw std::domain_error("gauss_2f1: |x| must be < 1");
    if (c <= 0.0 && c == std::floor(c))
        throw std::domain_error("gauss_2f1: c is a nonpositive integer");
    Scalar sum{1.0};
    Scalar term{1.0};
    for (long j = 0; j < term_cap; ++j) {
        term *= x * ((a + j) * (b + j) / ((c + j) * (j + 1.0)));
        sum += term;
        if (std::abs(term) <= tol * std::abs(sum)) return sum;
    }
    throw NonConvergence("gauss_2f1: term cap exceeded");
}

inline cplx gauss_2f1(const HypergeoParams& p, cplx x, double tol = kSeriesTol) {
    return gauss_2f1(p.a, p.b, p.c, x, tol);
}

struct JacobiParams {
    double alpha;  // > -1
    double beta;   // > -1
    int degree;    // >= 0
};

/// Standard Jacobi polynomial P_n^{(alpha,beta)}(x) by the three-term
/// recurrence in the degree.
inline double jacobi_eval(double alpha, double beta, int n, double x) {
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::domain_error("jacobi_eval: parameters must exceed -1");
    if (n < 0) throw std::domain_error("jacobi_eval: negative degree");
    if (n == 0) return 1.0;
    double pm1 = 1.0;
    double p = 0.5 * (alpha + beta + 2.0) * x + 0.5 * (alpha - beta);
    for (int k = 2; k <= n; ++k) {
        const double ab = alpha + beta;
        const double c1 = 2.0 * k * (k + ab) * (2.0 * k + ab - 2.0);
        const double c2 = (2.0 * k + ab - 1.0) *
                          ((2.0 * k + ab) * (2.0 * k + ab - 2.0) * x +
                           alpha * alpha - beta * beta);
        const double c3 =
            2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2.0 * k + ab);
        const double next = (c2 * p - c3 * pm1) / c1;
        pm1 = p;
        p = next;
    }
    return p;
}

inline double jacobi_eval(const JacobiParams& p, double x) {
    return jacobi_eval(p.alpha, p.beta, p.degree, x);
}

/// Jacobi polynomial normalized to value 1 at x = 1, computed as the ratio
/// of two recurrence evaluations so the normalization is exact at x = 1.
inline double jacobi_eval_normalized(double alpha, double beta, int n, double x) {
    if (n == 0) return 1.0;
    if (x == 1.0) return 1.0;
    return jacobi_eval(alpha, beta, n, x) / jacobi_eval(alpha, beta, n, 1.0);
}

inline double jacobi_eval_normalized(const JacobiParams& p, double x) {
    return jacobi_eval_normalized(p.alpha, p.beta, p.degree, x);
}

struct QuadPoint {
    double node;
    double weight;
};

/// Gauss-Jacobi rule for the weight (1-t)^beta (1+t)^alpha on [-1,1],
/// by the Golub-Welsch symmetric-tridiagonal eigenproblem of the monic
/// recurrence coefficients. Nodes ascending, weights positive; exact for
/// polynomial degree <= 2*n_nodes - 1.
inline std::vector<QuadPoint> gauss_jacobi_nodes(int n_nodes, double alpha,
                                                 double beta) {
    if (n_nodes < 1) throw std::domain_error("gauss_jacobi_nodes: n_nodes >= 1");
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::domain_error("gauss_jacobi_nodes: exponents must exceed -1");
    // Standard Jacobi weight convention (1-t)^A (1+t)^B.
    const double A = beta, B = alpha;
    const double ab = A + B;
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n_nodes, n_nodes);
    T(0, 0) = (B - A) / (ab + 2.0);
    for (int k = 1; k < n_nodes; ++k) {
        T(k, k) = (B - A) * (B + A) / ((2.0 * k + ab) * (2.0 * k + ab + 2.0));
        double bk2;
        if (k == 1) {
            bk2 = 4.0 * (A + 1.0) * (B + 1.0) /
                  ((ab + 2.0) * (ab + 2.0) * (ab + 3.0));
        } else {
            bk2 = 4.0 * k * (k + A) * (k + B) * (k + ab) /
                  ((2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) *
                   (2.0 * k + ab - 1.0));
        }
        T(k, k - 1) = T(k - 1, k) = std::sqrt(bk2);
    }
    const double mu0 =
        std::pow(2.0, ab + 1.0) *
        std::exp(std::lgamma(A + 1.0) + std::lgamma(B + 1.0) -
                 std::lgamma(ab + 2.0));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    std::vector<QuadPoint> rule(n_nodes);
    for (int i = 0; i < n_nodes; ++i) {
        const double v0 = es.eigenvectors()(0, i);
        rule[i] = {es.eigenvalues()(i), mu0 * v0 * v0};
    }
    return rule;
}

}  // namespace polyberg
