#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "polyberg/special.hpp"

namespace polyberg {

/// Bidegree of a disc polynomial: m holomorphic, n anti-holomorphic powers.
struct Orders {
    int m;
    int n;
};

struct WeightParam {
    double gamma;  // > -1
};

inline void check_gamma(double gamma) {
    if (gamma <= -1.0) throw std::domain_error("weight exponent must exceed -1");
}

/// Disc polynomial R^g_{m,n}(z, zbar) via the Jacobi-polynomial form,
/// written as z^{m-s} zbar^{n-s} P~_s^{(g,|m-n|)}(2|z|^2-1) with s = min(m,n)
/// so that z = 0 is regular (no division by |z|).
inline cplx disc_poly(double gamma, int m, int n, cplx z) {
    check_gamma(gamma);
    if (m < 0 || n < 0) throw std::domain_error("disc_poly: negative order");
    const int s = std::min(m, n);
    const double x = 2.0 * std::norm(z) - 1.0;
    const double jac = jacobi_eval_normalized(gamma, std::abs(m - n), s, x);
    return ipow(z, m - s) * ipow(std::conj(z), n - s) * jac;
}

inline cplx disc_poly(const WeightParam& g, const Orders& o, cplx z) {
    return disc_poly(g.gamma, o.m, o.n, z);
}

/// The explicit finite double-factorial sum
///   m! n! sum_{j<=min(m,n)} (-1)^j (1-z zbar)^j z^{m-j} zbar^{n-j}
///                           / (j! (g+1)_j (m-j)! (n-j)!),
/// with the coefficient updated by term ratios to avoid factorial overflow.
inline cplx disc_poly_sum(double gamma, int m, int n, cplx z) {
    check_gamma(gamma);
    const int s = std::min(m, n);
    const cplx u = 1.0 - z * std::conj(z);
    cplx acc{0.0};
    double coeff = 1.0;  // m! n! / (j! (g+1)_j (m-j)! (n-j)!) at j = 0
    double sign = 1.0;
    cplx uj{1.0};
    for (int j = 0; j <= s; ++j) {
        acc += sign * coeff * uj * ipow(z, m - j) * ipow(std::conj(z), n - j);
        coeff *= double(m - j) * double(n - j) / ((j + 1.0) * (gamma + 1.0 + j));
        sign = -sign;
        uj *= u;
    }
    return acc;
}

/// Rodrigues-type representation: the n-th z-derivative of
/// z^m (1 - z zbar)^{g+n} expanded in closed form by the Leibniz rule,
/// then scaled by the validated prefactor (-1)^n / (g+1)_n.
///
/// The published display carries the prefactor (-1)^m / (g+1)_m, which
/// fails the cross-representation oracle already at (m,n) = (0,1); the
/// index swap is recorded in the derivation ledger.
inline cplx disc_poly_rodrigues(double gamma, int m, int n, cplx z) {
    check_gamma(gamma);
    const cplx u = 1.0 - z * std::conj(z);
    const int jmax = std::min(n, m);
    cplx acc{0.0};
    for (int j = 0; j <= jmax; ++j) {
        // d^j z^m * d^{n-j} u^{g+n}; the weight power u^{g+j} combines with
        // the outer u^{-g} to the integer power u^j.
        acc += binom(n, j) * falling_factorial(double(m), j) *
               falling_factorial(gamma + n, n - j) * ipow(z, m - j) *
               ipow(-std::conj(z), n - j) * ipow(u, j);
    }
    const double pref =
        (n % 2 == 0 ? 1.0 : -1.0) / pochhammer(gamma + 1.0, n);
    return pref * acc;
}

/// Squared-norm constant d^g_{m,n} = pi m! n! /
/// ((g+1+m+n) (g+1)_m (g+1)_n); log-space past m+n = 30.
inline double disc_norm(double gamma, int m, int n) {
    check_gamma(gamma);
    if (m + n > 30) {
        const double lg = std::log(kPi) + std::lgamma(m + 1.0) +
                          std::lgamma(n + 1.0) - std::log(gamma + 1.0 + m + n) -
                          log_pochhammer(gamma + 1.0, m) -
                          log_pochhammer(gamma + 1.0, n);
        return std::exp(lg);
    }
    return kPi * factorial(m) * factorial(n) /
           ((gamma + 1.0 + m + n) * pochhammer(gamma + 1.0, m) *
            pochhammer(gamma + 1.0, n));
}

inline double disc_norm(const WeightParam& g, const Orders& o) {
    return disc_norm(g.gamma, o.m, o.n);
}

/// k-th Wirtinger zbar-derivative of R^g_{m,j}:
///   0 for j < k, otherwise C(m,j,k,g) R^{g+k}_{m,j-k} with
///   C = (j!/(j-k)!) (g+m+1)_k / (g+1)_k.
///
/// The constant was fixed by differentiating the explicit sum term by term
/// and is confirmed by the finite-difference oracle in the tests; the
/// published display (an undefined "n!" in place of j!/(j-k)!, and a
/// Pochhammer quotient in m+j) is ledgered.
inline cplx dbar_derivative(double gamma, int m, int j, int k, cplx z) {
    check_gamma(gamma);
    if (k < 0) throw std::domain_error("dbar_derivative: negative k");
    if (j < k) return cplx{0.0};
    const double c = falling_factorial(double(j), k) *
                     pochhammer(gamma + m + 1.0, k) / pochhammer(gamma + 1.0, k);
    return c * disc_poly(gamma + k, m, j - k, z);
}

/// Koshelev basis element
///   e_{m,p}(z) = sqrt(m+p+1) / (sqrt(pi) (m+p)!) d_z^p d_zbar^m (|z|^2-1)^{m+p},
/// the derivatives expanded by the bivariate Leibniz rule.  Proportional to
/// R^0_{m,p} with ratio sqrt(m+p+1)/sqrt(pi) (the published remark prints
/// the transposed index pair; see the derivation ledger).
inline cplx koshelev_basis(int m, int p, cplx z) {
    if (m < 0 || p < 0) throw std::domain_error("koshelev_basis: negative index");
    const cplx u = 1.0 - z * std::conj(z);
    // d_zbar^m (z zbar - 1)^{m+p} = ((m+p)!/p!) z^m (z zbar - 1)^p
    cplx acc{0.0};
    const int imax = std::min(m, p);
    for (int i = 0; i <= imax; ++i) {
        // d_z^i z^m * d_z^{p-i} (z zbar - 1)^p, with (z zbar - 1)^i = (-u)^i
        acc += binom(p, i) * falling_factorial(double(m), i) *
               (factorial(p) / factorial(i)) * ipow(z, m - i) *
               ipow(std::conj(z), p - i) * ipow(-u, i);
    }
    const double pref = std::sqrt(m + p + 1.0) /
                        (std::sqrt(kPi) * factorial(m + p)) *
                        pochhammer(p + 1.0, m);
    return pref * acc;
}

/// Radial Zernike polynomial R^{n-m}_{m+n}(r), m <= n, recovered as the
/// g = 0 disc polynomial at the real point r.  No (m+n)! scaling: the
/// published display's factorial prefactor contradicts |R| <= 1 and the
/// classical table values, and is ledgered instead of applied.
inline double zernike_radial(int m, int n, double r) {
    if (m > n) throw std::domain_error("zernike_radial: requires m <= n");
    if (r < 0.0 || r > 1.0)
        throw std::domain_error("zernike_radial: r outside [0,1]");
    return disc_poly(0.0, m, n, cplx(r, 0.0)).real();
}

}  // namespace polyberg
