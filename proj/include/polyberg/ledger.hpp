#pragma once

#include <cmath>
#include <complex>

#include <nlohmann/json.hpp>

#include "polyberg/disc_poly.hpp"
#include "polyberg/kernels.hpp"
#include "polyberg/spaces.hpp"

namespace polyberg {

/// Machine-readable record of every published display whose printed
/// constant failed its numerical oracle, together with the value actually
/// shipped and the oracle evidence.  Displays that were checked and found
/// consistent go under "verified"; sections are [] when empty.
inline nlohmann::json build_derivation_ledger() {
    using json = nlohmann::json;
    json discrepancies = json::array();
    json verified = json::array();

    {
        // Rodrigues prefactor: stated (-1)^m/(g+1)_m, validated (-1)^n/(g+1)_n.
        const double g = 1.0;
        const cplx z{0.3, 0.2};
        const cplx ref = disc_poly_sum(g, 0, 1, z);              // = conj(z)
        const cplx shipped = disc_poly_rodrigues(g, 0, 1, z);
        const cplx stated = -(g + 1.0) * std::conj(z);           // m-indexed prefactor
        discrepancies.push_back(
            {{"id", "rodrigues_prefactor"},
             {"display", "Rodrigues-type representation of R^g_{m,n}"},
             {"stated", "prefactor (-1)^m / (gamma+1)_m"},
             {"validated", "prefactor (-1)^n / (gamma+1)_n"},
             {"evidence",
              {{"case", "gamma=1, m=0, n=1, z=0.3+0.2i"},
               {"explicit_sum_reference", {ref.real(), ref.imag()}},
               {"shipped_abs_error", std::abs(shipped - ref)},
               {"stated_abs_error", std::abs(stated - ref)}}}});
    }

    {
        // dbar-derivative constant: the printed display contains an undefined
        // "n!" (free indices are m, j, k) and a Pochhammer quotient in m+j.
        const double g = 1.0, h = 1e-5;
        double max_resid = 0.0;
        const cplx z{0.31, -0.17};
        for (int m = 0; m <= 4; ++m) {
            for (int j = 1; j <= 4; ++j) {
                auto f = [&](cplx p) { return disc_poly_sum(g, m, j, p); };
                // d/dzbar = (d/dx + i d/dy)/2, central differences
                const cplx fd = 0.5 * ((f(z + h) - f(z - h)) / (2.0 * h) +
                                       cplx(0, 1) * (f(z + cplx(0, h)) -
                                                     f(z - cplx(0, h))) /
                                           (2.0 * h));
                const cplx an = dbar_derivative(g, m, j, 1, z);
                max_resid = std::max(max_resid, std::abs(fd - an));
            }
        }
        discrepancies.push_back(
            {{"id", "dbar_derivative_constant"},
             {"display", "d_zbar^k R^g_{m,j} reduction to R^{g+k}_{m,j-k}"},
             {"stated",
              "n! (gamma+m+1)_k (gamma+1)_{m+j-k} / ((j-k)! (gamma+1)_{m+j}), "
              "with n undefined in the display"},
             {"validated", "(j!/(j-k)!) (gamma+m+1)_k / (gamma+1)_k"},
             {"evidence",
              {{"oracle", "central finite differences of the explicit sum"},
               {"grid", "gamma=1, m<=4, 1<=j<=4, k=1, step 1e-5"},
               {"max_abs_residual", max_resid}}}});
    }

    {
        // Projection-kernel sum: printed as sum_{k=1}^{n} K^g_n.
        const double g = 0.5;
        const cplx z{0.2, 0.1}, w{-0.3, 0.25};
        const double dev = std::abs(poly_kernel(g, 0, z, w) - bergman_kernel(g, z, w));
        discrepancies.push_back(
            {{"id", "poly_projection_kernel_index"},
             {"display", "kernel of the projection onto the order-(n+1) space"},
             {"stated", "sum_{k=1}^{n} K^g_n (constant summand index)"},
             {"validated", "sum_{k=0}^{n} K^g_k"},
             {"evidence",
              {{"check", "n=0 must recover the weighted Bergman kernel"},
               {"abs_deviation_at_n0", dev}}}});
    }

    discrepancies.push_back(
        {{"id", "growth_condition_index"},
         {"display", "sequential characterization of the n-th true space"},
         {"stated", "summand prints |alpha_n|^2 while the summation index is m"},
         {"validated", "|alpha_m|^2"},
         {"evidence",
          {{"check",
            "with |alpha_n|^2 the sum is a constant multiple of a divergent "
            "series for any nonzero alpha_n; |alpha_m|^2 reproduces the "
            "Plancherel energy sum d^g_{m,n}|a_m|^2 used throughout"}}}});

    {
        // Evaluation-bound constant: 2F1 at unit argument with c-a-b = -g-2 < 0.
        const double g = 0.0;
        const double s10 = eval_bound_const(g, 0, 10).partial_sum;
        const double s100 = eval_bound_const(g, 0, 100).partial_sum;
        const double s1000 = eval_bound_const(g, 0, 1000).partial_sum;
        discrepancies.push_back(
            {{"id", "pointwise_bound_constant"},
             {"display", "c = (sum_m 1/d^g_{m,n})^{1/2} via 2F1 at 1"},
             {"stated", "finite constant c with |f(z)| <= c ||f||"},
             {"validated",
              "the series diverges for every gamma > -1 (terms grow like "
              "m^{gamma+1}); the printed constant is infinite"},
             {"evidence",
              {{"partial_sums_gamma0_n0", {s10, s100, s1000}},
               {"convergence_criterion", "2F1 at 1 needs c-a-b = -gamma-2 > 0"}}}});
    }

    {
        // "Probability" measure remark: the mass of dmu_g is pi/(gamma+1).
        const auto q = build_quad_rule(1.0, 32, 16);
        double mass = 0.0;
        for (double w : q.weights) mass += w;
        discrepancies.push_back(
            {{"id", "measure_normalization"},
             {"display", "dmu_g described as a weighted (probability) measure"},
             {"stated", "total mass 1"},
             {"validated",
              "total mass pi/(gamma+1); the measure is shipped non-normalized, "
              "consistent with d^g_{0,0} = pi/(gamma+1)"},
             {"evidence",
              {{"quadrature_mass_gamma1", mass},
               {"expected_pi_over_2", kPi / 2.0}}}});
    }

    {
        // Koshelev reduction: stated proportional to R^0_{p,m}; the Leibniz
        // expansion of the defining derivatives gives R^0_{m,p}.
        const int m = 2, p = 1;
        const cplx z1{0.3, 0.1}, z2{-0.2, 0.4};
        const cplx r1 = koshelev_basis(m, p, z1) / disc_poly(0.0, m, p, z1);
        const cplx r2 = koshelev_basis(m, p, z2) / disc_poly(0.0, m, p, z2);
        const cplx s1 = koshelev_basis(m, p, z1) / disc_poly(0.0, p, m, z1);
        const cplx s2 = koshelev_basis(m, p, z2) / disc_poly(0.0, p, m, z2);
        discrepancies.push_back(
            {{"id", "koshelev_reduction_index"},
             {"display", "e_{m,p} reduce to the gamma=0 disc polynomials"},
             {"stated", "e_{m,p} proportional to R^0_{p,m}"},
             {"validated",
              "e_{m,p} = sqrt(m+p+1)/sqrt(pi) R^0_{m,p} (transposed indices)"},
             {"evidence",
              {{"case", "m=2, p=1 at two sample points"},
               {"ratio_to_R_mp_spread", std::abs(r1 - r2)},
               {"ratio_to_R_pm_spread", std::abs(s1 - s2)},
               {"constant", std::sqrt((m + p + 1.0) / kPi)}}}});
    }

    {
        // Zernike display: (m+n)! prefactor and phase sign.
        const double shipped = zernike_radial(1, 1, 0.5);
        discrepancies.push_back(
            {{"id", "zernike_display"},
             {"display", "R^0_{m,n} in terms of radial Zernike polynomials"},
             {"stated", "(m+n)! e^{i(n-m)arg z} R^{n-m}_{m+n}(|z|)"},
             {"validated",
              "e^{i(m-n)arg z} R^{n-m}_{m+n}(|z|): no factorial (it would "
              "contradict |R| <= 1) and conjugate phase"},
             {"evidence",
              {{"case", "m=1, n=1, r=0.5"},
               {"shipped", shipped},
               {"classical_R02", 2.0 * 0.25 - 1.0},
               {"with_factorial", 2.0 * (2.0 * 0.25 - 1.0)}}}});
    }

    {
        // Displays that passed their oracles unchanged.
        verified.push_back(
            {{"id", "norm_constant"},
             {"display", "d^g_{m,n} = pi m! n! / ((g+1+m+n)(g+1)_m (g+1)_n)"},
             {"evidence", "quadrature Gram diagonal matches to 1e-10"}});
        verified.push_back(
            {{"id", "xi_summation"},
             {"display", "sum_m x^m/d^g_{m,n} = (g+n+1)(g+1)_n/(pi n!) 2F1"},
             {"evidence", "direct 200-term series oracle"}});
        verified.push_back(
            {{"id", "closed_kernel"},
             {"display", "true-space kernel as an n-fold mixed derivative of 2F1"},
             {"evidence", "basis-series form, M=400, agreement to 1e-8"}});
    }

    return json{{"schema_version", 1},
                {"discrepancies", discrepancies},
                {"verified", verified}};
}

}  // namespace polyberg
