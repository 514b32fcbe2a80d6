#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracles.hpp"
#include "polyberg/io.hpp"
#include "polyberg/kernels.hpp"
#include "polyberg/spaces.hpp"

using namespace polyberg;

namespace {

ComplexFn basis_fn(double g, int m, int n) {
    return [=](cplx z) { return disc_poly(g, m, n, z); };
}

}  // namespace

TEST_CASE("quadrature mass and first moments") {
    for (double g : {-0.5, 0.0, 1.0, 2.5}) {
        const auto q = build_quad_rule(g, 32, 32);
        double mass = 0.0;
        cplx zbar_mom{0.0};
        double r2 = 0.0;
        for (size_t i = 0; i < q.nodes.size(); ++i) {
            mass += q.weights[i];
            zbar_mom += q.weights[i] * q.nodes[i];
            r2 += q.weights[i] * std::norm(q.nodes[i]);
        }
        CHECK(mass == doctest::Approx(kPi / (g + 1.0)).epsilon(1e-12));
        CHECK(std::abs(zbar_mom) < 1e-14);  // angular symmetry kills z
        // 1-D radial oracle: 2 pi int r^3 (1-r^2)^g dr
        const double ref = 2.0 * kPi *
                           (0.5 / (g + 1.0) - 0.5 / (g + 2.0));
        CHECK(r2 == doctest::Approx(ref).epsilon(1e-12));
    }
    // gamma = 0 special value from the spec of the radial oracle: pi/2
    const auto q0 = build_quad_rule(0.0, 16, 8);
    double r2 = 0.0;
    for (size_t i = 0; i < q0.nodes.size(); ++i)
        r2 += q0.weights[i] * std::norm(q0.nodes[i]);
    CHECK(r2 == doctest::Approx(kPi / 2.0).epsilon(1e-13));
}

TEST_CASE("angular rule integrates pure phases to zero") {
    const auto q = build_quad_rule(1.0, 4, 16);
    for (int k = 1; k < 16; ++k) {
        cplx acc{0.0};
        for (size_t i = 0; i < q.nodes.size(); ++i) {
            const double th = std::arg(q.nodes[i]);
            acc += q.weights[i] * std::exp(cplx(0.0, k * th));
        }
        CHECK(std::abs(acc) < 1e-13);
    }
}

TEST_CASE("inner products: orthogonality and closed norms") {
    for (double g : {-0.5, 0.0, 1.0, 2.5}) {
        const auto q = build_quad_rule(g, 48, 64);
        CHECK(std::abs(inner_product(basis_fn(g, 0, 0), basis_fn(g, 0, 0), q) -
                       kPi / (g + 1.0)) < 1e-12);
        // <z, zbar> = 0 by the angular integral of e^{2 i theta}
        auto zf = [](cplx z) { return z; };
        auto zb = [](cplx z) { return std::conj(z); };
        CHECK(std::abs(inner_product(zf, zb, q)) < 1e-14);
        CHECK(std::abs(inner_product(basis_fn(g, 2, 1), basis_fn(g, 2, 1), q) -
                       disc_norm(g, 2, 1)) < 1e-11);
        CHECK(std::abs(inner_product(basis_fn(g, 2, 1), basis_fn(g, 1, 2), q)) <
              1e-12);
    }
}

TEST_CASE("gram matrix diagonal over the parameter grid") {
    for (double g : {-0.5, 0.0, 1.0, 2.5}) {
        const auto q = build_quad_rule(g, 48, 64);
        const int M = 8, J = 4;
        const auto B = basis_matrix(g, M, J, q);
        Eigen::VectorXd w =
            Eigen::Map<const Eigen::VectorXd>(q.weights.data(), q.weights.size());
        const Eigen::MatrixXcd G = B.adjoint() * w.asDiagonal() * B;
        for (int c1 = 0; c1 < G.rows(); ++c1) {
            for (int c2 = 0; c2 < G.cols(); ++c2) {
                const int m1 = c1 / (J + 1), j1 = c1 % (J + 1);
                const double expect =
                    (c1 == c2) ? disc_norm(g, m1, j1) : 0.0;
                const int m2 = c2 / (J + 1), j2 = c2 % (J + 1);
                const double scale =
                    (c1 == c2) ? expect
                               : std::sqrt(disc_norm(g, m1, j1) *
                                           disc_norm(g, m2, j2));
                CHECK(std::abs(G(c1, c2) - expect) <= 1e-10 * scale);
            }
        }
    }
}

TEST_CASE("expand recovers basis elements and linear combinations") {
    const double g = 0.7;
    const auto q = build_quad_rule(g, 48, 64);
    {
        const auto t = expand(basis_fn(g, 2, 1), 6, 3, q);
        for (int m = 0; m <= 6; ++m)
            for (int j = 0; j <= 3; ++j)
                CHECK(std::abs(t.a(m, j) - ((m == 2 && j == 1) ? 1.0 : 0.0)) <
                      1e-10);
    }
    {
        // zbar^2 = R_{0,2}
        auto f = [](cplx z) { return std::conj(z) * std::conj(z); };
        const auto t = expand(f, 4, 3, q);
        for (int m = 0; m <= 4; ++m)
            for (int j = 0; j <= 3; ++j)
                CHECK(std::abs(t.a(m, j) - ((m == 0 && j == 2) ? 1.0 : 0.0)) <
                      1e-10);
    }
    {
        auto f = [&](cplx z) {
            return 3.0 * disc_poly(g, 1, 0, z) -
                   cplx(0, 2) * disc_poly(g, 4, 3, z);
        };
        const auto t = expand(f, 5, 4, q);
        CHECK(std::abs(t.a(1, 0) - 3.0) < 1e-9);
        CHECK(std::abs(t.a(4, 3) - cplx(0, -2)) < 1e-9);
    }
}

TEST_CASE("projections: reproducing, annihilating, splitting") {
    const double g = 0.5;
    const auto q = build_quad_rule(g, 48, 64);
    const auto pts = oracle::disc_points(30, 0.8, 17);
    {
        auto p = project_true(basis_fn(g, 3, 2), 2, 8, q);
        for (const cplx z : pts)
            CHECK(std::abs(p(z) - disc_poly(g, 3, 2, z)) < 1e-9);
    }
    {
        auto p = project_true(basis_fn(g, 3, 1), 2, 8, q);
        for (const cplx z : pts) CHECK(std::abs(p(z)) < 1e-9);
    }
    {
        // f = z + zbar splits: the holomorphic part is the n = 0 component
        auto f = [](cplx z) { return z + std::conj(z); };
        auto p = project_true(f, 0, 8, q);
        for (const cplx z : pts) CHECK(std::abs(p(z) - z) < 1e-9);
    }
    {
        // order-3 monomial dies under the order-2 projection
        auto f = [](cplx z) { return ipow(std::conj(z), 3); };
        auto p = project_poly(f, 2, 8, q);
        for (const cplx z : pts) CHECK(std::abs(p(z)) < 1e-9);
    }
    {
        // finite combination of order <= n is reproduced by project_poly
        const auto rp = random_polyanalytic(g, 2, 5, 77);
        auto p = project_poly(rp.fn, 2, 8, q);
        for (const cplx z : pts) CHECK(std::abs(p(z) - rp.fn(z)) < 1e-9);
    }
}

TEST_CASE("membership tests") {
    const double g = 1.0;
    const auto q = build_quad_rule(g, 48, 64);
    {
        // (1-|z|^2) * holomorphic polynomial is 2-analytic (order index 1)
        auto f = [](cplx z) {
            return (1.0 - std::norm(z)) * (z * z + 0.5 * z - 1.0);
        };
        CHECK(membership_test(f, 1, 10, 5, q, 1e-6).member);
        CHECK_FALSE(membership_test(f, 0, 10, 5, q, 1e-6).member);
    }
    {
        auto f = [](cplx z) { return ipow(z, 3); };
        CHECK(membership_test(f, 0, 10, 5, q, 1e-6).member);
    }
    {
        const int n = 2;
        auto f = [](cplx z) { return ipow(std::conj(z), 3); };
        const auto res = membership_test(f, n, 10, 5, q, 1e-6);
        CHECK_FALSE(res.member);
        CHECK(res.residual == doctest::Approx(res.total).epsilon(1e-9));
    }
}

TEST_CASE("random polyanalytic round trip, orthogonality, Pythagoras") {
    const double g = 0.5;
    const auto q = build_quad_rule(g, 48, 64);
    const auto pts = oracle::disc_points(20, 0.8, 23);
    for (unsigned seed : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u, 9u, 10u}) {
        const auto rp = random_polyanalytic(g, 2, 5, seed);
        const auto t = expand(rp.fn, 5, 2, q);
        CHECK((t.a - rp.truth.a).cwiseAbs().maxCoeff() < 1e-9);
        // membership flips between order and order-1
        CHECK(membership_test(rp.fn, 2, 8, 5, q, 1e-6).member);
        CHECK_FALSE(membership_test(rp.fn, 1, 8, 5, q, 1e-6).member);
        // orthogonal decomposition f = sum_k P_k f
        std::vector<ComplexFn> comp;
        for (int k = 0; k <= 2; ++k)
            comp.push_back(project_true(rp.fn, k, 5, q));
        for (const cplx z : pts) {
            cplx acc{0.0};
            for (auto& c : comp) acc += c(z);
            CHECK(std::abs(acc - rp.fn(z)) < 1e-8);
        }
        for (int k = 0; k < 3; ++k)
            for (int l = k + 1; l <= 2; ++l)
                CHECK(std::abs(inner_product(comp[k], comp[l], q)) < 1e-9);
        // Pythagoras
        double sum = 0.0;
        for (auto& c : comp) sum += norm_squared(c, q);
        const double total = norm_squared(rp.fn, q);
        CHECK(sum == doctest::Approx(total).epsilon(1e-9));
        // idempotence
        auto pp = project_true(comp[1], 1, 5, q);
        for (const cplx z : pts) CHECK(std::abs(pp(z) - comp[1](z)) < 1e-8);
    }
}

TEST_CASE("coefficient-space projection equals the kernel-integral form") {
    const double g = 0.0;
    const auto q = build_quad_rule(g, 64, 128);
    const auto probes = oracle::disc_points(10, 0.6, 37);
    const auto rp = random_polyanalytic(g, 2, 4, 99);
    for (int n = 0; n <= 2; ++n) {
        auto p = project_true(rp.fn, n, 6, q);
        for (const cplx w : probes) {
            // <f, K_n(.,w)> via quadrature against the closed-form kernel
            cplx acc{0.0};
            for (size_t i = 0; i < q.nodes.size(); ++i)
                acc += q.weights[i] * rp.fn(q.nodes[i]) *
                       std::conj(true_kernel_closed({g, n}, q.nodes[i], w).value);
            CHECK(std::abs(acc - p(w)) < 1e-7);
        }
    }
}

TEST_CASE("reproducing pairing returns point values") {
    const double g = 1.0;
    const auto q = build_quad_rule(g, 64, 128);
    const auto probes = oracle::disc_points(5, 0.6, 41);
    for (int n : {0, 1}) {
        for (int m : {0, 2, 5}) {
            for (const cplx w : probes) {
                cplx acc{0.0};
                for (size_t i = 0; i < q.nodes.size(); ++i)
                    acc += q.weights[i] * disc_poly(g, m, n, q.nodes[i]) *
                           std::conj(
                               true_kernel_closed({g, n}, q.nodes[i], w).value);
                CHECK(std::abs(acc - disc_poly(g, m, n, w)) < 1e-7);
            }
        }
    }
}

TEST_CASE("coeff table JSON round trip") {
    const auto rp = random_polyanalytic(1.5, 2, 3, 13);
    const json j = coeff_table_to_json(rp.truth);
    CHECK(j.at("M") == 3);
    CHECK(j.at("J") == 2);
    const auto back = coeff_table_from_json(j);
    CHECK(back.gamma == rp.truth.gamma);
    CHECK((back.a - rp.truth.a).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS(coeff_table_from_json(
        json{{"gamma", 0.0}, {"M", 1}, {"J", 1}, {"coeffs", json::array()}}));
}
