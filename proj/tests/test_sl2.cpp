#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2cx/sl2.hpp"

#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace sl2cx;

namespace {
const cplx kI(0.0, 1.0);
}

TEST_CASE("bracket table and antisymmetry")
{
    CHECK(oracle::dist(bracket(basis_U(), basis_H()), 2.0 * basis_W()) == 0.0);
    CHECK(oracle::dist(bracket(basis_U(), basis_W()), -2.0 * basis_H()) == 0.0);
    CHECK(oracle::dist(bracket(basis_H(), basis_W()), -2.0 * basis_U()) == 0.0);

    oracle::Rng rng(11);
    for (int k = 0; k < 50; ++k) {
        const AlgebraVector X = rng.complex_vector(2.0);
        const AlgebraVector Y = rng.complex_vector(2.0);
        CHECK(max_abs(bracket(X, X)) < 1e-14);
        CHECK(oracle::dist(bracket(X, Y), -1.0 * bracket(Y, X)) < 1e-14);
        // against the matrix commutator
        const Mat2c mx = matrix_of(X), my = matrix_of(Y);
        CHECK(oracle::dist(bracket(X, Y), vector_of(mx * my - my * mx)) < 1e-13);
    }
}

TEST_CASE("Killing form values and oracle agreement")
{
    CHECK(killing_form(basis_H(), basis_H()) == doctest::Approx(8.0));
    CHECK(killing_form(basis_U(), basis_U()) == doctest::Approx(-8.0));
    CHECK(killing_form(basis_U(), basis_H()) == doctest::Approx(0.0));
    CHECK(killing_form(basis_W(), basis_W()) == doctest::Approx(8.0));

    oracle::Rng rng(12);
    for (int k = 0; k < 100; ++k) {
        const AlgebraVector X = rng.real_vector(3.0);
        const AlgebraVector Y = rng.real_vector(3.0);
        CHECK(killing_form(X, Y) ==
              doctest::Approx(oracle::killing_by_trace(X, Y)).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)killing_form(kI * basis_U(), basis_U()), std::domain_error);
}

TEST_CASE("exp in closed form")
{
    CHECK(oracle::dist(exp_group(AlgebraVector{}).mat(), Mat2c{}) == 0.0);

    // exp(i pi/4 H) = diag(e^{i pi/4}, e^{-i pi/4})
    const double quarter = std::numbers::pi / 4.0;
    const GroupElement g0 = exp_group(kI * quarter * basis_H());
    CHECK(std::abs(g0.mat().a - std::polar(1.0, quarter)) < 1e-15);
    CHECK(std::abs(g0.mat().d - std::polar(1.0, -quarter)) < 1e-15);
    CHECK(std::abs(g0.mat().b) + std::abs(g0.mat().c) == 0.0);

    oracle::Rng rng(13);
    for (int k = 0; k < 300; ++k) {
        const AlgebraVector Z = rng.complex_vector(1.5);
        CHECK(oracle::dist(exp_group(Z).mat(), oracle::exp_taylor(matrix_of(Z))) < 1e-10);
    }
}

TEST_CASE("determinant of exp(iX) for 1000 random real X")
{
    oracle::Rng rng(14);
    for (int k = 0; k < 1000; ++k) {
        const AlgebraVector X = rng.real_vector(2.0);
        const GroupElement g = exp_group(kI * X); // construction checks det within 1e-10
        CHECK(std::abs(g.mat().det() - 1.0) < 1e-10);
    }
}

TEST_CASE("entire C~ and S~ are even in sqrt(q) and continuous at the switch")
{
    oracle::Rng rng(15);
    for (int k = 0; k < 100; ++k) {
        const cplx q(rng.uniform(-4.0, 4.0), rng.uniform(-4.0, 4.0));
        const cplx r = std::sqrt(q);
        CHECK(std::abs(eval_C_entire(q) - std::cosh(-r)) < 1e-12 * (1.0 + std::abs(std::cosh(r))));
        CHECK(std::abs(eval_S_entire(q) - std::sinh(-r) / (-r)) < 1e-12);
    }
    // series vs direct around |q| = 1e-3
    for (int k = 0; k < 200; ++k) {
        const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const cplx q = std::polar(rng.uniform(5e-4, 2e-3), phase);
        CHECK(std::abs(eval_C_entire(q) - std::cosh(std::sqrt(q))) < 1e-12);
        CHECK(std::abs(eval_S_entire(q) - std::sinh(std::sqrt(q)) / std::sqrt(q)) < 1e-12);
    }
}

TEST_CASE("adjoint basics")
{
    oracle::Rng rng(16);
    const AlgebraVector X = rng.complex_vector(1.0);
    CHECK(oracle::dist(adjoint(GroupElement::identity(), X), X) < 1e-15);

    // p rotates with angular speed 2 under exp(tU)
    for (const double t : {0.2, 0.9, 2.4}) {
        const GroupElement k = exp_group(t * basis_U());
        const AlgebraVector img = adjoint(k, basis_H());
        const AlgebraVector expect =
            std::cos(2.0 * t) * basis_H() + std::sin(2.0 * t) * basis_W();
        CHECK(oracle::dist(img, expect) < 1e-13);
    }

    // automorphism property on the bracket
    for (int k = 0; k < 50; ++k) {
        const GroupElement g = rng.random_group(1.0);
        const AlgebraVector A = rng.complex_vector(1.0);
        const AlgebraVector B = rng.complex_vector(1.0);
        CHECK(oracle::dist(adjoint(g, bracket(A, B)), bracket(adjoint(g, A), adjoint(g, B))) <
              1e-11);
    }
}

TEST_CASE("adjoint preserves the Killing form for real g")
{
    oracle::Rng rng(17);
    for (int k = 0; k < 200; ++k) {
        const GroupElement g = rng.random_real_group(1.2);
        const AlgebraVector X = rng.real_vector(2.0);
        const AlgebraVector Y = rng.real_vector(2.0);
        CHECK(killing_form(adjoint(g, X), adjoint(g, Y)) ==
              doctest::Approx(killing_form(X, Y)).epsilon(1e-8).scale(10.0));
    }
}

TEST_CASE("ad tower of the first Appendix computation is exact")
{
    // With u = 1, a = 1, m = 2 and X = i(umU - aH):
    // ad X (U) = 2a iW, ad^2 X (U) = -4a(aU - umH),
    // ad^3 X (U) = 8a(u^2m^2 - a^2) iW, ad^4 X (U) = -16a(u^2m^2-a^2)(aU - umH).
    const double u = 1.0, a = 1.0, m = 2.0;
    const AlgebraVector X = kI * (u * m * basis_U() - a * basis_H());
    const AlgebraVector t1 = bracket(X, basis_U());
    const AlgebraVector t2 = bracket(X, t1);
    const AlgebraVector t3 = bracket(X, t2);
    const AlgebraVector t4 = bracket(X, t3);
    const double d = u * u * m * m - a * a;
    CHECK(oracle::dist(t1, (2.0 * a) * (kI * basis_W())) == 0.0);
    CHECK(oracle::dist(t2, (-4.0 * a) * (a * basis_U() - u * m * basis_H())) == 0.0);
    CHECK(oracle::dist(t3, (8.0 * a * d) * (kI * basis_W())) == 0.0);
    CHECK(oracle::dist(t4, (-16.0 * a * d) * (a * basis_U() - u * m * basis_H())) == 0.0);
}

TEST_CASE("ad_series: truncation basics and conjugation oracle")
{
    oracle::Rng rng(18);
    const AlgebraVector Y = rng.complex_vector(1.0);
    CHECK(oracle::dist(ad_series(rng.complex_vector(1.0), Y, 0), Y) == 0.0);

    for (int k = 0; k < 100; ++k) {
        const AlgebraVector X = rng.complex_vector(1.0);
        const AlgebraVector Z = rng.complex_vector(1.0);
        CHECK(oracle::dist(ad_series(X, Z, 40), adjoint(exp_group(X), Z)) < 1e-8);
    }
    CHECK_THROWS_AS((void)ad_series(Y, Y, 61), std::invalid_argument);
    CHECK_THROWS_AS((void)d_exp(Y, Y, 61), std::invalid_argument);
}

TEST_CASE("d_exp: l = 0 term and finite-difference oracle")
{
    oracle::Rng rng(19);
    const AlgebraVector Y = rng.complex_vector(1.0);
    CHECK(oracle::dist(d_exp(AlgebraVector{}, Y, 17), Y) == 0.0);

    // (D exp)_X(Y) left-translated: exp(X)^{-1} (exp(X+hY)-exp(X-hY))/(2h)
    for (int k = 0; k < 60; ++k) {
        const AlgebraVector X = rng.complex_vector(0.8);
        const AlgebraVector Z = rng.complex_vector(0.8);
        const double h = 1e-6;
        const Mat2c plus = exp_group(X + h * Z).mat();
        const Mat2c minus = exp_group(X - h * Z).mat();
        const Mat2c fd = exp_group(X).inverse().mat() * (cplx(1.0 / (2.0 * h)) * (plus - minus));
        CHECK(oracle::dist(d_exp(X, Z, 40), vector_of(fd)) < 1e-6);
    }
}

TEST_CASE("sigma_G fixes real matrices and is involutive")
{
    oracle::Rng rng(20);
    const GroupElement gr = rng.random_real_group(1.0);
    CHECK(oracle::dist(sigma_G(gr).mat(), gr.mat()) == 0.0);

    const GroupElement e_tilde{Mat2c{kI, 0.0, 0.0, -kI}};
    CHECK(oracle::dist(sigma_G(e_tilde).mat(), e_tilde.inverse().mat()) == 0.0);

    for (int k = 0; k < 50; ++k) {
        const GroupElement g = rng.random_group(1.0);
        CHECK(oracle::dist(sigma_G(sigma_G(g)).mat(), g.mat()) == 0.0);
    }
}

TEST_CASE("sigma_SU11 fixes SU(1,1) and is involutive")
{
    CHECK(oracle::dist(sigma_SU11(GroupElement::identity()).mat(), Mat2c{}) == 0.0);

    oracle::Rng rng(21);
    for (int k = 0; k < 50; ++k) {
        // A carries SL2(R) onto SU(1,1)
        const GroupElement su = cayley_A(rng.random_real_group(1.0));
        CHECK(oracle::dist(sigma_SU11(su).mat(), su.mat()) < 1e-13);

        const GroupElement g = rng.random_group(1.0);
        CHECK(oracle::dist(sigma_SU11(sigma_SU11(g)).mat(), g.mat()) < 1e-12);
    }
}

TEST_CASE("Cayley automorphism: basis map, exponential naturality, equivariance")
{
    const cplx i = kI;
    CHECK(oracle::dist(cayley_A_alg(basis_U()), i * basis_H()) == 0.0);
    CHECK(oracle::dist(cayley_A_alg(basis_H()), i * basis_U()) == 0.0);
    CHECK(oracle::dist(cayley_A_alg(basis_W()), basis_W()) == 0.0);

    oracle::Rng rng(22);
    for (int k = 0; k < 60; ++k) {
        const AlgebraVector X = rng.complex_vector(1.0);
        CHECK(oracle::dist(cayley_A(exp_group(X)).mat(), exp_group(cayley_A_alg(X)).mat()) <
              1e-10);

        const GroupElement g = rng.random_group(1.0);
        CHECK(oracle::dist(cayley_A(sigma_G(g)).mat(), sigma_SU11(cayley_A(g)).mat()) < 1e-12);
    }

    // the conjugator itself is validated at startup; it must load fine
    CHECK(std::abs(cayley_conjugator().mat().det() - 1.0) < 1e-14);
}
