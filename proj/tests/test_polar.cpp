#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2cx/polar.hpp"
#include "sl2cx/scalar_kernel.hpp"

#include "oracles.hpp"

#include <cmath>
#include <numbers>

using namespace sl2cx;

namespace {

const cplx kI(0.0, 1.0);
constexpr double kPi = std::numbers::pi;
constexpr double kPiSq = kPi * kPi;

// The six oracle routes of the appendix computations: conjugation series and
// the d-exp series, each at N = 40.
std::array<AlgebraVector, 6> six_by_series(const SlicePoint& s)
{
    const double u = s.u, a = s.a, m = s.m;
    const AlgebraVector conj_arg = kI * (u * m * basis_U() - a * basis_H());
    const AlgebraVector dexp_arg = kI * (-u * m * basis_U() + a * basis_H());
    std::array<AlgebraVector, 6> v;
    v[0] = ad_series(conj_arg, basis_U(), 40);
    v[1] = ad_series(conj_arg, basis_H(), 40);
    v[2] = ad_series(conj_arg, basis_W(), 40);
    v[3] = d_exp(dexp_arg, (-kI * m) * basis_U(), 40) + (kI * (1.0 + m)) * basis_U();
    v[4] = d_exp(dexp_arg, kI * basis_H(), 40);
    v[5] = d_exp(dexp_arg, kI * basis_W(), 40);
    return v;
}

// Same six vectors through matrix conjugation and finite differences of exp.
std::array<AlgebraVector, 6> six_by_matrices(const SlicePoint& s)
{
    const double u = s.u, a = s.a, m = s.m;
    const GroupElement conj = exp_group(kI * (u * m * basis_U() - a * basis_H()));
    const AlgebraVector dexp_arg = kI * (-u * m * basis_U() + a * basis_H());
    const double h = 1e-6;
    const auto dexp_fd = [&](const AlgebraVector& Y) {
        const Mat2c plus = exp_group(dexp_arg + h * Y).mat();
        const Mat2c minus = exp_group(dexp_arg - h * Y).mat();
        return vector_of(exp_group(dexp_arg).inverse().mat() *
                         (cplx(1.0 / (2.0 * h)) * (plus - minus)));
    };
    std::array<AlgebraVector, 6> v;
    v[0] = adjoint(conj, basis_U());
    v[1] = adjoint(conj, basis_H());
    v[2] = adjoint(conj, basis_W());
    v[3] = dexp_fd((-kI * m) * basis_U()) + (kI * (1.0 + m)) * basis_U();
    v[4] = dexp_fd(kI * basis_H());
    v[5] = dexp_fd(kI * basis_W());
    return v;
}

} // namespace

TEST_CASE("slice point basics")
{
    CHECK_THROWS_AS(SlicePoint(0.0, -0.1, 1.0), std::domain_error);
    const SlicePoint s{0.5, 0.25, -1.5};
    CHECK(s.x() == doctest::Approx(4 * 0.25 * 2.25 - 4 * 0.0625));
    CHECK(s.y() == doctest::Approx(4 * 0.25 * 2.25 - 1.5 * 4 * 0.0625));
}

TEST_CASE("polar map special values")
{
    const TangentPoint origin{GroupElement::identity(), AlgebraVector{}};
    for (const double m : {-2.0, -1.0, 0.0, 1.0})
        CHECK(oracle::dist(polar(m, origin).mat(), Mat2c{}) == 0.0);

    // at m = -1 the K^C factor is trivial: P_{-1}(e, X) = exp(iX)
    oracle::Rng rng(41);
    for (int k = 0; k < 40; ++k) {
        const AlgebraVector X = rng.real_vector(1.0);
        const TangentPoint p{GroupElement::identity(), X};
        CHECK(oracle::dist(polar(-1.0, p).mat(), exp_group(kI * X).mat()) < 1e-13);
    }
}

TEST_CASE("polar map is L-equivariant")
{
    oracle::Rng rng(42);
    for (int k = 0; k < 60; ++k) {
        const double m = rng.uniform(-2.0, 2.0);
        const TangentPoint p{rng.random_real_group(0.7), rng.real_vector(0.8)};
        const GroupElement g = rng.random_real_group(0.7);
        const GroupElement kk = exp_group(rng.uniform(-2.0, 2.0) * basis_U());
        const GroupElement lhs = polar(m, l_action(g, kk, p));
        const GroupElement rhs = g * polar(m, p) * kk.inverse();
        CHECK(oracle::dist(lhs.mat(), rhs.mat()) < 1e-10);
    }
}

TEST_CASE("six vectors at the origin reduce to the identity configuration")
{
    for (const double m : {-1.5, 0.0, 1.0}) {
        const auto v = six_vectors(SlicePoint{0.0, 0.0, m});
        CHECK(oracle::dist(v[0], basis_U()) < 1e-15);
        CHECK(oracle::dist(v[1], basis_H()) < 1e-15);
        CHECK(oracle::dist(v[2], basis_W()) < 1e-15);
        CHECK(oracle::dist(v[3], kI * basis_U()) < 1e-15);
        CHECK(oracle::dist(v[4], kI * basis_H()) < 1e-15);
        CHECK(oracle::dist(v[5], kI * basis_W()) < 1e-15);
    }
}

TEST_CASE("six vectors match the series and matrix oracles on the grid")
{
    // 5 x 5 x 5 grid over [-1,1] x [0,1] x [-2,2]
    for (int iu = 0; iu < 5; ++iu)
        for (int ia = 0; ia < 5; ++ia)
            for (int im = 0; im < 5; ++im) {
                const SlicePoint s{-1.0 + 0.5 * iu, 0.25 * ia, -2.0 + im};
                const auto closed = six_vectors(s);
                const auto series = six_by_series(s);
                const auto mats = six_by_matrices(s);
                for (int j = 0; j < 6; ++j) {
                    CHECK(oracle::dist(closed[size_t(j)], series[size_t(j)]) < 1e-8);
                    CHECK(oracle::dist(closed[size_t(j)], mats[size_t(j)]) < 1e-8);
                }
            }
}

TEST_CASE("first vector's W component is 2 a S(x) i")
{
    oracle::Rng rng(43);
    for (int k = 0; k < 30; ++k) {
        const SlicePoint s{rng.uniform(-1.0, 1.0), rng.uniform(0.0, 1.0),
                           rng.uniform(-2.0, 2.0)};
        const auto v = six_vectors(s);
        CHECK(std::abs(v[0].w - 2.0 * s.a * eval_S(s.x()) * kI) < 1e-14);
    }
}

TEST_CASE("slice determinants: origin, boundary, Jacobian sign")
{
    const auto [d1o, d2o] = slice_determinants(SlicePoint{0.0, 0.0, 0.7});
    CHECK(d1o == doctest::Approx(1.0));
    CHECK(d2o == doctest::Approx(1.0));

    // on the boundary curve y = f(x) at least one determinant vanishes
    for (const double m : {-0.5, 0.0, 1.0})
        for (const double u : {0.0, 0.4, 1.0}) {
            const double a = boundary_a(m, u);
            const auto [d1, d2] = slice_determinants(SlicePoint{u, a, m});
            CHECK(std::min(std::fabs(d1), std::fabs(d2)) < 1e-8);
        }

    // sign(d1 d2) agrees with the numeric Jacobian determinant
    oracle::Rng rng(44);
    int compared = 0;
    while (compared < 1000) {
        const SlicePoint s{rng.uniform(-1.2, 1.2), rng.uniform(0.0, 1.2),
                           rng.uniform(-2.0, 2.0)};
        if (!in_sigma_star(s))
            continue;
        const auto [d1, d2] = slice_determinants(s);
        if (std::fabs(d1 * d2) < 1e-5)
            continue; // too close to the zero set for a sign comparison
        const JacobianResult jac = numeric_jacobian(s.m, s.tangent());
        REQUIRE(d1 * d2 * jac.det > 0.0);
        ++compared;
    }
}

TEST_CASE("membership in Sigma_m^*")
{
    CHECK(in_sigma_star(SlicePoint{0.0, 0.0, 1.0}));
    CHECK_FALSE(in_sigma_star(SlicePoint{0.0, kPi / 2.0, 1.0})); // x = -pi^2 excluded
    CHECK(in_sigma_star(SlicePoint{10.0, 0.0, -1.0}));
}

TEST_CASE("for m <= -1 membership in Sigma_m equals condition (*)")
{
    for (const double m : {-1.0, -2.0}) {
        for (int iu = 0; iu < 100; ++iu)
            for (int ia = 0; ia < 100; ++ia) {
                const SlicePoint s{-5.5 + 11.0 * iu / 99.0, 5.5 * ia / 99.0, m};
                CHECK(in_sigma_m(s) == in_sigma_star(s));
            }
    }
}

TEST_CASE("for m = 1 the u = 0 section of Sigma_m is {a < tilde a}")
{
    // independent oracle: bisect tan(2a) = 4a on (0, pi/4)
    double lo = 1e-9, hi = kPi / 4.0 - 1e-9;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (std::tan(2.0 * mid) - 4.0 * mid < 0.0 ? lo : hi) = mid;
    }
    const double a_tilde = 0.5 * (lo + hi);
    CHECK(a_tilde == doctest::Approx(0.5827805926036056).epsilon(1e-10));

    for (int k = 0; k <= 2000; ++k) {
        const double a = 1.5 * k / 2000.0;
        if (std::fabs(a - a_tilde) < 2e-3)
            continue; // skip the boundary at grid resolution
        CHECK(in_sigma_m(SlicePoint{0.0, a, 1.0}) == (a < a_tilde));
    }
}

TEST_CASE("sigma region is empirically connected at default resolution")
{
    for (const double m : {-2.0, -1.0, -0.5, 0.0, 1.0}) {
        const SigmaRegion& region = SigmaRegion::shared(m);
        CHECK(region.cells_inequalities() > 0);
        CHECK(region.empirically_connected());
    }
}

TEST_CASE("boundary_a: root quality and domain guards")
{
    CHECK(boundary_a(1.0, 0.0) == doctest::Approx(0.5827805926036056).epsilon(1e-10));
    CHECK(boundary_a(0.0, 0.7) == doctest::Approx(kPi / 4.0).epsilon(1e-10));

    oracle::Rng rng(45);
    for (int k = 0; k < 60; ++k) {
        const double m = rng.uniform(-0.95, 1.5);
        const double u = rng.uniform(-1.5, 1.5);
        const double a = boundary_a(m, u);
        const SlicePoint s{u, a, m};
        CHECK(std::fabs(s.y() - eval_f(s.x())) < 1e-10);
        CHECK(s.x() > -kPiSq + 1e-9); // strictly inside Sigma_m^*
    }
    CHECK_THROWS_AS((void)boundary_a(-1.0, 0.3), std::domain_error);
    CHECK_THROWS_AS((void)boundary_a(-1.7, 0.3), std::domain_error);
}

TEST_CASE("numeric Jacobian: origin scale, equivariant singularity")
{
    for (const double m : {-1.5, 0.0, 1.0}) {
        const JacobianResult jac =
            numeric_jacobian(m, TangentPoint{GroupElement::identity(), AlgebraVector{}});
        CHECK(std::fabs(jac.det_normalized) > 0.1);
    }

    // rank drop on the boundary for m > -1, with the 4th/5th vectors still
    // independent there
    for (const double m : {-0.5, 1.0}) {
        const double u = 0.5;
        const double a = boundary_a(m, u);
        const SlicePoint s{u, a, m};
        const JacobianResult jac = numeric_jacobian(m, s.tangent());
        CHECK(std::fabs(jac.det_normalized) < 1e-4);

        const auto v = six_vectors(s);
        const double m1 = v[3].u.imag() * v[4].h.imag() - v[3].h.imag() * v[4].u.imag();
        const double m2 = v[3].u.imag() * v[4].w.real() - v[3].w.real() * v[4].u.imag();
        const double m3 = v[3].h.imag() * v[4].w.real() - v[3].w.real() * v[4].h.imag();
        CHECK(std::max({std::fabs(m1), std::fabs(m2), std::fabs(m3)}) > 1e-6);
    }

    // equivariance: the determinant sign is the same along the L-orbit
    oracle::Rng rng(46);
    for (int k = 0; k < 25; ++k) {
        const double m = rng.uniform(-2.0, 2.0);
        SlicePoint s{rng.uniform(-1.0, 1.0), rng.uniform(0.0, 1.0), m};
        if (!in_sigma_star(s))
            continue;
        const double base = numeric_jacobian(m, s.tangent()).det;
        if (std::fabs(base) < 1e-4)
            continue;
        const GroupElement g = rng.random_real_group(0.6);
        const GroupElement kk = exp_group(rng.uniform(-2.0, 2.0) * basis_U());
        const double moved = numeric_jacobian(m, l_action(g, kk, s.tangent())).det;
        CHECK(base * moved > 0.0);
    }
}
