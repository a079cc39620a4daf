#include "sl2cx/verify.hpp"

#include "sl2cx/figures.hpp"
#include "sl2cx/metric.hpp"
#include "sl2cx/quotient.hpp"
#include "sl2cx/scalar_kernel.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

namespace sl2cx {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPiSq = kPi * kPi;
const cplx kI(0.0, 1.0);

// Residual accumulator; a check passes when every boolean sample held and
// the largest residual stays within tolerance.
class Check {
public:
    Check(std::string name, double tol) : tol_(tol) { result_.name = std::move(name); }

    void residual(double r)
    {
        result_.max_residual = std::max(result_.max_residual, std::fabs(r));
        ++result_.samples;
    }
    void flag(bool ok)
    {
        if (!ok)
            ++failures_;
        ++result_.samples;
    }
    void note(std::string text) { result_.note = std::move(text); }

    CheckResult done()
    {
        result_.passed = failures_ == 0 && result_.max_residual <= tol_;
        return result_;
    }

private:
    CheckResult result_;
    double tol_;
    long failures_{0};
};

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    double uniform(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(engine);
    }
    AlgebraVector real_vector(double r)
    {
        return AlgebraVector::real(uniform(-r, r), uniform(-r, r), uniform(-r, r));
    }
    GroupElement group(double r)
    {
        return exp_group(real_vector(r)) * exp_group(kI * real_vector(r));
    }
    GroupElement real_group(double r) { return exp_group(real_vector(r)); }
};

std::vector<double> filtered(std::vector<double> defaults, double m_filter)
{
    if (std::isfinite(m_filter))
        return {m_filter};
    return defaults;
}

// ---------------------------------------------------------------- functions

void suite_functions(SuiteReport& rep, double ts)
{
    {
        Check c("pythagoras_identity", 1e-10 * ts);
        for (int k = 0; k <= 10000; ++k) {
            const double x = (-kPiSq + 1e-6) + (30.0 + kPiSq - 1e-6) * k / 10000.0;
            const double C = eval_C(x), S = eval_S(x);
            c.residual(C * C - x * S * S - 1.0);
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("kernel_positivity_monotonicity", 0.0);
        double pS = 0, pC = 0, pSp = 0, pCS = 0, pSSp = 0;
        for (int k = 0; k <= 10000; ++k) {
            const double x = (-kPiSq + 1e-6) + (30.0 + kPiSq - 1e-6) * k / 10000.0;
            const double S = eval_S(x), C = eval_C(x), Sp = eval_S_prime(x);
            c.flag(S > 0.0 && Sp > 0.0);
            if (k > 0)
                c.flag(S > pS && C > pC && Sp > pSp && C / S > pCS && S / Sp > pSSp);
            pS = S;
            pC = C;
            pSp = Sp;
            pCS = C / S;
            pSSp = S / Sp;
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("c_prime_equals_half_s", 1e-6 * ts);
        for (int k = 0; k <= 200; ++k) {
            const double x = -9.5 + 40.0 * k / 200.0;
            const double fd = (eval_C(x + 1e-5) - eval_C(x - 1e-5)) / 2e-5;
            c.residual(fd - 0.5 * eval_S(x));
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("series_direct_agreement", 1e-12 * ts);
        for (int k = 0; k <= 400; ++k) {
            const double mag = kSeriesThreshold * (0.5 + 1.5 * k / 400.0);
            for (const double x : {mag, -mag}) {
                const double cd = x >= 0 ? std::cosh(std::sqrt(x)) : std::cos(std::sqrt(-x));
                const double sd = x >= 0 ? std::sinh(std::sqrt(x)) / std::sqrt(x)
                                         : std::sin(std::sqrt(-x)) / std::sqrt(-x);
                c.residual(eval_C(x) - cd);
                c.residual(eval_S(x) - sd);
                c.residual(eval_S_prime(x) - (cd - sd) / (2.0 * x));
            }
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("f_at_zero", 1e-9 * ts);
        c.residual(eval_f(0.0) - 3.0);
        rep.checks.push_back(c.done());
    }
    {
        Check c("f_dominates_argument", 0.0);
        for (int k = 0; k <= 4000; ++k) {
            const double x = (-kPiSq + 1e-6) + (20.0 + kPiSq - 1e-6) * k / 4000.0;
            c.flag(eval_f(x) > x);
        }
        rep.checks.push_back(c.done());
    }
}

// ------------------------------------------------------------------ algebra

void suite_algebra(SuiteReport& rep, std::uint64_t seed, double ts)
{
    Rng rng(seed);
    {
        Check c("exp_determinant_one", 1e-10 * ts);
        for (int k = 0; k < 1000; ++k)
            c.residual(std::abs(exp_group(kI * rng.real_vector(2.0)).mat().det() - 1.0));
        rep.checks.push_back(c.done());
    }
    {
        Check c("exp_matches_scaling_squaring", 1e-10 * ts);
        for (int k = 0; k < 200; ++k) {
            const AlgebraVector Z = rng.real_vector(1.0) + kI * rng.real_vector(1.0);
            const Mat2c direct = exp_group(Z).mat();
            // degree-24 Taylor with 7 squarings
            Mat2c acc{}, term{};
            const Mat2c zs = cplx(1.0 / 128.0) * matrix_of(Z);
            for (int l = 1; l <= 24; ++l) {
                term = cplx(1.0 / double(l)) * (term * zs);
                acc = acc + term;
            }
            for (int sq = 0; sq < 7; ++sq)
                acc = acc * acc;
            c.residual(std::abs(direct.a - acc.a));
            c.residual(std::abs(direct.b - acc.b));
            c.residual(std::abs(direct.c - acc.c));
            c.residual(std::abs(direct.d - acc.d));
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("six_vectors_vs_series_oracles", 1e-8 * ts);
        Check cm("six_vectors_vs_matrix_oracles", 1e-8 * ts);
        for (int iu = 0; iu < 5; ++iu)
            for (int ia = 0; ia < 5; ++ia)
                for (int im = 0; im < 5; ++im) {
                    const SlicePoint s{-1.0 + 0.5 * iu, 0.25 * ia, -2.0 + im};
                    const auto closed = six_vectors(s);
                    const AlgebraVector conj_arg =
                        kI * (s.u * s.m * basis_U() - s.a * basis_H());
                    const AlgebraVector dexp_arg =
                        kI * (-s.u * s.m * basis_U() + s.a * basis_H());
                    const AlgebraVector series[6] = {
                        ad_series(conj_arg, basis_U(), 40),
                        ad_series(conj_arg, basis_H(), 40),
                        ad_series(conj_arg, basis_W(), 40),
                        d_exp(dexp_arg, (-kI * s.m) * basis_U(), 40) +
                            (kI * (1.0 + s.m)) * basis_U(),
                        d_exp(dexp_arg, kI * basis_H(), 40),
                        d_exp(dexp_arg, kI * basis_W(), 40)};
                    const GroupElement conj = exp_group(conj_arg);
                    const GroupElement dexp_base = exp_group(dexp_arg);
                    const double h = 1e-6;
                    const auto fd = [&](const AlgebraVector& Y) {
                        const Mat2c plus = exp_group(dexp_arg + h * Y).mat();
                        const Mat2c minus = exp_group(dexp_arg - h * Y).mat();
                        return vector_of(dexp_base.inverse().mat() *
                                         (cplx(1.0 / (2.0 * h)) * (plus - minus)));
                    };
                    const AlgebraVector mats[6] = {
                        adjoint(conj, basis_U()),
                        adjoint(conj, basis_H()),
                        adjoint(conj, basis_W()),
                        fd((-kI * s.m) * basis_U()) + (kI * (1.0 + s.m)) * basis_U(),
                        fd(kI * basis_H()),
                        fd(kI * basis_W())};
                    for (int j = 0; j < 6; ++j) {
                        c.residual(max_abs(closed[size_t(j)] - series[j]));
                        cm.residual(max_abs(closed[size_t(j)] - mats[j]));
                    }
                }
        rep.checks.push_back(c.done());
        rep.checks.push_back(cm.done());
    }
    {
        Check c("adjoint_preserves_killing", 1e-8 * ts);
        for (int k = 0; k < 300; ++k) {
            const GroupElement g = rng.real_group(1.2);
            const AlgebraVector X = rng.real_vector(2.0), Y = rng.real_vector(2.0);
            c.residual(killing_form(adjoint(g, X), adjoint(g, Y)) - killing_form(X, Y));
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("cayley_equivariance", 1e-12 * ts);
        Check cn("cayley_exp_naturality", 1e-10 * ts);
        for (int k = 0; k < 200; ++k) {
            const GroupElement g = rng.group(0.9);
            const Mat2c lhs = cayley_A(sigma_G(g)).mat();
            const Mat2c rhs = sigma_SU11(cayley_A(g)).mat();
            c.residual(std::abs(lhs.a - rhs.a));
            c.residual(std::abs(lhs.d - rhs.d));
            const AlgebraVector X = rng.real_vector(0.9) + kI * rng.real_vector(0.9);
            const Mat2c na = cayley_A(exp_group(X)).mat();
            const Mat2c nb = exp_group(cayley_A_alg(X)).mat();
            cn.residual(std::abs(na.a - nb.a));
            cn.residual(std::abs(na.b - nb.b));
        }
        rep.checks.push_back(c.done());
        rep.checks.push_back(cn.done());
    }
}

// ---------------------------------------------------------------- geodesics

AlgebraVector velocity_fd(double m, const AlgebraVector& X, double t, double h)
{
    const GroupElement inv = geodesic(m, X, t).inverse();
    const Mat2c plus = (inv * geodesic(m, X, t + h)).mat();
    const Mat2c minus = (inv * geodesic(m, X, t - h)).mat();
    return vector_of(cplx(1.0 / (2.0 * h)) * (plus - minus));
}

void suite_geodesics(SuiteReport& rep, std::uint64_t seed, double ts)
{
    Rng rng(seed);
    {
        Check ode("geodesic_ode_residual", 1e-6 * ts);
        Check speed("geodesic_speed_drift", 1e-7 * ts);
        const double h = 1e-4;
        for (int k = 0; k < 100; ++k) {
            const double m = rng.uniform(-2.0, 2.0);
            const AlgebraVector X = rng.real_vector(0.35);
            const double speed0 = metric_eval(m, X, X);
            for (int j = 0; j <= 8; ++j) {
                const double t = 0.25 * j;
                const AlgebraVector V = velocity_fd(m, X, t, h);
                const AlgebraVector Vp = (1.0 / (2.0 * h)) * (velocity_fd(m, X, t + h, h) -
                                                              velocity_fd(m, X, t - h, h));
                ode.residual(max_abs(Vp + (1.0 + m) * bracket(V.k_part(), V.p_part())));
                speed.residual(metric_eval(m, V, V) - speed0);
            }
        }
        rep.checks.push_back(ode.done());
        rep.checks.push_back(speed.done());
    }
    {
        Check c("torsion_free", 1e-12 * ts);
        Check comp("metric_compatibility_m1", 1e-9 * ts);
        Check iso("right_k_isometry", 1e-9 * ts);
        for (int k = 0; k < 300; ++k) {
            const double m = rng.uniform(-2.0, 2.0);
            const AlgebraVector X = rng.real_vector(1.5), Y = rng.real_vector(1.5),
                                Z = rng.real_vector(1.5);
            c.residual(max_abs(connection(m, X, Y) - connection(m, Y, X) - bracket(X, Y)));
            comp.residual(metric_eval(1.0, connection(1.0, X, Y), Z) +
                          metric_eval(1.0, Y, connection(1.0, X, Z)));
            const GroupElement kk = exp_group(rng.uniform(-3.0, 3.0) * basis_U());
            iso.residual(metric_eval(m, adjoint(kk, X), adjoint(kk, Y)) -
                         metric_eval(m, X, Y));
        }
        rep.checks.push_back(c.done());
        rep.checks.push_back(comp.done());
        rep.checks.push_back(iso.done());
    }
}

// -------------------------------------------------------------------- polar

void suite_polar(SuiteReport& rep, std::uint64_t seed, double m_filter, double ts)
{
    Rng rng(seed);
    {
        Check c("sigma_m_equals_star_for_m_le_minus1", 0.0);
        for (const double m : filtered({-2.0, -1.0}, m_filter)) {
            if (m > -1.0)
                continue;
            for (int iu = 0; iu < 100; ++iu)
                for (int ia = 0; ia < 100; ++ia) {
                    const SlicePoint s{-5.5 + 11.0 * iu / 99.0, 5.5 * ia / 99.0, m};
                    c.flag(in_sigma_m(s) == in_sigma_star(s));
                }
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("boundary_inside_sigma_star", 0.0);
        double min_margin = 1e300;
        for (const double m : filtered({-0.5, 0.0, 1.0}, m_filter)) {
            if (m <= -1.0)
                continue;
            for (int k = 0; k <= 60; ++k) {
                const double u = -1.5 + 3.0 * k / 60.0;
                const double a = boundary_a(m, u);
                const SlicePoint s{u, a, m};
                const double margin = s.x() + kPiSq;
                min_margin = std::min(min_margin, margin);
                c.flag(margin > 1e-9);
                c.flag(std::fabs(s.y() - eval_f(s.x())) < 1e-10 * ts);
            }
        }
        c.note("min margin x+pi^2 = " + format_double(min_margin));
        rep.checks.push_back(c.done());
    }
    {
        Check c("determinant_product_sign_vs_jacobian", 0.0);
        int compared = 0;
        while (compared < 1000) {
            const SlicePoint s{rng.uniform(-1.2, 1.2), rng.uniform(0.0, 1.2),
                               std::isfinite(m_filter) ? m_filter : rng.uniform(-2.0, 2.0)};
            if (!in_sigma_star(s))
                continue;
            const auto [d1, d2] = slice_determinants(s);
            if (std::fabs(d1 * d2) < 1e-5)
                continue;
            c.flag(d1 * d2 * numeric_jacobian(s.m, s.tangent()).det > 0.0);
            ++compared;
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("boundary_rank_drop_with_independent_45", 0.0);
        for (const double m : filtered({-0.5, 1.0}, m_filter)) {
            if (m <= -1.0)
                continue;
            for (const double u : {0.0, 0.5, 1.0}) {
                const double a = boundary_a(m, u);
                const SlicePoint s{u, a, m};
                const auto [d1, d2] = slice_determinants(s);
                c.flag(std::min(std::fabs(d1), std::fabs(d2)) < 1e-8 * ts);
                const auto v = six_vectors(s);
                const double m1 = v[3].u.imag() * v[4].h.imag() - v[3].h.imag() * v[4].u.imag();
                const double m2 = v[3].u.imag() * v[4].w.real() - v[3].w.real() * v[4].u.imag();
                const double m3 = v[3].h.imag() * v[4].w.real() - v[3].w.real() * v[4].h.imag();
                c.flag(std::max({std::fabs(m1), std::fabs(m2), std::fabs(m3)}) > 1e-6);
            }
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("jacobian_equivariant_singularity", 0.0);
        int compared = 0;
        while (compared < 40) {
            const double m = std::isfinite(m_filter) ? m_filter : rng.uniform(-2.0, 2.0);
            const SlicePoint s{rng.uniform(-1.0, 1.0), rng.uniform(0.0, 1.0), m};
            if (!in_sigma_star(s))
                continue;
            const double base = numeric_jacobian(m, s.tangent()).det;
            if (std::fabs(base) < 1e-4)
                continue;
            const GroupElement g = rng.real_group(0.6);
            const GroupElement kk = exp_group(rng.uniform(-2.0, 2.0) * basis_U());
            c.flag(base * numeric_jacobian(m, l_action(g, kk, s.tangent())).det > 0.0);
            ++compared;
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("sigma_component_connectivity", 0.0);
        std::string note;
        for (const double m : filtered({-2.0, -1.0, -0.5, 0.0, 1.0}, m_filter)) {
            const SigmaRegion& region = SigmaRegion::shared(m);
            c.flag(region.cells_inequalities() > 0);
            c.flag(region.empirically_connected());
            note += "m=" + format_double(m) + ":" +
                    std::to_string(region.cells_component()) + "/" +
                    std::to_string(region.cells_inequalities()) + " ";
        }
        c.note(note);
        rep.checks.push_back(c.done());
    }
}

// ---------------------------------------------------------------- quotients

void suite_quotients(SuiteReport& rep, std::uint64_t seed, double m_filter, double ts)
{
    Rng rng(seed);
    const SpecialPoints& sp = special_points();
    {
        Check c("anchor_values", 1e-10 * ts);
        const PPoint fe = F_map(GroupElement::identity());
        c.residual(fe.s - 1.0);
        c.residual(fe.t - 1.0);
        const PPoint fet = F_map(sp.e_tilde);
        c.residual(fet.s + 1.0);
        c.residual(fet.t + 1.0);
        for (int k = 0; k <= 40; ++k) {
            const double rho = -2.0 + 4.0 * k / 40.0;
            const PPoint p = F_map(exp_group(kI * rho * (basis_U() + basis_H())));
            c.residual(p.s - (1.0 - 2.0 * rho));
            c.residual(p.t - (1.0 + 2.0 * rho));
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("symmetry_equivariances", 1e-10 * ts);
        for (int k = 0; k < 1000; ++k) {
            const GroupElement g = rng.group(0.6);
            const PPoint p = F_map(g);
            const PPoint neg = F_map(sp.e_tilde * g);
            c.residual(neg.s + p.s);
            c.residual(neg.t + p.t);
            const PPoint swp = F_map(sp.e_tilde.inverse() * g * sp.e_tilde);
            c.residual(swp.s - p.t);
            c.residual(swp.t - p.s);
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("image_in_P_and_Q_form", 0.0);
        for (int k = 0; k < 500; ++k) {
            const GroupElement g = rng.group(0.8);
            const QPoint q = to_Q(g); // consistency throws on failure
            c.flag(q.s * q.t <= 1.0 + 1e-9);
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("r_equivariance", 1e-10 * ts);
        for (int k = 0; k < 300; ++k) {
            const GroupElement g = rng.group(0.6);
            const double y = rng.uniform(-1.0, 1.0);
            const PPoint lhs = F_map(g * exp_group(-kI * y * basis_U()));
            const PPoint rhs = r_action(y, F_map(g));
            c.residual(lhs.s - rhs.s);
            c.residual(lhs.t - rhs.t);
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("boundary_degeneration_st1", 1e-9 * ts);
        for (int k = 0; k < 100; ++k) {
            const double m = std::isfinite(m_filter) ? m_filter : rng.uniform(-2.0, 1.5);
            const double u = rng.uniform(-1.5, 1.5);
            const double a = std::sqrt(u * u * m * m + kPiSq / 4.0);
            const PPoint img =
                F_map(polar(m, TangentPoint{GroupElement::identity(),
                                            AlgebraVector::real(u, a, 0.0)}));
            const double w = 2.0 * u * (1.0 + m);
            c.residual(img.s + std::exp(-w));
            c.residual(img.t + std::exp(w));
            c.residual(img.s * img.t - 1.0);
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("orbit_dimensions", 0.0);
        c.flag(l_orbit_dimension(GroupElement::identity()) == 3);
        c.flag(l_orbit_dimension(sp.e_tilde) == 3);
        c.flag(l_orbit_dimension(sp.g0) == 4);
        c.flag(gkc_orbit_dimension(GroupElement::identity()) == 4);
        c.flag(gkc_orbit_dimension(sp.e_tilde) == 4);
        c.flag(gkc_orbit_dimension(sp.g0) == 4);
        for (const GroupElement* g : {&sp.g1, &sp.g2, &sp.g3, &sp.g4})
            c.flag(gkc_orbit_dimension(*g) == 5);
        rep.checks.push_back(c.done());
    }
    {
        Check c("special_point_images", 1e-10 * ts);
        const auto expect = [&](const GroupElement& g, double es, double et) {
            const PPoint p = F_map(g);
            c.residual(p.s - es);
            c.residual(p.t - et);
        };
        expect(sp.g0, 0.0, 0.0);
        expect(sp.g1, 2.0, 0.0);
        expect(sp.g2, 0.0, 2.0);
        expect(sp.g3, -2.0, 0.0);
        expect(sp.g4, 0.0, -2.0);
        rep.checks.push_back(c.done());
    }
}

// ------------------------------------------------------------------ reduced

void suite_reduced(SuiteReport& rep, std::uint64_t seed, double m_filter, double ts)
{
    Rng rng(seed);
    {
        Check c("closed_form_vs_F_polar", 1e-10 * ts);
        Check cs("st_identity", 1e-10 * ts);
        for (const double m : filtered({-2.0, -1.0, -0.5, 0.0, 0.5, 1.0}, m_filter)) {
            for (int k = 0; k < 2000; ++k) {
                const SlicePoint s{rng.uniform(-1.0, 1.0), rng.uniform(0.0, 1.5), m};
                const PPoint closed = reduced_polar(s);
                const PPoint mats = F_map(polar(m, s.tangent()));
                c.residual(closed.s - mats.s);
                c.residual(closed.t - mats.t);
                cs.residual(closed.s * closed.t - st_of(s));
            }
        }
        rep.checks.push_back(c.done());
        rep.checks.push_back(cs.done());
    }
    {
        Check c("alpha_beta_equivariance", 1e-12 * ts);
        for (int k = 0; k < 2000; ++k) {
            const double m = std::isfinite(m_filter) ? m_filter : rng.uniform(-2.0, 2.0);
            const double u = rng.uniform(-1.5, 1.5);
            const double a = rng.uniform(0.0, 1.5);
            const PPoint p = reduced_polar(SlicePoint{u, a, m});
            const PPoint q = reduced_polar(SlicePoint{-u, a, m});
            c.residual(q.s - p.t);
            c.residual(q.t - p.s);
            const PPoint axis = reduced_polar(SlicePoint{0.0, a, m});
            c.residual(axis.s - axis.t);
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("diagonal_preimage_is_axis_for_m_le_minus1", 0.0);
        for (const double m : filtered({-1.0, -2.0}, m_filter)) {
            if (m > -1.0)
                continue;
            const double du = 6.0 / 999.0;
            for (int i = 0; i < 1000; ++i)
                for (int j = 0; j < 1000; ++j) {
                    const double u = -3.0 + 6.0 * i / 999.0;
                    const double a = 3.0 * j / 999.0;
                    const SlicePoint s{u, a, m};
                    if (!in_sigma_star(s) || std::fabs(u) < du)
                        continue;
                    const PPoint p = reduced_polar(s);
                    c.flag(std::fabs(p.s - p.t) >= 1e-9);
                }
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("gamma_graph_membership_dichotomy", 0.0);
        for (const double u : {0.2, 0.6, 1.2}) {
            c.flag(!in_sigma_m(SlicePoint{u, gamma_curve(-0.5, u), -0.5}));
            c.flag(in_sigma_m(SlicePoint{u, gamma_curve(0.5, u), 0.5}));
            c.flag(in_sigma_m(SlicePoint{u, gamma_curve(1.0, u), 1.0}));
        }
        rep.checks.push_back(c.done());
    }
    {
        Check c("level_set_branch_counts_m_minus1", 0.0);
        const Window win{0.0, 3.0, 0.0, 3.0};
        c.flag(trace_level_set(-1.0, 0.2, win).branches_in_positive_quadrant() == 2);
        c.flag(trace_level_set(-1.0, 0.7, win).branches_in_positive_quadrant() == 2);
        c.flag(trace_level_set(-1.0, -0.7, win).branches_in_positive_quadrant() == 1);
        rep.checks.push_back(c.done());
    }
    {
        Check c("tilde_a_consistency", 1e-8 * ts);
        const double a1 = tilde_a(1.0);
        c.residual(std::tan(2.0 * a1) - 4.0 * a1);
        c.residual(a1 - gamma_curve(1.0, 0.0));
        rep.checks.push_back(c.done());
    }
    {
        Check c("growth_along_small_a_branch_m_minus15", 0.0);
        const double m = -1.5, eps = 0.05;
        double prev_t = -1e300;
        for (int k = 0; k <= 100; ++k) {
            const double u = 1.0 + 4.0 * k / 100.0;
            double lo = 0.0, hi = 0.5;
            while (phi_m(SlicePoint{u, hi, m}) < eps)
                hi *= 2.0;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (lo + hi);
                (phi_m(SlicePoint{u, mid, m}) < eps ? lo : hi) = mid;
            }
            const PPoint p = reduced_polar(SlicePoint{u, 0.5 * (lo + hi), m});
            c.flag(p.t > prev_t);
            prev_t = p.t;
        }
        rep.checks.push_back(c.done());
    }
    {
        // Injectivity scans: zero witnesses up to m = 0, witnesses for m > 0.
        for (const double m : filtered({-2.0, -1.0, -0.5, 0.0, 1.0}, m_filter)) {
            Check c("injectivity_scan_m=" + format_double(m), 0.0);
            const ScanReport scan = injectivity_scan(m, GridSpec{});
            c.flag(scan.points_in_sigma > 1000);
            c.flag(scan.max_product_residual < 1e-10 * ts);
            if (m > 0.0) {
                c.flag(!scan.witnesses.empty());
                bool canonical = false;
                for (const auto& w : scan.witnesses) {
                    c.flag(w.image_distance < 1e-9 * ts);
                    c.flag(w.first.u * w.second.u < 0.0); // never same half-plane
                    canonical = canonical || w.canonical;
                }
                c.flag(canonical);
            } else {
                c.flag(scan.witnesses.empty());
            }
            c.note(std::to_string(scan.witnesses.size()) + " witnesses / " +
                   std::to_string(scan.candidate_pairs) + " candidate clusters");
            for (const auto& w : scan.witnesses)
                rep.witnesses.push_back(w);
            rep.checks.push_back(c.done());
        }
    }
}

} // namespace

bool SuiteReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"functions",  "algebra", "geodesics",
                                                   "polar",      "quotients", "reduced",
                                                   "all"};
    return names;
}

SuiteReport run_suite(const std::string& suite, std::uint64_t seed, double m_filter,
                      double tol_scale)
{
    SuiteReport rep;
    rep.suite = suite;
    rep.seed = seed;
    const double ts = tol_scale;
    if (suite == "functions")
        suite_functions(rep, ts);
    else if (suite == "algebra")
        suite_algebra(rep, seed, ts);
    else if (suite == "geodesics")
        suite_geodesics(rep, seed, ts);
    else if (suite == "polar")
        suite_polar(rep, seed, m_filter, ts);
    else if (suite == "quotients")
        suite_quotients(rep, seed, m_filter, ts);
    else if (suite == "reduced")
        suite_reduced(rep, seed, m_filter, ts);
    else if (suite == "all") {
        for (const auto& name : suite_names()) {
            if (name == "all")
                continue;
            SuiteReport sub = run_suite(name, seed, m_filter, tol_scale);
            for (auto& c : sub.checks) {
                c.name = name + "/" + c.name;
                rep.checks.push_back(std::move(c));
            }
            for (auto& w : sub.witnesses)
                rep.witnesses.push_back(std::move(w));
        }
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return rep;
}

void write_report_json(const SuiteReport& report, std::ostream& os)
{
    nlohmann::json j;
    j["suite"] = report.suite;
    j["seed"] = report.seed;
    j["passed"] = report.all_passed();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["passed"] = c.passed;
        jc["max_residual"] = c.max_residual;
        jc["samples"] = c.samples;
        if (!c.note.empty())
            jc["note"] = c.note;
        j["checks"].push_back(std::move(jc));
    }
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : report.witnesses) {
        j["witnesses"].push_back({{"m", w.first.m},
                                  {"u1", w.first.u},
                                  {"a1", w.first.a},
                                  {"u2", w.second.u},
                                  {"a2", w.second.a},
                                  {"image_distance", w.image_distance},
                                  {"preimage_distance", w.preimage_distance},
                                  {"canonical", w.canonical}});
    }
    os << j.dump(2) << '\n';
}

} // namespace sl2cx
