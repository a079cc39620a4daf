#include "sl2cx/polar.hpp"

#include "sl2cx/scalar_kernel.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sl2cx {

namespace {
constexpr double kPiSq = std::numbers::pi * std::numbers::pi;
const cplx kI(0.0, 1.0);
} // namespace

SlicePoint::SlicePoint(double uu, double aa, double mm) : u(uu), a(aa), m(mm)
{
    if (!(aa >= 0.0))
        throw std::domain_error("SlicePoint: a must be nonnegative");
}

TangentPoint SlicePoint::tangent() const
{
    return TangentPoint{GroupElement::identity(), algebra()};
}

GroupElement polar(double m, const TangentPoint& p)
{
    const AlgebraVector first = kI * (-m * p.X.k_part() + p.X.p_part());
    const AlgebraVector second = kI * ((1.0 + m) * p.X.k_part());
    return p.g * exp_group(first) * exp_group(second);
}

std::array<AlgebraVector, 6> six_vectors(const SlicePoint& s)
{
    const double u = s.u, a = s.a, m = s.m;
    const double x = s.x();
    const double C = eval_C(x);
    const double S = eval_S(x);
    const auto [qc, qs] = stable_quotients(x); // (C-1)/x, (S-1)/x

    std::array<AlgebraVector, 6> v;
    v[0] = {1.0 - 4.0 * a * a * qc, 4.0 * a * u * m * qc, 2.0 * a * S * kI};
    v[1] = {-4.0 * a * u * m * qc, 1.0 + 4.0 * u * u * m * m * qc, 2.0 * u * m * S * kI};
    v[2] = {2.0 * a * S * kI, -2.0 * u * m * S * kI, C};
    v[3] = {(1.0 + 4.0 * a * a * m * qs) * kI, -4.0 * a * u * m * m * qs * kI, 2.0 * a * m * qc};
    v[4] = {-4.0 * a * u * m * qs * kI, (1.0 + 4.0 * u * u * m * m * qs) * kI, -2.0 * u * m * qc};
    v[5] = {-2.0 * a * qc, 2.0 * u * m * qc, S * kI};
    return v;
}

std::pair<double, double> slice_determinants(const SlicePoint& s)
{
    const auto v = six_vectors(s);
    const auto det3 = [](const double r0[3], const double r1[3], const double r2[3]) {
        return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) -
               r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
               r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
    };
    // rows 1, 2, 6 have real U, H parts and imaginary W part
    const double r1[3] = {v[0].u.real(), v[0].h.real(), v[0].w.imag()};
    const double r2[3] = {v[1].u.real(), v[1].h.real(), v[1].w.imag()};
    const double r6[3] = {v[5].u.real(), v[5].h.real(), v[5].w.imag()};
    // rows 3, 4, 5 have imaginary U, H parts and real W part
    const double r3[3] = {v[2].u.imag(), v[2].h.imag(), v[2].w.real()};
    const double r4[3] = {v[3].u.imag(), v[3].h.imag(), v[3].w.real()};
    const double r5[3] = {v[4].u.imag(), v[4].h.imag(), v[4].w.real()};
    return {det3(r1, r2, r6), det3(r3, r4, r5)};
}

bool in_sigma_star(const SlicePoint& s)
{
    return s.x() > -kPiSq;
}

bool sigma_inequalities(double m, double u, double a)
{
    const SlicePoint s{u, std::fabs(a), m};
    const double x = s.x();
    if (!(x > -kPiSq))
        return false;
    return s.y() < eval_f(x);
}

// --------------------------------------------------------------------------
// SigmaRegion
// --------------------------------------------------------------------------

SigmaRegion::SigmaRegion(double m, Window win, int nu, int na)
    : m_(m), win_(win), nu_(nu), na_(na)
{
    if (!std::isfinite(m))
        throw std::invalid_argument("SigmaRegion: m must be finite");
    if (nu < 2 || na < 2)
        throw std::invalid_argument("SigmaRegion: grid must be at least 2x2");
    if (!(win.u0 < win.u1) || !(win.a0 < win.a1))
        throw std::invalid_argument("SigmaRegion: empty window");
    if (win.u0 > 0.0 || win.u1 < 0.0 || win.a0 > 0.0)
        throw std::invalid_argument("SigmaRegion: window must contain the origin");

    du_ = (win.u1 - win.u0) / nu;
    da_ = (win.a1 - win.a0) / na;

    std::vector<char> inside(size_t(nu) * size_t(na), 0);
    const auto center_u = [&](int iu) { return win_.u0 + (iu + 0.5) * du_; };
    const auto center_a = [&](int ia) { return std::fabs(win_.a0 + (ia + 0.5) * da_); };
    for (int ia = 0; ia < na; ++ia)
        for (int iu = 0; iu < nu; ++iu)
            if (sigma_inequalities(m, center_u(iu), center_a(ia))) {
                inside[size_t(ia) * nu + iu] = 1;
                ++n_ineq_;
            }

    component_.assign(inside.size(), 0);
    const int seed_u = std::min(nu - 1, std::max(0, int((0.0 - win.u0) / du_)));
    const int seed_a = std::min(na - 1, std::max(0, int((0.0 - win.a0) / da_)));
    std::vector<std::pair<int, int>> stack;
    if (inside[size_t(seed_a) * nu + seed_u]) {
        stack.emplace_back(seed_u, seed_a);
        component_[size_t(seed_a) * nu + seed_u] = 1;
    }
    while (!stack.empty()) {
        const auto [iu, ia] = stack.back();
        stack.pop_back();
        ++n_comp_;
        constexpr int off[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const auto& d : off) {
            const int ju = iu + d[0], ja = ia + d[1];
            if (ju < 0 || ju >= nu || ja < 0 || ja >= na)
                continue;
            const size_t idx = size_t(ja) * nu + ju;
            if (inside[idx] && !component_[idx]) {
                component_[idx] = 1;
                stack.emplace_back(ju, ja);
            }
        }
    }
}

bool SigmaRegion::cell_marked(int iu, int ia) const
{
    if (iu < 0 || iu >= nu_ || ia < 0 || ia >= na_)
        return false;
    return component_[size_t(ia) * nu_ + iu] != 0;
}

bool SigmaRegion::contains(double u, double a) const
{
    if (!sigma_inequalities(m_, u, a))
        return false;
    if (u < win_.u0 || u > win_.u1 || a < win_.a0 || a > win_.a1)
        return true; // outside the certified window: inequalities only
    const int iu = std::min(nu_ - 1, std::max(0, int((u - win_.u0) / du_)));
    const int ia = std::min(na_ - 1, std::max(0, int((a - win_.a0) / da_)));
    for (int dj = -1; dj <= 1; ++dj)
        for (int di = -1; di <= 1; ++di)
            if (cell_marked(iu + di, ia + dj))
                return true;
    return false;
}

const SigmaRegion& SigmaRegion::shared(double m)
{
    static std::map<double, std::unique_ptr<SigmaRegion>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it == cache.end())
        it = cache.emplace(m, std::make_unique<SigmaRegion>(m, Window{})).first;
    return *it->second;
}

bool in_sigma_m(const SlicePoint& s)
{
    return SigmaRegion::shared(s.m).contains(s.u, s.a);
}

double boundary_a(double m, double u)
{
    if (m <= -1.0)
        throw std::domain_error(
            "boundary_a: for m <= -1 the slice boundary is the hyperbola x = -pi^2");

    const auto g = [&](double a) {
        const SlicePoint s{u, a, m};
        return s.y() - eval_f(s.x());
    };
    // (*) fails when 4a^2 >= 4u^2 m^2 + pi^2; stay strictly inside.
    const double a_star = std::sqrt(u * u * m * m + kPiSq / 4.0);
    const double a_hi_max = a_star * (1.0 - 1e-12);

    double lo = 0.0;
    double glo = g(lo);
    if (glo >= 0.0)
        throw std::runtime_error("boundary_a: no sign change found (g(0) >= 0)");
    double hi = lo;
    bool bracketed = false;
    for (double a = 0.01; a < a_hi_max; a += 0.01) {
        const double ga = g(a);
        if (ga >= 0.0) {
            hi = a;
            bracketed = true;
            break;
        }
        lo = a;
        glo = ga;
    }
    if (!bracketed) {
        const double ga = g(a_hi_max);
        if (ga >= 0.0) {
            hi = a_hi_max;
            bracketed = true;
        }
    }
    if (!bracketed)
        throw std::runtime_error("boundary_a: no sign change up to the (*) boundary");

    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-14)
            break;
    }
    return 0.5 * (lo + hi);
}

// --------------------------------------------------------------------------
// Numeric Jacobian
// --------------------------------------------------------------------------

namespace {

// Coordinates of the trace-zero part of a tangent matrix in g^C = R^6.
std::array<double, 6> real_coords(const Mat2c& t)
{
    const AlgebraVector v = vector_of(t);
    return {v.u.real(), v.h.real(), v.w.real(), v.u.imag(), v.h.imag(), v.w.imag()};
}

} // namespace

JacobianResult numeric_jacobian(double m, const TangentPoint& p, double step)
{
    const std::array<AlgebraVector, 3> dirs = {basis_U(), basis_H(), basis_W()};
    const GroupElement base_inv = polar(m, p).inverse();

    const auto displaced = [&](int j, double h) {
        if (j < 3) {
            const GroupElement gh = p.g * exp_group(h * dirs[size_t(j)]);
            return polar(m, TangentPoint{gh, p.X});
        }
        return polar(m, TangentPoint{p.g, p.X + h * dirs[size_t(j - 3)]});
    };

    JacobianResult out;
    for (int j = 0; j < 6; ++j) {
        const Mat2c plus = (base_inv * displaced(j, step)).mat();
        const Mat2c minus = (base_inv * displaced(j, -step)).mat();
        const Mat2c diff = (1.0 / (2.0 * step)) * (plus - minus);
        const auto col = real_coords(diff);
        for (int i = 0; i < 6; ++i)
            out.M[size_t(i)][size_t(j)] = col[size_t(i)];
    }

    Eigen::Matrix<double, 6, 6> J;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            J(i, j) = out.M[size_t(i)][size_t(j)];
    out.det = J.determinant();
    double scale = 1.0;
    for (int j = 0; j < 6; ++j)
        scale *= J.col(j).norm();
    out.det_normalized = scale > 0.0 ? out.det / scale : 0.0;
    return out;
}

} // namespace sl2cx
