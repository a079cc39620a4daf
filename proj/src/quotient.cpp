#include "sl2cx/quotient.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sl2cx {

namespace {
const cplx kI(0.0, 1.0);
constexpr double kQFormTolerance = 1e-8;
} // namespace

QPoint::QPoint(double ss, double tt, cplx bb) : s(ss), t(tt), b(bb)
{
    if (std::fabs(s * t + std::norm(b) - 1.0) > 1e-9)
        throw std::domain_error("QPoint: st + |b|^2 = 1 violated");
}

PPoint::PPoint(double ss, double tt) : s(ss), t(tt)
{
    if (!std::isfinite(s) || !std::isfinite(t))
        throw std::domain_error("PPoint: non-finite coordinates");
    if (s * t > 1.0 + 1e-9)
        throw std::domain_error("PPoint: st <= 1 violated");
}

GroupElement pi1(const GroupElement& g)
{
    return sigma_G(g).inverse() * g;
}

QPoint to_Q(const GroupElement& g)
{
    const Mat2c q = cayley_A(pi1(g)).mat();
    const double err = std::max({std::fabs(q.a.imag()), std::fabs(q.d.imag()),
                                 std::abs(q.b + std::conj(q.c))});
    if (err > kQFormTolerance)
        throw std::logic_error("to_Q: decoded matrix is not of Q-form");
    const cplx b = 0.5 * (q.b - std::conj(q.c));
    return QPoint{q.a.real(), q.d.real(), b};
}

PPoint F_map(const GroupElement& g)
{
    const QPoint q = to_Q(g);
    return PPoint{q.s, q.t};
}

PPoint r_action(double y, const PPoint& p)
{
    return PPoint{std::exp(2.0 * y) * p.s, std::exp(-2.0 * y) * p.t};
}

const SpecialPoints& special_points()
{
    static const SpecialPoints pts = [] {
        const double quarter_pi = std::numbers::pi / 4.0;
        SpecialPoints sp;
        sp.e_tilde = exp_group(kI * (2.0 * quarter_pi) * basis_H());
        sp.g0 = exp_group(kI * quarter_pi * basis_H());
        sp.g1 = exp_group(-0.5 * kI * (basis_U() + basis_H()));
        sp.g2 = exp_group(0.5 * kI * (basis_U() + basis_H()));
        sp.g3 = sp.e_tilde * sp.g1;
        sp.g4 = sp.e_tilde * sp.g2;
        return sp;
    }();
    return pts;
}

namespace {

// Columns: left-trivialized action directions at z. Left g-directions give
// Ad_{z^{-1}} Y; the right k-factor gives the constant direction Y itself.
int rank_of_directions(const GroupElement& z, bool complexified_k)
{
    const GroupElement zinv = z.inverse();
    const int cols = complexified_k ? 5 : 4;
    Eigen::MatrixXd M(6, cols);
    const AlgebraVector basis[3] = {basis_U(), basis_H(), basis_W()};
    const auto put = [&](int j, const AlgebraVector& v) {
        M(0, j) = v.u.real();
        M(1, j) = v.h.real();
        M(2, j) = v.w.real();
        M(3, j) = v.u.imag();
        M(4, j) = v.h.imag();
        M(5, j) = v.w.imag();
    };
    for (int k = 0; k < 3; ++k)
        put(k, adjoint(zinv, basis[k]));
    put(3, basis_U());
    if (complexified_k)
        put(4, kI * basis_U());

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0)
        return 0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-7 * sv(0))
            ++rank;
    return rank;
}

} // namespace

int l_orbit_dimension(const GroupElement& z)
{
    return rank_of_directions(z, false);
}

int gkc_orbit_dimension(const GroupElement& z)
{
    return rank_of_directions(z, true);
}

} // namespace sl2cx
