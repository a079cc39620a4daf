#include "sl2cx/metric.hpp"

#include <cmath>
#include <stdexcept>

namespace sl2cx {

TangentPoint::TangentPoint(GroupElement base, AlgebraVector vec)
    : g(std::move(base)), X(std::move(vec))
{
    if (!g.is_real(1e-10))
        throw std::domain_error("TangentPoint: base point must lie in SL2(R)");
}

double metric_eval(double m, const AlgebraVector& X, const AlgebraVector& Y)
{
    return -m * killing_form(X.k_part(), Y.k_part()) +
           killing_form(X.p_part(), Y.p_part());
}

AlgebraVector connection(double m, const AlgebraVector& X, const AlgebraVector& Y)
{
    const AlgebraVector mixed =
        bracket(X.k_part(), Y.p_part()) + bracket(Y.k_part(), X.p_part());
    return 0.5 * (bracket(X, Y) + (1.0 + m) * mixed);
}

GroupElement geodesic(double m, const AlgebraVector& X, double t)
{
    const AlgebraVector a = -m * X.k_part() + X.p_part();
    const AlgebraVector b = (1.0 + m) * X.k_part();
    return exp_group(t * a) * exp_group(t * b);
}

bool is_so2(const GroupElement& k, double tol)
{
    if (!k.is_real(tol))
        return false;
    const Mat2c& m = k.mat();
    // real, det 1 (guaranteed), k^T k = I reduces to these two conditions
    return std::abs(m.a - m.d) <= tol && std::abs(m.b + m.c) <= tol;
}

TangentPoint l_action(const GroupElement& g, const GroupElement& k, const TangentPoint& p)
{
    if (!is_so2(k))
        throw std::domain_error("l_action: right factor must lie in SO2(R)");
    return TangentPoint{g * p.g * k.inverse(), adjoint(k, p.X)};
}

} // namespace sl2cx
