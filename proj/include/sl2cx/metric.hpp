#pragma once

#include "sl2cx/sl2.hpp"

namespace sl2cx {

// The metric family nu_m on sl2(R):
//   nu_m(X, Y) = -m B(X_k, Y_k) + B(X_p, Y_p),
// Riemannian for m > 0, degenerate for m = 0, pseudo-Riemannian for m < 0.

/// Point of TG under the identification TG = G x g (left trivialization).
/// The group part must be real (SL2(R) within 1e-10).
struct TangentPoint {
    GroupElement g;
    AlgebraVector X;

    TangentPoint() = default;
    TangentPoint(GroupElement base, AlgebraVector vec);
};

[[nodiscard]] double metric_eval(double m, const AlgebraVector& X, const AlgebraVector& Y);

/// Levi-Civita-type connection of nu_m on left-invariant fields:
///   nabla_X Y = 1/2 ([X,Y] + (1+m)([X_k, Y_p] + [Y_k, X_p])).
/// Well defined for all real m, including the degenerate m = 0.
[[nodiscard]] AlgebraVector connection(double m, const AlgebraVector& X, const AlgebraVector& Y);

/// The nu_m-geodesic through e with initial velocity X:
///   gamma_X(t) = exp(t(-m X_k + X_p)) exp(t(1+m) X_k).
[[nodiscard]] GroupElement geodesic(double m, const AlgebraVector& X, double t);

/// Left-right action of L = G x K on TG: (g,k).(g',X) = (g g' k^{-1}, Ad_k X).
/// k must lie in SO2(R) within tolerance.
[[nodiscard]] TangentPoint l_action(const GroupElement& g, const GroupElement& k,
                                    const TangentPoint& p);

[[nodiscard]] bool is_so2(const GroupElement& k, double tol = 1e-9);

} // namespace sl2cx
