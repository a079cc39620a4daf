#pragma once

#include "sl2cx/sl2.hpp"

namespace sl2cx {

// Models of the quotients of SL2(C): Q for G\G^C (matrices [[s,b],[-conj b,t]]
// with st + |b|^2 = 1) and P = {(s,t) : st <= 1} for G^C/L.

/// Point of Q; st + |b|^2 = 1 is enforced within 1e-9 on construction.
struct QPoint {
    double s{1.0};
    double t{1.0};
    cplx b{0.0};

    QPoint() = default;
    QPoint(double ss, double tt, cplx bb);
};

/// Point of P; st <= 1 + 1e-9 is enforced on construction.
struct PPoint {
    double s{1.0};
    double t{1.0};

    PPoint() = default;
    PPoint(double ss, double tt);

    [[nodiscard]] PPoint swapped() const { return {t, s}; }
};

/// Quotient map for the left G-action: g -> sigma_G(g)^{-1} g. The image
/// satisfies sigma_G(out) = out^{-1} and parametrizes G \ G^C.
[[nodiscard]] GroupElement pi1(const GroupElement& g);

/// A(pi1(g)) decoded into Q-coordinates. The decoded matrix must be of
/// Q-form within 1e-8 (an inconsistency signals a bug, not bad input);
/// the two redundant b entries are averaged.
[[nodiscard]] QPoint to_Q(const GroupElement& g);

/// F = Pi2 o A o Pi1 : G^C -> P, the realization of the quotient G^C/L.
[[nodiscard]] PPoint F_map(const GroupElement& g);

/// R-action on P: (s,t) -> (e^{2y} s, e^{-2y} t). On G^C the corresponding
/// element {e} x exp(iyU) of L^C acts by right multiplication with
/// exp(-iyU), matching F(g exp(-iyU)) = r_action(y, F(g)).
[[nodiscard]] PPoint r_action(double y, const PPoint& p);

/// The distinguished elements of section "slices and quotients":
/// e~ = diag(i,-i), g0 = exp(i pi/4 H), g1 = exp(-i/2 (U+H)),
/// g2 = exp(i/2 (U+H)), g3 = e~ g1, g4 = e~ g2.
struct SpecialPoints {
    GroupElement e_tilde, g0, g1, g2, g3, g4;
};

[[nodiscard]] const SpecialPoints& special_points();

/// Dimension of the L = G x K orbit through z, as the numeric rank of the
/// action differential (singular values above 1e-7 of the largest).
/// 3 on F^{-1}({st = 1}), 4 elsewhere.
[[nodiscard]] int l_orbit_dimension(const GroupElement& z);

/// Same for the G x K^C action. 4 through e, e~ and g0, else 5.
[[nodiscard]] int gkc_orbit_dimension(const GroupElement& z);

} // namespace sl2cx
