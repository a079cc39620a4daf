#pragma once

#include <utility>

namespace sl2cx {

// All series-stabilized paths switch below this |x|. Degree-10 Taylor
// keeps the truncation error under 1e-16 on the whole switch window.
inline constexpr double kSeriesThreshold = 1e-3;

/// C(x) = cosh(sqrt(x)) for x >= 0, cos(sqrt(-x)) for x < 0.
/// Real-analytic across 0 (even power series in sqrt(x)).
[[nodiscard]] double eval_C(double x);

/// S(x) = sinh(sqrt(x))/sqrt(x) for x > 0, sin(sqrt(-x))/sqrt(-x) for
/// x < 0, with S(0) = 1. Series-evaluated near 0.
[[nodiscard]] double eval_S(double x);

/// S'(x) = (C(x) - S(x)) / (2x), continued through x = 0 by its Taylor
/// series (S'(0) = 1/6). The direct quotient cancels catastrophically
/// near 0, hence the series path.
[[nodiscard]] double eval_S_prime(double x);

/// Returns ((C(x)-1)/x, (S(x)-1)/x) with series continuation at 0,
/// where the limits are (1/2, 1/6).
[[nodiscard]] std::pair<double, double> stable_quotients(double x);

/// f(x) = x C(x) / (C(x) - S(x)) = C(x) / (2 S'(x)).
/// Only defined for x > -pi^2, where S' stays strictly positive;
/// computed as C/(2S') to reuse the stabilized S'.
[[nodiscard]] double eval_f(double x);

/// Strict test x > -pi^2 (the domain on which eval_f is valid).
[[nodiscard]] bool above_f_domain(double x);

} // namespace sl2cx
