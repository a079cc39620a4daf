#include "sl2cx/scalar_kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sl2cx {

namespace {

constexpr double kPiSq = std::numbers::pi * std::numbers::pi;

void require_finite(double x)
{
    if (!std::isfinite(x))
        throw std::domain_error("scalar kernel: argument must be finite");
}

// Horner evaluation of sum_{k=0}^{10} coeff[k] x^k where coeff[k] is the
// reciprocal of a factorial-type integer.  Divisors are exact in double.
double poly10(double x, const double (&divisor)[11])
{
    double acc = 1.0 / divisor[10];
    for (int k = 9; k >= 0; --k)
        acc = acc * x + 1.0 / divisor[k];
    return acc;
}

// C(x)      = sum x^k / (2k)!
// S(x)      = sum x^k / (2k+1)!
// (C-1)/x   = sum x^k / (2k+2)!
// (S-1)/x   = sum x^k / (2k+3)!
// S'(x)     = sum (k+1) x^k / (2k+3)!
constexpr double kFactEven[11] = {1., 2., 24., 720., 40320., 3628800.,
                                  479001600., 87178291200., 20922789888000.,
                                  6402373705728000., 2432902008176640000.};
constexpr double kFactOdd[11] = {1., 6., 120., 5040., 362880., 39916800.,
                                 6227020800., 1307674368000., 355687428096000.,
                                 121645100408832000., 51090942171709440000.};
constexpr double kFactEvenShift[11] = {2., 24., 720., 40320., 3628800.,
                                       479001600., 87178291200., 20922789888000.,
                                       6402373705728000., 2432902008176640000.,
                                       1124000727777607680000.};
constexpr double kFactOddShift[11] = {6., 120., 5040., 362880., 39916800.,
                                      6227020800., 1307674368000., 355687428096000.,
                                      121645100408832000., 51090942171709440000.,
                                      25852016738884976640000.};

double s_prime_series(double x)
{
    // sum (k+1) x^k / (2k+3)!
    double acc = 11.0 / kFactOddShift[10];
    for (int k = 9; k >= 0; --k)
        acc = acc * x + double(k + 1) / kFactOddShift[k];
    return acc;
}

} // namespace

double eval_C(double x)
{
    require_finite(x);
    if (std::fabs(x) < kSeriesThreshold)
        return poly10(x, kFactEven);
    return x >= 0.0 ? std::cosh(std::sqrt(x)) : std::cos(std::sqrt(-x));
}

double eval_S(double x)
{
    require_finite(x);
    if (std::fabs(x) < kSeriesThreshold)
        return poly10(x, kFactOdd);
    const double r = std::sqrt(std::fabs(x));
    return x > 0.0 ? std::sinh(r) / r : std::sin(r) / r;
}

double eval_S_prime(double x)
{
    require_finite(x);
    if (std::fabs(x) < kSeriesThreshold)
        return s_prime_series(x);
    return (eval_C(x) - eval_S(x)) / (2.0 * x);
}

std::pair<double, double> stable_quotients(double x)
{
    require_finite(x);
    if (std::fabs(x) < kSeriesThreshold)
        return {poly10(x, kFactEvenShift), poly10(x, kFactOddShift)};
    return {(eval_C(x) - 1.0) / x, (eval_S(x) - 1.0) / x};
}

bool above_f_domain(double x)
{
    return std::isfinite(x) && x > -kPiSq;
}

double eval_f(double x)
{
    require_finite(x);
    if (!(x > -kPiSq))
        throw std::domain_error("eval_f: argument must exceed -pi^2");
    return eval_C(x) / (2.0 * eval_S_prime(x));
}

} // namespace sl2cx
