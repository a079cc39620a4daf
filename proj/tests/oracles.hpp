// Test-only oracles, kept independent of the library code paths they check.
#pragma once

#include "sl2cx/sl2.hpp"

#include <cmath>
#include <random>

namespace oracle {

using sl2cx::AlgebraVector;
using sl2cx::cplx;
using sl2cx::Mat2c;

// Matrix exponential by degree-24 Taylor with 7 scaling-and-squaring steps.
// Deliberately ignorant of the closed form under test.
inline Mat2c exp_taylor(const Mat2c& z)
{
    constexpr int kSquarings = 7;
    constexpr int kDegree = 24;
    const double scale = 1.0 / double(1 << kSquarings);
    const Mat2c zs = cplx(scale) * z;
    const Mat2c id{1.0, 0.0, 0.0, 1.0};
    Mat2c acc = id;
    Mat2c term = id;
    for (int k = 1; k <= kDegree; ++k) {
        term = cplx(1.0 / double(k)) * (term * zs);
        acc = acc + term;
    }
    for (int k = 0; k < kSquarings; ++k)
        acc = acc * acc;
    return acc;
}

// Trace of ad(X) ad(Y) via the matrix representation: for sl2 this equals
// 4 tr(XY), an independent route to the Killing form.
inline double killing_by_trace(const AlgebraVector& X, const AlgebraVector& Y)
{
    const Mat2c mx = sl2cx::matrix_of(X);
    const Mat2c my = sl2cx::matrix_of(Y);
    const Mat2c p = mx * my;
    return 4.0 * (p.a + p.d).real();
}

// Central difference of a scalar function.
template <typename F>
double central_diff(F&& f, double x, double h)
{
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    double uniform(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(engine);
    }
    AlgebraVector real_vector(double radius)
    {
        return AlgebraVector::real(uniform(-radius, radius), uniform(-radius, radius),
                                   uniform(-radius, radius));
    }
    AlgebraVector complex_vector(double radius)
    {
        return {cplx(uniform(-radius, radius), uniform(-radius, radius)),
                cplx(uniform(-radius, radius), uniform(-radius, radius)),
                cplx(uniform(-radius, radius), uniform(-radius, radius))};
    }
    sl2cx::GroupElement random_real_group(double radius)
    {
        return sl2cx::exp_group(real_vector(radius));
    }
    sl2cx::GroupElement random_group(double radius)
    {
        return sl2cx::exp_group(real_vector(radius)) *
               sl2cx::exp_group(cplx(0.0, 1.0) * real_vector(radius));
    }
};

inline double dist(const AlgebraVector& X, const AlgebraVector& Y)
{
    return sl2cx::max_abs(X - Y);
}

inline double dist(const Mat2c& A, const Mat2c& B)
{
    return std::max({std::abs(A.a - B.a), std::abs(A.b - B.b), std::abs(A.c - B.c),
                     std::abs(A.d - B.d)});
}

} // namespace oracle
