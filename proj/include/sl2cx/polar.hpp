#pragma once

#include "sl2cx/metric.hpp"
#include "sl2cx/sl2.hpp"

#include <array>
#include <memory>
#include <utility>
#include <vector>

namespace sl2cx {

/// Slice representative (e, uU + aH) with a >= 0, together with the metric
/// parameter. x and y are the coordinates in which the slice conditions and
/// the boundary equation are expressed.
struct SlicePoint {
    double u{0.0};
    double a{0.0};
    double m{0.0};

    SlicePoint() = default;
    SlicePoint(double uu, double aa, double mm);

    [[nodiscard]] double x() const { return 4.0 * u * u * m * m - 4.0 * a * a; }
    [[nodiscard]] double y() const { return 4.0 * u * u * m * m + 4.0 * a * a * m; }
    [[nodiscard]] AlgebraVector algebra() const { return AlgebraVector::real(u, a, 0.0); }
    [[nodiscard]] TangentPoint tangent() const;
};

/// The polar map P_m : G x g -> SL2(C),
///   (g, X) -> g exp(i(-m X_k + X_p)) exp(i(1+m) X_k).
[[nodiscard]] GroupElement polar(double m, const TangentPoint& p);

/// The six tangent-image vectors of DP_m at (e, uU + aH), left-translated to
/// the identity and with the common Ad factor removed. Rows 1, 2, 6 live in
/// span{U, H, iW}; rows 3, 4, 5 in span{iU, iH, W}.
[[nodiscard]] std::array<AlgebraVector, 6> six_vectors(const SlicePoint& s);

/// The two 3x3 determinants whose vanishing detects the rank drop of DP_m:
/// first from rows (1, 2, 6), second from rows (3, 4, 5).
[[nodiscard]] std::pair<double, double> slice_determinants(const SlicePoint& s);

/// Condition (*): x = 4u^2 m^2 - 4a^2 > -pi^2 (defines Sigma_m^*).
[[nodiscard]] bool in_sigma_star(const SlicePoint& s);

/// Inequality part of Sigma_m membership: (*) and (**) y < f(x).
[[nodiscard]] bool sigma_inequalities(double m, double u, double a);

struct Window {
    double u0{-6.0}, u1{6.0};
    double a0{0.0}, a1{6.0};
};

/// Connected component of the origin inside {(*) and (**)}, certified by a
/// flood fill on a grid of cell centers. Queries outside the window fall
/// back to the inequalities alone. Immutable after construction.
class SigmaRegion {
public:
    SigmaRegion(double m, Window win, int nu = 600, int na = 600);

    [[nodiscard]] double m() const { return m_; }
    [[nodiscard]] const Window& window() const { return win_; }
    [[nodiscard]] bool contains(double u, double a) const;

    /// Grid-level statistics: inequality cells vs cells reachable from the
    /// origin. Equality means the inequality region is empirically connected
    /// at this resolution.
    [[nodiscard]] long cells_inequalities() const { return n_ineq_; }
    [[nodiscard]] long cells_component() const { return n_comp_; }
    [[nodiscard]] bool empirically_connected() const { return n_ineq_ == n_comp_; }

    /// Process-wide cache of default-window regions, one per m.
    static const SigmaRegion& shared(double m);

private:
    [[nodiscard]] bool cell_marked(int iu, int ia) const;

    double m_;
    Window win_;
    int nu_, na_;
    double du_, da_;
    std::vector<char> component_;
    long n_ineq_{0};
    long n_comp_{0};
};

/// Full Sigma_m membership (inequalities plus component of the origin).
[[nodiscard]] bool in_sigma_m(const SlicePoint& s);

/// For m > -1: the a >= 0 with y = f(x) above the given u (the boundary of
/// Sigma_m over u), located by a 0.01-step scan plus bisection.
/// Throws for m <= -1 (there the boundary is the hyperbola x = -pi^2) and
/// when no sign change is found.
[[nodiscard]] double boundary_a(double m, double u);

/// Central-difference differential of P_m in the left-translated chart,
/// as a real 6x6 matrix (rows: Re u, Re h, Re w, Im u, Im h, Im w of g^C;
/// columns: the three group directions then the three fiber directions).
struct JacobianResult {
    std::array<std::array<double, 6>, 6> M{};
    double det{0.0};
    double det_normalized{0.0}; // det divided by the product of column norms
};

[[nodiscard]] JacobianResult numeric_jacobian(double m, const TangentPoint& p,
                                              double step = 1e-5);

} // namespace sl2cx
