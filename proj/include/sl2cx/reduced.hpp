#pragma once

#include "sl2cx/polar.hpp"
#include "sl2cx/quotient.hpp"

#include <utility>
#include <vector>

namespace sl2cx {

/// Closed form of the reduced polar map F o P_m on the slice:
///   (e^{-2u(1+m)} (C(x) + 2um S(x)), e^{2u(1+m)} (C(x) - 2um S(x))),
/// x = 4u^2 m^2 - 4a^2. The combinations C -+ 2um S are evaluated with an
/// exponential split to avoid the cancellation at a ~ 0, u m > 0.
[[nodiscard]] PPoint reduced_polar(const SlicePoint& s);

/// st coordinate of the image: 1 - 4a^2 S(x)^2 (equals the product of the
/// reduced_polar components).
[[nodiscard]] double st_of(const SlicePoint& s);

/// phi_m(a, u) = 2a S(x); the level sets of st are {phi_m^2 = 1 - c}.
[[nodiscard]] double phi_m(const SlicePoint& s);

/// Polyline vertex on a traced level set, carrying the residual of the
/// defining equation |phi_m^2 - (1 - c)|.
struct LevelVertex {
    double u;
    double a;
    double residual;
};

using Polyline = std::vector<LevelVertex>;

struct LevelSet {
    double m{0.0};
    double c{0.0};
    std::vector<Polyline> branches;

    /// Branches meeting the open quadrant {u > eps, a > eps}.
    [[nodiscard]] int branches_in_positive_quadrant(double eps = 1e-2) const;
};

/// Contour of {phi_m^2 = 1 - c} inside Sigma_m by marching squares with
/// vertices refined on cell edges; split into connected polyline branches.
/// An empty result is valid. region defaults to SigmaRegion::shared(m).
[[nodiscard]] LevelSet trace_level_set(double m, double c, Window win, int nu = 800,
                                       int na = 800, const SigmaRegion* region = nullptr);

/// Gamma(uU + aH) = m/(1+m) C(y0)/S(y0) - C(x)/S(x) with y0 = 4u^2(1+m)^2;
/// its zero set is the off-axis preimage of {s = t}. Requires m != -1 and
/// x > -pi^2.
[[nodiscard]] double gamma_value(const SlicePoint& s);

/// The unique a >= 0 with Gamma(u, a) = 0 and x > -pi^2 (monotone bisection).
/// Requires m > -1. For m = 0 the zero set degenerates to {a = pi/4}, which
/// is returned for every u.
[[nodiscard]] double gamma_curve(double m, double u);

/// For m > 0: the root of tan(2a) = 2a (1+m)/m in (0, pi/2); the cutoff of
/// Sigma_m on the a-axis.
[[nodiscard]] double tilde_a(double m);

struct GridSpec {
    Window win{-1.5, 1.5, 0.0, 1.6};
    int nu{500};
    int na{500};
};

struct WitnessPair {
    SlicePoint first;
    SlicePoint second;
    double image_distance{0.0};
    double preimage_distance{0.0};
    /// True when the pair was snapped to the exact form ((u, gamma(u)),
    /// (-u, gamma(u))) after refinement.
    bool canonical{false};
};

struct ScanReport {
    double m{0.0};
    GridSpec grid;
    long points_total{0};
    long points_in_sigma{0};
    long candidate_pairs{0};
    double delta_img{0.0};
    double delta_pre{0.0};
    /// max |s t - (1 - 4a^2 S^2)| over all scanned points
    double max_product_residual{0.0};
    std::vector<WitnessPair> witnesses;
};

/// Evaluates the reduced polar map on every grid point inside Sigma_m and
/// reports verified near-collisions: image distance refined below 1e-9 with
/// the preimages staying more than delta_pre apart.
[[nodiscard]] ScanReport injectivity_scan(double m, const GridSpec& grid = {});

/// For m > 0 and u > 0: the pair ((u, gamma(u)), (-u, gamma(u))), both in
/// Sigma_m, with equal images (residual below 1e-9) on {s = t}.
[[nodiscard]] std::pair<SlicePoint, SlicePoint> noninjectivity_witness(double m, double u);

/// Residual helper: distance between the images of two slice points.
[[nodiscard]] double image_distance(const SlicePoint& p, const SlicePoint& q);

} // namespace sl2cx
