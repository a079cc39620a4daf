#pragma once

#include "sl2cx/reduced.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sl2cx {

/// Dataset request for one of the three figures:
///   1 - boundaries of Sigma_m and Sigma_m^* in the (u,a) slice
///   2 - the P-plane: boundary st = 1, R-orbit hyperbolas, the slice S
///   3 - boundaries, the Gamma = 0 curve and level sets l_c
/// For figure 2 the window is read in (s,t) coordinates.
struct FigureSpec {
    int figure{1};
    std::vector<double> m_values{};  // default per figure when empty
    Window window{-3.0, 3.0, 0.0, 3.0};
    int resolution{800};
    std::vector<double> levels{}; // c values for level curves (figures 2, 3)
};

/// One polyline with its CSV kind tag; vertices carry the residual of the
/// curve's defining equation. Rows of figure 2 store (s,t) in the (u,a)
/// columns and m = 0.
struct FigureCurve {
    std::string kind;
    double m{0.0};
    Polyline points;
};

struct FigureData {
    int figure{1};
    Window window;
    std::vector<FigureCurve> curves;
    /// figure 1 extra: minimal vertical gap between the Sigma_m boundary and
    /// the Sigma_m^* boundary per m (empty unless figure 1 and m > -1)
    std::vector<std::pair<double, double>> boundary_gaps;
};

[[nodiscard]] FigureData build_figure(const FigureSpec& spec);

/// CSV schema: header "m,u,a,kind,residual", shortest round-trip decimals.
void write_csv(const FigureData& data, std::ostream& os);

/// SVG with a fixed viewBox mapped from the window, one path per branch,
/// class names only (no styling).
void write_svg(const FigureData& data, std::ostream& os);

void write_json(const FigureData& data, std::ostream& os);

/// Shortest round-trip decimal representation of a double.
[[nodiscard]] std::string format_double(double v);

} // namespace sl2cx
