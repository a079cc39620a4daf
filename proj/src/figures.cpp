#include "sl2cx/figures.hpp"

#include "sl2cx/scalar_kernel.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace sl2cx {

namespace {

constexpr double kPiSq = std::numbers::pi * std::numbers::pi;

std::string level_kind(double c)
{
    return "level_c=" + format_double(c);
}

FigureCurve sigma_star_curve(double m, const Window& win, int n)
{
    FigureCurve curve{"sigma_star_boundary", m, {}};
    for (int i = 0; i <= n; ++i) {
        const double u = win.u0 + (win.u1 - win.u0) * i / n;
        const double a = std::sqrt(u * u * m * m + kPiSq / 4.0);
        if (a < win.a0 || a > win.a1)
            continue;
        const SlicePoint s{u, a, m};
        curve.points.push_back({u, a, std::fabs(s.x() + kPiSq)});
    }
    return curve;
}

FigureCurve sigma_m_curve(double m, const Window& win, int n)
{
    FigureCurve curve{"sigma_m_boundary", m, {}};
    if (m <= -1.0) {
        // the slice boundary coincides with the Sigma_m^* hyperbola
        curve.points = sigma_star_curve(m, win, n).points;
        return curve;
    }
    for (int i = 0; i <= n; ++i) {
        const double u = win.u0 + (win.u1 - win.u0) * i / n;
        const double a = boundary_a(m, u);
        if (a < win.a0 || a > win.a1)
            continue;
        const SlicePoint s{u, a, m};
        curve.points.push_back({u, a, std::fabs(s.y() - eval_f(s.x()))});
    }
    return curve;
}

FigureCurve gamma_zero_curve(double m, const Window& win, int n)
{
    FigureCurve curve{"gamma_zero", m, {}};
    for (int i = 0; i <= n; ++i) {
        const double u = win.u0 + (win.u1 - win.u0) * i / n;
        const double a = gamma_curve(m, u);
        if (a < win.a0 || a > win.a1)
            continue;
        double residual = 0.0;
        if (m != 0.0)
            residual = std::fabs(gamma_value(SlicePoint{u, a, m}));
        curve.points.push_back({u, a, residual});
    }
    return curve;
}

// Hyperbola st = c inside the (s,t) window, one curve per branch.
std::vector<FigureCurve> st_level_curves(double c, const Window& win, int n)
{
    std::vector<FigureCurve> out;
    const std::string kind = level_kind(c);
    if (c == 0.0) {
        FigureCurve s_axis{kind, 0.0, {}};
        for (int i = 0; i <= n; ++i) {
            const double s = win.u0 + (win.u1 - win.u0) * i / n;
            s_axis.points.push_back({s, 0.0, 0.0});
        }
        FigureCurve t_axis{kind, 0.0, {}};
        for (int i = 0; i <= n; ++i) {
            const double t = win.a0 + (win.a1 - win.a0) * i / n;
            t_axis.points.push_back({0.0, t, 0.0});
        }
        out.push_back(std::move(s_axis));
        out.push_back(std::move(t_axis));
        return out;
    }
    // two branches: s > 0 and s < 0, each parametrized on a log grid
    for (const double sign : {1.0, -1.0}) {
        FigureCurve branch{kind, 0.0, {}};
        const double lo = 1e-3, hi = std::max({std::fabs(win.u0), std::fabs(win.u1), 1.0});
        for (int i = 0; i <= n; ++i) {
            const double s = sign * lo * std::pow(hi / lo, double(i) / n);
            const double t = c / s;
            if (s < win.u0 || s > win.u1 || t < win.a0 || t > win.a1)
                continue;
            branch.points.push_back({s, t, std::fabs(s * t - c)});
        }
        if (branch.points.size() > 1)
            out.push_back(std::move(branch));
    }
    return out;
}

// The R-slice S = {s+t = 2, t >= s} u {s+t = -2, s >= t} u {p0, p1, p3}.
std::vector<FigureCurve> s_slice_curves(const Window& win, int n)
{
    std::vector<FigureCurve> out;
    FigureCurve upper{"S_slice", 0.0, {}};
    for (int i = 0; i <= n; ++i) {
        const double s = win.u0 + (win.u1 - win.u0) * i / n;
        const double t = 2.0 - s;
        if (t < s || t < win.a0 || t > win.a1)
            continue;
        upper.points.push_back({s, t, std::fabs(s + t - 2.0)});
    }
    FigureCurve lower{"S_slice", 0.0, {}};
    for (int i = 0; i <= n; ++i) {
        const double s = win.u0 + (win.u1 - win.u0) * i / n;
        const double t = -2.0 - s;
        if (s < t || t < win.a0 || t > win.a1)
            continue;
        lower.points.push_back({s, t, std::fabs(s + t + 2.0)});
    }
    if (!upper.points.empty())
        out.push_back(std::move(upper));
    if (!lower.points.empty())
        out.push_back(std::move(lower));
    for (const auto& [ps, pt] : {std::pair{0.0, 0.0}, std::pair{2.0, 0.0}, std::pair{-2.0, 0.0}})
        out.push_back(FigureCurve{"S_slice", 0.0, {{ps, pt, 0.0}}});
    return out;
}

std::vector<FigureCurve> p_boundary_curves(const Window& win, int n)
{
    std::vector<FigureCurve> out;
    for (const double sign : {1.0, -1.0}) {
        FigureCurve branch{"P_boundary", 0.0, {}};
        const double lo = 1e-2, hi = std::max({std::fabs(win.u0), std::fabs(win.u1), 1.0});
        for (int i = 0; i <= n; ++i) {
            const double s = sign * lo * std::pow(hi / lo, double(i) / n);
            const double t = 1.0 / s;
            if (s < win.u0 || s > win.u1 || t < win.a0 || t > win.a1)
                continue;
            branch.points.push_back({s, t, std::fabs(s * t - 1.0)});
        }
        if (branch.points.size() > 1)
            out.push_back(std::move(branch));
    }
    return out;
}

} // namespace

FigureData build_figure(const FigureSpec& spec)
{
    if (spec.figure < 1 || spec.figure > 3)
        throw std::invalid_argument("build_figure: figure must be 1, 2 or 3");
    if (spec.resolution < 16)
        throw std::invalid_argument("build_figure: resolution must be >= 16");
    if (!std::isfinite(spec.window.u0) || !std::isfinite(spec.window.u1) ||
        !std::isfinite(spec.window.a0) || !std::isfinite(spec.window.a1))
        throw std::invalid_argument("build_figure: window must be finite");

    FigureData data;
    data.figure = spec.figure;
    data.window = spec.window;
    const int n = spec.resolution;

    std::vector<double> ms = spec.m_values;
    if (ms.empty()) {
        if (spec.figure == 1)
            ms = {-1.5, -0.5, 1.0};
        else if (spec.figure == 3)
            ms = {-0.5, 1.0};
    }
    std::vector<double> levels = spec.levels;
    if (levels.empty() && spec.figure == 2)
        levels = {0.6, 0.2, 0.0, -0.6};
    if (levels.empty() && spec.figure == 3)
        levels = {0.7, 0.2, 0.0, -0.7};

    if (spec.figure == 2) {
        for (auto& c : p_boundary_curves(spec.window, n))
            data.curves.push_back(std::move(c));
        for (const double c : levels)
            for (auto& curve : st_level_curves(c, spec.window, n))
                data.curves.push_back(std::move(curve));
        for (auto& c : s_slice_curves(spec.window, n))
            data.curves.push_back(std::move(c));
        return data;
    }

    for (const double m : ms) {
        data.curves.push_back(sigma_m_curve(m, spec.window, n));
        data.curves.push_back(sigma_star_curve(m, spec.window, n));
        if (spec.figure == 1 && m > -1.0) {
            // minimal vertical gap between the two boundaries over the window
            double gap = 1e300;
            for (int i = 0; i <= n; ++i) {
                const double u = spec.window.u0 + (spec.window.u1 - spec.window.u0) * i / n;
                const double a_m = boundary_a(m, u);
                const double a_star = std::sqrt(u * u * m * m + kPiSq / 4.0);
                gap = std::min(gap, a_star - a_m);
            }
            data.boundary_gaps.emplace_back(m, gap);
        }
        if (spec.figure == 3) {
            if (m > -1.0)
                data.curves.push_back(gamma_zero_curve(m, spec.window, n));
            for (const double c : levels) {
                LevelSet ls = trace_level_set(m, c, spec.window, n, n);
                for (auto& branch : ls.branches)
                    data.curves.push_back(FigureCurve{level_kind(c), m, std::move(branch)});
            }
        }
    }
    return data;
}

std::string format_double(double v)
{
    if (v == 0.0)
        v = 0.0; // normalize -0
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_csv(const FigureData& data, std::ostream& os)
{
    os << "m,u,a,kind,residual\n";
    for (const auto& curve : data.curves)
        for (const auto& v : curve.points)
            os << format_double(curve.m) << ',' << format_double(v.u) << ','
               << format_double(v.a) << ',' << curve.kind << ','
               << format_double(v.residual) << '\n';
}

void write_svg(const FigureData& data, std::ostream& os)
{
    const Window& w = data.window;
    const double width = w.u1 - w.u0;
    const double height = w.a1 - w.a0;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(w.u0)
       << " " << format_double(-w.a1) << " " << format_double(width) << " "
       << format_double(height) << "\">\n";
    for (const auto& curve : data.curves) {
        if (curve.points.empty())
            continue;
        if (curve.points.size() == 1) {
            os << "  <circle class=\"" << curve.kind << "\" cx=\""
               << format_double(curve.points[0].u) << "\" cy=\""
               << format_double(-curve.points[0].a) << "\" r=\""
               << format_double(width / 200.0) << "\"/>\n";
            continue;
        }
        os << "  <path class=\"" << curve.kind << "\" fill=\"none\" d=\"";
        bool first = true;
        for (const auto& v : curve.points) {
            os << (first ? "M" : " L") << format_double(v.u) << ' ' << format_double(-v.a);
            first = false;
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
}

void write_json(const FigureData& data, std::ostream& os)
{
    nlohmann::json j;
    j["figure"] = data.figure;
    j["window"] = {data.window.u0, data.window.u1, data.window.a0, data.window.a1};
    j["curves"] = nlohmann::json::array();
    for (const auto& curve : data.curves) {
        nlohmann::json c;
        c["kind"] = curve.kind;
        c["m"] = curve.m;
        c["points"] = nlohmann::json::array();
        for (const auto& v : curve.points)
            c["points"].push_back({v.u, v.a, v.residual});
        j["curves"].push_back(std::move(c));
    }
    if (!data.boundary_gaps.empty()) {
        j["boundary_gaps"] = nlohmann::json::array();
        for (const auto& [m, gap] : data.boundary_gaps)
            j["boundary_gaps"].push_back({{"m", m}, {"min_gap", gap}});
    }
    os << j.dump(2) << '\n';
}

} // namespace sl2cx
