#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2cx/figures.hpp"

#include "sl2cx/verify.hpp"

#include <json.hpp>

#include <cmath>
#include <set>
#include <sstream>

using namespace sl2cx;

namespace {

std::string csv_of(const FigureSpec& spec)
{
    std::ostringstream os;
    write_csv(build_figure(spec), os);
    return os.str();
}

} // namespace

TEST_CASE("figure 1: both boundaries per m, coincidence for m <= -1")
{
    FigureSpec spec;
    spec.figure = 1;
    spec.resolution = 200;
    const FigureData data = build_figure(spec); // default m = {-1.5, -0.5, 1}

    std::set<std::string> kinds;
    for (const auto& c : data.curves)
        kinds.insert(c.kind);
    CHECK(kinds == std::set<std::string>{"sigma_m_boundary", "sigma_star_boundary"});

    // m = -1.5: the two curves coincide pointwise
    const FigureCurve* sm = nullptr;
    const FigureCurve* ss = nullptr;
    for (const auto& c : data.curves)
        if (c.m == -1.5)
            (c.kind == "sigma_m_boundary" ? sm : ss) = &c;
    REQUIRE(sm != nullptr);
    REQUIRE(ss != nullptr);
    REQUIRE(sm->points.size() == ss->points.size());
    for (size_t i = 0; i < sm->points.size(); ++i) {
        CHECK(sm->points[i].u == ss->points[i].u);
        CHECK(sm->points[i].a == ss->points[i].a);
    }

    // m > -1: strictly positive reported gap
    REQUIRE(data.boundary_gaps.size() == 2);
    for (const auto& [m, gap] : data.boundary_gaps) {
        CHECK(m > -1.0);
        CHECK(gap > 0.0);
    }

    // residual column satisfies the defining equations
    for (const auto& c : data.curves)
        for (const auto& v : c.points)
            CHECK(v.residual < 1e-9);
}

TEST_CASE("figure 2: P boundary, R-orbits, slice including the three points")
{
    FigureSpec spec;
    spec.figure = 2;
    spec.window = Window{-3.0, 3.0, -3.0, 3.0};
    spec.resolution = 150;
    const FigureData data = build_figure(spec);

    int isolated = 0;
    bool has_boundary = false, has_levels = false, has_slice_ray = false;
    for (const auto& c : data.curves) {
        if (c.kind == "P_boundary") {
            has_boundary = true;
            for (const auto& v : c.points)
                CHECK(std::fabs(v.u * v.a - 1.0) < 1e-12); // st = 1 in (s,t) columns
        }
        if (c.kind.rfind("level_c=", 0) == 0)
            has_levels = true;
        if (c.kind == "S_slice") {
            if (c.points.size() == 1)
                ++isolated;
            else
                has_slice_ray = true;
        }
    }
    CHECK(has_boundary);
    CHECK(has_levels);
    CHECK(has_slice_ray);
    CHECK(isolated == 3); // p0, p1, p3
}

TEST_CASE("figure 3: gamma curve lies inside the Sigma_m region for m = 1")
{
    FigureSpec spec;
    spec.figure = 3;
    spec.m_values = {1.0};
    spec.resolution = 150;
    spec.window = Window{-2.0, 2.0, 0.0, 2.0};
    const FigureData data = build_figure(spec);

    bool saw_gamma = false, saw_level = false;
    for (const auto& c : data.curves) {
        if (c.kind == "gamma_zero") {
            saw_gamma = true;
            // the graph lies in Sigma_m for u != 0; at u = 0 it touches the
            // boundary point (0, tilde a)
            for (const auto& v : c.points)
                if (std::fabs(v.u) > 1e-9)
                    CHECK(in_sigma_m(SlicePoint{v.u, v.a, 1.0}));
        }
        if (c.kind.rfind("level_c=", 0) == 0) {
            saw_level = true;
            for (const auto& v : c.points)
                CHECK(v.residual < 1e-8);
        }
    }
    CHECK(saw_gamma);
    CHECK(saw_level);
}

TEST_CASE("CSV output is deterministic and carries the fixed schema")
{
    FigureSpec spec;
    spec.figure = 3;
    spec.m_values = {-0.5};
    spec.resolution = 120;
    const std::string a = csv_of(spec);
    const std::string b = csv_of(spec);
    CHECK(a == b);
    CHECK(a.rfind("m,u,a,kind,residual\n", 0) == 0);
}

TEST_CASE("JSON and SVG writers produce well-formed output")
{
    FigureSpec spec;
    spec.figure = 1;
    spec.m_values = {1.0};
    spec.resolution = 64;
    const FigureData data = build_figure(spec);

    std::ostringstream js;
    write_json(data, js);
    const nlohmann::json parsed = nlohmann::json::parse(js.str());
    CHECK(parsed["figure"] == 1);
    CHECK(parsed["curves"].is_array());
    CHECK(!parsed["curves"].empty());

    std::ostringstream svg;
    write_svg(data, svg);
    const std::string s = svg.str();
    CHECK(s.rfind("<svg", 0) == 0);
    CHECK(s.find("sigma_m_boundary") != std::string::npos);
    CHECK(s.find("</svg>") != std::string::npos);
}

TEST_CASE("figure spec validation")
{
    FigureSpec bad;
    bad.figure = 4;
    CHECK_THROWS_AS((void)build_figure(bad), std::invalid_argument);
    bad.figure = 1;
    bad.resolution = 8;
    CHECK_THROWS_AS((void)build_figure(bad), std::invalid_argument);
}

TEST_CASE("verify: suite dispatch and scaling")
{
    CHECK_THROWS_AS((void)run_suite("bogus", 1, 0.0, 1.0), std::invalid_argument);

    const SuiteReport rep = run_suite("functions", 7, 0.0, 1.0);
    CHECK(rep.all_passed());
    CHECK(!rep.checks.empty());

    std::ostringstream os;
    write_report_json(rep, os);
    const nlohmann::json j = nlohmann::json::parse(os.str());
    CHECK(j["suite"] == "functions");
    CHECK(j["passed"] == true);
    CHECK(j["checks"].is_array());
}
