#include "sl2cx/figures.hpp"
#include "sl2cx/scalar_kernel.hpp"
#include "sl2cx/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sl2cx;

std::string default_out_dir()
{
    const char* env = std::getenv("SL2CX_OUT_DIR");
    return env && *env ? std::string(env) : std::string(".");
}

// "u0,u1,a0,a1" -> Window
Window parse_window(const std::string& text)
{
    Window w;
    std::istringstream is(text);
    char comma;
    if (!(is >> w.u0 >> comma >> w.u1 >> comma >> w.a0 >> comma >> w.a1))
        throw std::invalid_argument("--window expects u0,u1,a0,a1");
    return w;
}

int write_file(const std::string& path, const std::string& content)
{
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open output path: " << path << "\n";
        return 2;
    }
    os << content;
    os.flush();
    if (!os.good()) {
        std::cerr << "error: failed writing: " << path << "\n";
        return 2;
    }
    std::cout << path << "\n";
    return 0;
}

int run_figure(int figure, const std::vector<double>& ms, const std::string& window,
               int res, const std::string& format, std::string out,
               const std::vector<double>& levels)
{
    FigureSpec spec;
    spec.figure = figure;
    spec.m_values = ms;
    spec.resolution = res;
    spec.levels = levels;
    if (!window.empty())
        spec.window = parse_window(window);
    else if (figure == 2)
        spec.window = Window{-3.0, 3.0, -3.0, 3.0};

    const FigureData data = build_figure(spec);

    std::ostringstream body;
    if (format == "csv")
        write_csv(data, body);
    else if (format == "svg")
        write_svg(data, body);
    else if (format == "json")
        write_json(data, body);
    else {
        std::cerr << "error: unknown format: " << format << "\n";
        return 2;
    }
    if (out.empty())
        out = default_out_dir() + "/figure" + std::to_string(figure) + "." + format;
    const int rc = write_file(out, body.str());
    if (rc == 0)
        for (const auto& [m, gap] : data.boundary_gaps)
            std::cout << "m=" << format_double(m) << " min boundary gap "
                      << format_double(gap) << "\n";
    return rc;
}

int run_verify(const std::string& suite, std::uint64_t seed, double m, double tol,
               const std::string& out)
{
    SuiteReport report;
    try {
        report = run_suite(suite, seed, m, tol);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::ostringstream body;
    write_report_json(report, body);
    std::cout << body.str();
    if (!out.empty()) {
        const int rc = write_file(out, body.str());
        if (rc != 0)
            return rc;
    }
    return report.all_passed() ? 0 : 1;
}

int run_scan(double m, int res, const std::string& window, std::string out)
{
    GridSpec grid;
    grid.nu = res;
    grid.na = res;
    if (!window.empty())
        grid.win = parse_window(window);
    const ScanReport scan = injectivity_scan(m, grid);

    SuiteReport wrap;
    wrap.suite = "scan-injectivity";
    CheckResult summary;
    summary.name = "scan m=" + format_double(m);
    summary.passed = true;
    summary.max_residual = scan.max_product_residual;
    summary.samples = scan.points_in_sigma;
    summary.note = std::to_string(scan.witnesses.size()) + " witnesses, delta_img=" +
                   format_double(scan.delta_img) +
                   ", delta_pre=" + format_double(scan.delta_pre);
    wrap.checks.push_back(summary);
    wrap.witnesses = scan.witnesses;

    std::ostringstream body;
    write_report_json(wrap, body);
    std::cout << body.str();
    if (out.empty())
        out = default_out_dir() + "/scan_m" + format_double(m) + ".json";
    return write_file(out, body.str());
}

int run_boundary(double m, const std::string& u_range, int count, std::string out)
{
    double u0 = -1.5, u1 = 1.5;
    if (!u_range.empty()) {
        std::istringstream is(u_range);
        char comma;
        if (!(is >> u0 >> comma >> u1)) {
            std::cerr << "error: --u-range expects u0,u1\n";
            return 2;
        }
    }
    constexpr double pi_sq = std::numbers::pi * std::numbers::pi;
    std::ostringstream body;
    body << "m,u,a,kind,residual\n";
    for (int i = 0; i <= count; ++i) {
        const double u = u0 + (u1 - u0) * i / count;
        if (m > -1.0) {
            const double a = boundary_a(m, u);
            const SlicePoint s{u, a, m};
            body << format_double(m) << ',' << format_double(u) << ',' << format_double(a)
                 << ",sigma_m_boundary," << format_double(std::fabs(s.y() - eval_f(s.x())))
                 << "\n";
        } else {
            // for m <= -1 the slice boundary is the Sigma_m^* hyperbola
            const double a = std::sqrt(u * u * m * m + pi_sq / 4.0);
            const SlicePoint s{u, a, m};
            body << format_double(m) << ',' << format_double(u) << ',' << format_double(a)
                 << ",sigma_star_boundary," << format_double(std::fabs(s.x() + pi_sq))
                 << "\n";
        }
    }
    if (out.empty())
        out = default_out_dir() + "/boundary_m" + format_double(m) + ".csv";
    return write_file(out, body.str());
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"numerical toolkit for the adapted complexifications of SL2(R)"};
    app.require_subcommand(1);

    auto* fig = app.add_subcommand("figure", "emit figure datasets (CSV/SVG/JSON)");
    int fig_id = 1;
    std::vector<double> fig_m;
    std::string fig_window, fig_format = "csv", fig_out;
    int fig_res = 800;
    std::vector<double> fig_levels;
    fig->add_option("figure", fig_id, "figure id")->required()->check(CLI::Range(1, 3));
    fig->add_option("--m", fig_m, "metric parameters");
    fig->add_option("--window", fig_window, "window u0,u1,a0,a1");
    fig->add_option("--res", fig_res, "resolution")->check(CLI::Range(16, 4000));
    fig->add_option("--format", fig_format, "csv|svg|json");
    fig->add_option("--out", fig_out, "output path");
    fig->add_option("--levels", fig_levels, "level-set c values");

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string ver_suite;
    std::uint64_t ver_seed = 42;
    double ver_m = std::numeric_limits<double>::quiet_NaN();
    double ver_tol = 1.0;
    std::string ver_out;
    ver->add_option("suite", ver_suite,
                    "functions|algebra|geodesics|polar|quotients|reduced|all")
        ->required();
    ver->add_option("--m", ver_m, "restrict m-dependent checks to this m");
    ver->add_option("--seed", ver_seed, "random seed");
    ver->add_option("--tol", ver_tol, "tolerance scale factor");
    ver->add_option("--out", ver_out, "also write the JSON report here");

    auto* scan = app.add_subcommand("scan-injectivity", "grid scan for reduced-map collisions");
    double scan_m = 1.0;
    int scan_res = 500;
    std::string scan_window, scan_out;
    scan->add_option("--m", scan_m, "metric parameter")->required();
    scan->add_option("--res", scan_res, "grid resolution")->check(CLI::Range(16, 4000));
    scan->add_option("--window", scan_window, "window u0,u1,a0,a1");
    scan->add_option("--out", scan_out, "output path");

    auto* bnd = app.add_subcommand("boundary", "emit the slice boundary curve");
    double bnd_m = 1.0;
    std::string bnd_range, bnd_out;
    int bnd_count = 200;
    bnd->add_option("--m", bnd_m, "metric parameter")->required();
    bnd->add_option("--u-range", bnd_range, "u0,u1");
    bnd->add_option("--count", bnd_count, "sample count")->check(CLI::Range(1, 100000));
    bnd->add_option("--out", bnd_out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // help request
        app.exit(e);
        return 2;
    }

    try {
        if (fig->parsed())
            return run_figure(fig_id, fig_m, fig_window, fig_res, fig_format, fig_out,
                              fig_levels);
        if (ver->parsed())
            return run_verify(ver_suite, ver_seed, ver_m, ver_tol, ver_out);
        if (scan->parsed())
            return run_scan(scan_m, scan_res, scan_window, scan_out);
        if (bnd->parsed())
            return run_boundary(bnd_m, bnd_range, bnd_count, bnd_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
