#include "sl2cx/reduced.hpp"

#include "sl2cx/scalar_kernel.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <future>
#include <map>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <unordered_map>

namespace sl2cx {

namespace {

constexpr double kPiSq = std::numbers::pi * std::numbers::pi;

// C(x) + p S(x) and C(x) - p S(x) for x = p^2 - q^2 (q^2 >= 0). For x > 0
// the naive combination cancels catastrophically when p ~ sqrt(x); the
// exponential split with theta -+ p rewritten through q^2 is exact there.
struct CsCombo {
    double plus;  // C + pS
    double minus; // C - pS
};

CsCombo cs_combinations(double x, double p, double q_sq)
{
    if (x < kSeriesThreshold) {
        const double C = eval_C(x), S = eval_S(x);
        return {C + p * S, C - p * S};
    }
    const double theta = std::sqrt(x);
    double tm = theta - p; // theta - p
    double tp = theta + p; // theta + p
    if (p > 0.5 * theta)
        tm = -q_sq / (theta + p);
    else if (p < -0.5 * theta)
        tp = -q_sq / (theta - p);
    const double ep = std::exp(theta), em = std::exp(-theta);
    return {(tp * ep + tm * em) / (2.0 * theta), (tm * ep + tp * em) / (2.0 * theta)};
}

} // namespace

PPoint reduced_polar(const SlicePoint& s)
{
    const double p = 2.0 * s.u * s.m;
    const double q_sq = 4.0 * s.a * s.a;
    const CsCombo cs = cs_combinations(s.x(), p, q_sq);
    const double w = 2.0 * s.u * (1.0 + s.m);
    return PPoint{std::exp(-w) * cs.plus, std::exp(w) * cs.minus};
}

double st_of(const SlicePoint& s)
{
    const double S = eval_S(s.x());
    return 1.0 - 4.0 * s.a * s.a * S * S;
}

double phi_m(const SlicePoint& s)
{
    return 2.0 * s.a * eval_S(s.x());
}

double image_distance(const SlicePoint& p, const SlicePoint& q)
{
    const PPoint zp = reduced_polar(p);
    const PPoint zq = reduced_polar(q);
    return std::hypot(zp.s - zq.s, zp.t - zq.t);
}

// --------------------------------------------------------------------------
// Level sets (marching squares)
// --------------------------------------------------------------------------

int LevelSet::branches_in_positive_quadrant(double eps) const
{
    int count = 0;
    for (const auto& branch : branches)
        for (const auto& v : branch)
            if (v.u > eps && v.a > eps) {
                ++count;
                break;
            }
    return count;
}

namespace {

struct EdgeKey {
    int i, j;
    bool horizontal;
    bool operator<(const EdgeKey& o) const
    {
        return std::tie(i, j, horizontal) < std::tie(o.i, o.j, o.horizontal);
    }
};

} // namespace

LevelSet trace_level_set(double m, double c, Window win, int nu, int na,
                         const SigmaRegion* region)
{
    if (!(c <= 1.0))
        throw std::invalid_argument("trace_level_set: c must be <= 1");
    if (nu < 2 || na < 2 || !(win.u0 < win.u1) || !(win.a0 < win.a1) || win.a0 < 0.0)
        throw std::invalid_argument("trace_level_set: bad window or resolution");
    const SigmaRegion& reg = region ? *region : SigmaRegion::shared(m);

    const double du = (win.u1 - win.u0) / nu;
    const double da = (win.a1 - win.a0) / na;

    // c = 1 degenerates to the double root phi_m = 0, i.e. the axis a = 0
    // (S > 0 on Sigma_m^*); marching squares cannot see it, so emit it
    // directly when the window contains the axis.
    if (c == 1.0) {
        LevelSet axis;
        axis.m = m;
        axis.c = c;
        if (win.a0 == 0.0) {
            Polyline line;
            for (int i = 0; i <= nu; ++i) {
                const double u = win.u0 + i * du;
                if (reg.contains(u, 0.0))
                    line.push_back({u, 0.0, 0.0});
                else if (!line.empty()) {
                    axis.branches.push_back(std::move(line));
                    line.clear();
                }
            }
            if (!line.empty())
                axis.branches.push_back(std::move(line));
        }
        return axis;
    }
    const auto u_of = [&](int i) { return win.u0 + i * du; };
    const auto a_of = [&](int j) { return win.a0 + j * da; };
    const double level = 1.0 - c;
    const auto value = [&](double u, double a) {
        const double phi = phi_m(SlicePoint{u, a, m});
        return phi * phi - level;
    };

    const int nodes_u = nu + 1, nodes_a = na + 1;
    std::vector<double> h(size_t(nodes_u) * nodes_a);
    std::vector<char> in(size_t(nodes_u) * nodes_a);
    for (int j = 0; j < nodes_a; ++j)
        for (int i = 0; i < nodes_u; ++i) {
            const size_t idx = size_t(j) * nodes_u + i;
            h[idx] = value(u_of(i), a_of(j));
            in[idx] = reg.contains(u_of(i), a_of(j)) ? 1 : 0;
        }
    const auto H = [&](int i, int j) { return h[size_t(j) * nodes_u + i]; };
    const auto inside = [&](int i, int j) { return in[size_t(j) * nodes_u + i] != 0; };
    const auto positive = [&](int i, int j) { return H(i, j) >= 0.0; };

    // One refined vertex per crossing edge, shared between the two cells.
    std::map<EdgeKey, int> edge_vertex;
    std::vector<LevelVertex> vertices;
    const auto vertex_on_edge = [&](EdgeKey key) {
        const auto found = edge_vertex.find(key);
        if (found != edge_vertex.end())
            return found->second;
        double u0 = u_of(key.i), a0 = a_of(key.j);
        double u1 = key.horizontal ? u_of(key.i + 1) : u0;
        double a1 = key.horizontal ? a0 : a_of(key.j + 1);
        double h0 = value(u0, a0), h1 = value(u1, a1);
        if ((h0 >= 0.0) == (h1 >= 0.0))
            throw std::logic_error("trace_level_set: edge without sign change");
        for (int it = 0; it < 80; ++it) {
            const double um = 0.5 * (u0 + u1), am = 0.5 * (a0 + a1);
            const double hm = value(um, am);
            if ((hm >= 0.0) == (h0 >= 0.0)) {
                u0 = um;
                a0 = am;
                h0 = hm;
            } else {
                u1 = um;
                a1 = am;
                h1 = hm;
            }
        }
        const double uu = 0.5 * (u0 + u1), aa = 0.5 * (a0 + a1);
        vertices.push_back({uu, aa, std::fabs(value(uu, aa))});
        const int id = int(vertices.size()) - 1;
        edge_vertex.emplace(key, id);
        return id;
    };

    std::vector<std::pair<int, int>> segments;
    const auto emit = [&](EdgeKey a, EdgeKey b) {
        segments.emplace_back(vertex_on_edge(a), vertex_on_edge(b));
    };

    for (int j = 0; j < na; ++j)
        for (int i = 0; i < nu; ++i) {
            if (!(inside(i, j) && inside(i + 1, j) && inside(i + 1, j + 1) && inside(i, j + 1)))
                continue;
            const int idx = (positive(i, j) ? 1 : 0) | (positive(i + 1, j) ? 2 : 0) |
                            (positive(i + 1, j + 1) ? 4 : 0) | (positive(i, j + 1) ? 8 : 0);
            if (idx == 0 || idx == 15)
                continue;
            const EdgeKey bottom{i, j, true}, top{i, j + 1, true};
            const EdgeKey left{i, j, false}, right{i + 1, j, false};
            switch (idx) {
            case 1:
            case 14: emit(left, bottom); break;
            case 2:
            case 13: emit(bottom, right); break;
            case 4:
            case 11: emit(right, top); break;
            case 8:
            case 7: emit(top, left); break;
            case 3:
            case 12: emit(left, right); break;
            case 6:
            case 9: emit(bottom, top); break;
            case 5: // n00 and n11 positive: resolve by the center sample
                if (value(u_of(i) + 0.5 * du, a_of(j) + 0.5 * da) >= 0.0) {
                    emit(bottom, right);
                    emit(top, left);
                } else {
                    emit(left, bottom);
                    emit(right, top);
                }
                break;
            case 10: // n10 and n01 positive
                if (value(u_of(i) + 0.5 * du, a_of(j) + 0.5 * da) >= 0.0) {
                    emit(left, bottom);
                    emit(right, top);
                } else {
                    emit(bottom, right);
                    emit(top, left);
                }
                break;
            default: break;
            }
        }

    // Stitch segments into polylines along shared vertices.
    std::vector<std::vector<int>> adj(vertices.size());
    for (int sidx = 0; sidx < int(segments.size()); ++sidx) {
        adj[size_t(segments[size_t(sidx)].first)].push_back(sidx);
        adj[size_t(segments[size_t(sidx)].second)].push_back(sidx);
    }
    std::vector<char> used(segments.size(), 0);
    LevelSet out;
    out.m = m;
    out.c = c;

    const auto walk = [&](int start_vertex) {
        Polyline line;
        int v = start_vertex;
        line.push_back(vertices[size_t(v)]);
        while (true) {
            int next_seg = -1;
            for (int sidx : adj[size_t(v)])
                if (!used[size_t(sidx)]) {
                    next_seg = sidx;
                    break;
                }
            if (next_seg < 0)
                break;
            used[size_t(next_seg)] = 1;
            const auto [p, q] = segments[size_t(next_seg)];
            v = (p == v) ? q : p;
            line.push_back(vertices[size_t(v)]);
        }
        return line;
    };

    // Open curves first (their endpoints have a single incident segment).
    for (int v = 0; v < int(vertices.size()); ++v) {
        if (adj[size_t(v)].size() != 1)
            continue;
        bool fresh = false;
        for (int sidx : adj[size_t(v)])
            if (!used[size_t(sidx)])
                fresh = true;
        if (fresh)
            out.branches.push_back(walk(v));
    }
    // Remaining closed loops.
    for (int sidx = 0; sidx < int(segments.size()); ++sidx)
        if (!used[size_t(sidx)])
            out.branches.push_back(walk(segments[size_t(sidx)].first));

    return out;
}

// --------------------------------------------------------------------------
// Gamma, gamma curve, tilde a
// --------------------------------------------------------------------------

double gamma_value(const SlicePoint& s)
{
    if (s.m == -1.0)
        throw std::domain_error("gamma_value: undefined at m = -1");
    const double x = s.x();
    if (!(x > -kPiSq))
        throw std::domain_error("gamma_value: requires x > -pi^2");
    const double y0 = 4.0 * s.u * s.u * (1.0 + s.m) * (1.0 + s.m);
    return s.m / (1.0 + s.m) * eval_C(y0) / eval_S(y0) - eval_C(x) / eval_S(x);
}

double gamma_curve(double m, double u)
{
    if (!(m > -1.0))
        throw std::domain_error("gamma_curve: requires m > -1");
    if (m == 0.0)
        return std::numbers::pi / 4.0; // zero set degenerates to {a = pi/4}

    const auto g = [&](double a) { return gamma_value(SlicePoint{u, a, m}); };
    // Gamma is strictly increasing in a (x decreases, C/S increases in x),
    // negative at a = 0 and +infinity as x -> -pi^2.
    const double a_star = std::sqrt(u * u * m * m + kPiSq / 4.0);
    double lo = 0.0;
    double hi = a_star * (1.0 - 1e-12);
    double glo = g(lo);
    if (glo >= 0.0) {
        if (glo == 0.0)
            return lo;
        throw std::runtime_error("gamma_curve: no bracket, Gamma(u, 0) >= 0");
    }
    if (!(g(hi) > 0.0))
        throw std::runtime_error("gamma_curve: no bracket near the (*) boundary");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-15 * (1.0 + hi))
            break;
    }
    return 0.5 * (lo + hi);
}

double tilde_a(double m)
{
    if (!(m > 0.0))
        throw std::domain_error("tilde_a: requires m > 0");
    const double slope = 2.0 * (1.0 + m) / m;
    const auto g = [&](double a) { return std::tan(2.0 * a) - slope * a; };
    // The unique root lies in (0, pi/4): tan(2a) starts below the line and
    // diverges at pi/4.
    double lo = 1e-12, hi = std::numbers::pi / 4.0 - 1e-12;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-16)
            break;
    }
    return 0.5 * (lo + hi);
}

// --------------------------------------------------------------------------
// Injectivity scan
// --------------------------------------------------------------------------

namespace {

struct ScanPoint {
    double u, a;
    double s, t;
};

// Greedy pattern search over the four coordinates, shrinking the step when a
// sweep fails to improve. Sub-halving inside each sweep lets 20 sweeps reach
// far below the verification threshold.
struct Refined {
    SlicePoint p, q;
    double dist;
};

Refined refine_pair(SlicePoint p, SlicePoint q, double step0, const Window& win)
{
    double dist = image_distance(p, q);
    double step = step0;
    const auto clamped = [&](const SlicePoint& s, int coord, double delta) {
        SlicePoint t = s;
        double& v = (coord == 0) ? t.u : t.a;
        v += delta;
        if (t.a < 0.0)
            t.a = 0.0;
        t.u = std::clamp(t.u, win.u0, win.u1);
        t.a = std::clamp(t.a, win.a0, win.a1);
        return t;
    };
    for (int sweep = 0; sweep < 20; ++sweep) {
        bool sweep_improved = false;
        for (int which = 0; which < 4; ++which) {
            SlicePoint& target = (which < 2) ? p : q;
            const int coord = which % 2;
            double local = step;
            for (int sub = 0; sub < 8; ++sub, local *= 0.5) {
                bool coord_improved = false;
                bool moved;
                do {
                    moved = false;
                    for (const double sgn : {1.0, -1.0}) {
                        const SlicePoint cand = clamped(target, coord, sgn * local);
                        const double d = (which < 2) ? image_distance(cand, q)
                                                     : image_distance(p, cand);
                        if (d < dist) {
                            target = cand;
                            dist = d;
                            moved = true;
                            coord_improved = true;
                        }
                    }
                } while (moved);
                if (coord_improved) {
                    sweep_improved = true;
                    break;
                }
            }
        }
        if (!sweep_improved)
            step *= 0.125;
        else
            step *= 0.5;
    }
    return {p, q, dist};
}

} // namespace

ScanReport injectivity_scan(double m, const GridSpec& grid)
{
    ScanReport report;
    report.m = m;
    report.grid = grid;

    const Window& win = grid.win;
    const int nu = grid.nu, na = grid.na;
    if (nu < 2 || na < 2)
        throw std::invalid_argument("injectivity_scan: grid too small");
    const double du = (win.u1 - win.u0) / (nu - 1);
    const double da = (win.a1 - win.a0) / (na - 1);
    // The flood fill is seeded at the origin, so its window must contain it.
    Window rwin{std::min(win.u0, -0.1), std::max(win.u1, 0.1), 0.0, std::max(win.a1, 0.1)};
    const SigmaRegion region(m, rwin, std::min(nu, 600), std::min(na, 600));

    report.points_total = long(nu) * long(na);
    report.delta_pre = 10.0 * std::max(du, da);

    // Evaluate the reduced map on all member points, in parallel over rows.
    std::vector<std::vector<ScanPoint>> rows(static_cast<size_t>(na));
    const unsigned n_threads = std::max(1u, std::thread::hardware_concurrency());
    {
        std::vector<std::future<void>> futures;
        std::atomic<int> next_row{0};
        for (unsigned t = 0; t < n_threads; ++t)
            futures.push_back(std::async(std::launch::async, [&]() {
                for (int j = next_row.fetch_add(1); j < na; j = next_row.fetch_add(1)) {
                    auto& row = rows[size_t(j)];
                    const double a = win.a0 + j * da;
                    for (int i = 0; i < nu; ++i) {
                        const double u = win.u0 + i * du;
                        if (!region.contains(u, a))
                            continue;
                        const SlicePoint sp{u, std::max(a, 0.0), m};
                        const PPoint z = reduced_polar(sp);
                        row.push_back({sp.u, sp.a, z.s, z.t});
                    }
                }
            }));
        for (auto& f : futures)
            f.get();
    }

    std::vector<ScanPoint> pts;
    double smin = 0.0, smax = 0.0, tmin = 0.0, tmax = 0.0;
    bool first = true;
    for (auto& row : rows)
        for (const auto& sp : row) {
            if (first) {
                smin = smax = sp.s;
                tmin = tmax = sp.t;
                first = false;
            }
            smin = std::min(smin, sp.s);
            smax = std::max(smax, sp.s);
            tmin = std::min(tmin, sp.t);
            tmax = std::max(tmax, sp.t);
            const double prod = sp.s * sp.t;
            const double ref = st_of(SlicePoint{sp.u, sp.a, m});
            report.max_product_residual =
                std::max(report.max_product_residual, std::fabs(prod - ref));
            pts.push_back(sp);
        }
    report.points_in_sigma = long(pts.size());
    if (pts.empty())
        return report;

    const double diag = std::hypot(smax - smin, tmax - tmin);
    if (!(diag > 0.0))
        return report; // degenerate image cloud: nothing to pair
    report.delta_img = 1e-4 * diag;

    // Spatial hash on image cells of size delta_img, with coordinates
    // rebased to the bounding box so the keys stay small. Oversized cells
    // are stride-sampled for pair generation to bound the quadratic work.
    const double cell = report.delta_img;
    std::unordered_map<long long, std::vector<int>> buckets;
    buckets.reserve(pts.size());
    const auto key_of = [&](double s, double t) {
        const long long ks = (long long)std::floor((s - smin) / cell);
        const long long kt = (long long)std::floor((t - tmin) / cell);
        return ks * 2000003LL + kt;
    };
    for (int i = 0; i < int(pts.size()); ++i)
        buckets[key_of(pts[size_t(i)].s, pts[size_t(i)].t)].push_back(i);

    constexpr int kCellCap = 96;
    const auto sampled = [&](const std::vector<int>& v) {
        if (int(v.size()) <= kCellCap)
            return v;
        std::vector<int> out;
        const size_t stride = (v.size() + kCellCap - 1) / kCellCap;
        for (size_t k = 0; k < v.size(); k += stride)
            out.push_back(v[k]);
        return out;
    };

    // Keep the best candidate per pair of coarse preimage clusters.
    struct Candidate {
        int i, j;
        double dist;
    };
    const double cluster = 4.0 * report.delta_pre;
    std::map<std::array<long, 4>, Candidate> clusters;
    const auto consider = [&](int i, int j) {
        const auto& pi = pts[size_t(i)];
        const auto& pj = pts[size_t(j)];
        const double dpre = std::hypot(pi.u - pj.u, pi.a - pj.a);
        if (dpre <= report.delta_pre)
            return;
        const double dimg = std::hypot(pi.s - pj.s, pi.t - pj.t);
        if (dimg >= report.delta_img)
            return;
        std::array<long, 4> ka{long(std::floor(pi.u / cluster)), long(std::floor(pi.a / cluster)),
                               long(std::floor(pj.u / cluster)), long(std::floor(pj.a / cluster))};
        std::array<long, 4> kb{ka[2], ka[3], ka[0], ka[1]};
        const auto key = std::min(ka, kb);
        const auto found = clusters.find(key);
        if (found == clusters.end())
            clusters.emplace(key, Candidate{i, j, dimg});
        else if (dimg < found->second.dist)
            found->second = Candidate{i, j, dimg};
    };

    for (const auto& [key, vec] : buckets) {
        (void)key;
        const auto base = sampled(vec);
        for (int i : base) {
            const auto& pi = pts[size_t(i)];
            for (long long ds = -1; ds <= 1; ++ds)
                for (long long dt = -1; dt <= 1; ++dt) {
                    const long long nkey =
                        ((long long)std::floor((pi.s - smin) / cell) + ds) * 2000003LL +
                        ((long long)std::floor((pi.t - tmin) / cell) + dt);
                    const auto it = buckets.find(nkey);
                    if (it == buckets.end())
                        continue;
                    for (int j : sampled(it->second))
                        if (j > i)
                            consider(i, j);
                }
        }
    }
    report.candidate_pairs = long(clusters.size());

    // Refine the most promising clusters and verify collisions at 1e-9.
    std::vector<Candidate> ordered;
    ordered.reserve(clusters.size());
    for (const auto& [key, cand] : clusters) {
        (void)key;
        ordered.push_back(cand);
    }
    std::sort(ordered.begin(), ordered.end(), [](const Candidate& a, const Candidate& b) {
        return a.dist != b.dist ? a.dist < b.dist : std::tie(a.i, a.j) < std::tie(b.i, b.j);
    });
    if (ordered.size() > 128)
        ordered.resize(128);

    constexpr double kWitnessTol = 1e-9;
    for (const auto& cand : ordered) {
        const auto& pi = pts[size_t(cand.i)];
        const auto& pj = pts[size_t(cand.j)];
        Refined r = refine_pair(SlicePoint{pi.u, pi.a, m}, SlicePoint{pj.u, pj.a, m},
                                std::max(du, da), win);
        bool canonical = false;
        // Near-symmetric results snap to the exact witness form
        // ((u, gamma(u)), (-u, gamma(u))) when that form verifies.
        if (m > 0.0 && std::fabs(r.p.u + r.q.u) < 0.05 && std::fabs(r.p.a - r.q.a) < 0.05) {
            const double uc = 0.5 * (r.p.u - r.q.u);
            if (std::fabs(uc) > 1e-6) {
                try {
                    const double ac = gamma_curve(m, std::fabs(uc));
                    const SlicePoint cp{std::fabs(uc), ac, m};
                    const SlicePoint cq{-std::fabs(uc), ac, m};
                    const double cd = image_distance(cp, cq);
                    if (cd < kWitnessTol) {
                        r = {cp, cq, cd};
                        canonical = true;
                    }
                } catch (const std::exception&) {
                }
            }
        }
        if (r.dist >= kWitnessTol)
            continue;
        const double dpre = std::hypot(r.p.u - r.q.u, r.p.a - r.q.a);
        if (dpre <= report.delta_pre)
            continue; // the refinement merged the preimages: not a witness
        if (!region.contains(r.p.u, r.p.a) || !region.contains(r.q.u, r.q.a))
            continue;
        bool duplicate = false;
        for (const auto& w : report.witnesses) {
            const double d1 = std::hypot(w.first.u - r.p.u, w.first.a - r.p.a) +
                              std::hypot(w.second.u - r.q.u, w.second.a - r.q.a);
            const double d2 = std::hypot(w.first.u - r.q.u, w.first.a - r.q.a) +
                              std::hypot(w.second.u - r.p.u, w.second.a - r.p.a);
            if (std::min(d1, d2) < report.delta_pre) {
                duplicate = true;
                break;
            }
        }
        if (duplicate)
            continue;
        report.witnesses.push_back({r.p, r.q, r.dist, dpre, canonical});
        if (report.witnesses.size() >= 32)
            break;
    }
    std::sort(report.witnesses.begin(), report.witnesses.end(),
              [](const WitnessPair& a, const WitnessPair& b) {
                  return std::tie(a.first.u, a.first.a) < std::tie(b.first.u, b.first.a);
              });
    return report;
}

std::pair<SlicePoint, SlicePoint> noninjectivity_witness(double m, double u)
{
    if (!(m > 0.0))
        throw std::domain_error("noninjectivity_witness: requires m > 0");
    if (!(u > 0.0))
        throw std::invalid_argument("noninjectivity_witness: requires u > 0");
    const double a = gamma_curve(m, u);
    const SlicePoint p{u, a, m};
    const SlicePoint q{-u, a, m};
    if (!in_sigma_m(p) || !in_sigma_m(q))
        throw std::runtime_error("noninjectivity_witness: pair escapes Sigma_m");
    if (image_distance(p, q) >= 1e-9)
        throw std::runtime_error("noninjectivity_witness: image residual too large");
    return {p, q};
}

} // namespace sl2cx
