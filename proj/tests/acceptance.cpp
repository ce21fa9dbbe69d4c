// Acceptance gate: nine end-to-end criteria, one [PASS]/[FAIL] line each,
// with every tolerance pinned as a literal below.  argv[1] names the
// command-line binary; only the determinism criterion shells out to it.
// Exit status is 0 iff every criterion passed.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "skewfree/clp.hpp"
#include "skewfree/construct.hpp"
#include "skewfree/detect.hpp"
#include "skewfree/gf.hpp"
#include "skewfree/io.hpp"
#include "skewfree/search.hpp"
#include "skewfree/unital.hpp"

namespace {

using skewfree::detect::Ambient;
using skewfree::detect::Point;

int g_failures = 0;

struct Ctx {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

void run_criterion(int id, const char* label, double budget_seconds,
                   const std::function<void(Ctx&)>& body) {
    Ctx ctx;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(ctx);
    } catch (const std::exception& e) {
        ctx.ok = false;
        ctx.notes.push_back(std::string("FAILED: unexpected exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_seconds > 0.0 && elapsed >= budget_seconds) {
        ctx.ok = false;
        char buf[96];
        std::snprintf(buf, sizeof buf, "FAILED: runtime %.2f s exceeds the %.0f s budget",
                      elapsed, budget_seconds);
        ctx.notes.push_back(buf);
    }
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ctx.ok ? "PASS" : "FAIL", id, label,
                elapsed);
    for (const auto& n : ctx.notes) {
        std::printf("        %s\n", n.c_str());
    }
    std::fflush(stdout);
    if (!ctx.ok) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 1. Unital sizes p^3 - p for p in {2,3,5,7,11,13}; exhaustive tangency audit
//    for p <= 11.
void criterion1(Ctx& c) {
    for (const std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        const skewfree::gf::QuadExtField field{skewfree::gf::PrimeModulus(p)};
        const skewfree::unital::Unital u(field);
        const std::uint64_t expect = std::uint64_t{p} * p * p - p;
        c.require(u.size() == expect,
                  "p=" + std::to_string(p) + ": unital has " + std::to_string(u.size()) +
                      " points, expected " + std::to_string(expect));
        if (p <= 11) {
            const auto audit = skewfree::unital::tangency_audit(u);
            c.require(audit.pass, "p=" + std::to_string(p) + ": tangency audit failed");
            c.require(audit.identities_checked == expect * p * p,
                      "p=" + std::to_string(p) + ": identity coverage incomplete");
            c.require(audit.lines_checked == expect,
                      "p=" + std::to_string(p) + ": line coverage incomplete");
        }
    }
    c.note("sizes verified for p in {2,3,5,7,11,13}; tangency exhaustive for p <= 11");
}

// 2. |S'| = p^5 - p^3 and certified freeness for p in {2,3,5,7}.
void criterion2(Ctx& c) {
    for (const std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const skewfree::unital::Unital u{
            skewfree::gf::QuadExtField{skewfree::gf::PrimeModulus(p)}};
        const auto fs = skewfree::construct::build_field_set(u);
        const std::uint64_t p3 = std::uint64_t{p} * p * p;
        const std::uint64_t expect = p3 * p * p - p3;
        c.require(fs.pairs.size() == expect,
                  "p=" + std::to_string(p) + ": tangent-pair set has " +
                      std::to_string(fs.pairs.size()) + " pairs, expected " +
                      std::to_string(expect));
        const Ambient amb = skewfree::construct::pair_ambient(fs);
        const auto pts = skewfree::construct::to_points(fs);
        const auto fr = skewfree::detect::assert_free(pts, amb);
        c.require(fr.free, "p=" + std::to_string(p) + ": tangent-pair set is not free");
        if (p == 7) {
            c.require(pts.size() == 16464, "p=7: expected 16464 points, got " +
                                               std::to_string(pts.size()));
            c.note("p=7: 16464 points certified free in " + std::to_string(fr.probes) +
                   " column probes");
        }
    }
}

// 3. Grid construction at defaults (m = floor((p+1)/2), 64 shifts, seed 1)
//    for p in {11,13,17,19,23}: certified free, size >= 0.004 n^{5/4} for
//    every p, and least-squares slope of log size vs log n >= 1.20.
//
//    Known shortfall, kept visible rather than tuned away: with the box side
//    pinned at m = floor((p+1)/2), sizes scale like p^5 (m/p)^8 against
//    n ~ (m-1) p^3, whose log-log slope across this p range is
//    (5 - 8/(p+1))/4, about 1.08..1.17 — below the 1.20 threshold for every
//    seed (best-of-64 sampling moves sizes by a few percent at most).  The
//    per-p size floor passes with a 3-5x margin; the slope subcheck fails and
//    prints the measured values.
void criterion3(Ctx& c) {
    std::vector<double> logn, logsz;
    for (const std::uint32_t p : {11u, 13u, 17u, 19u, 23u}) {
        const auto r = skewfree::construct::construct_grid_set(p, std::nullopt, 64, 1);
        const auto fr =
            skewfree::detect::assert_free(r.set.points, Ambient::grid(r.set.n));
        c.require(fr.free,
                  "p=" + std::to_string(p) + ": emitted set failed re-certification");
        const double floor54 = 0.004 * std::pow(static_cast<double>(r.report.n), 1.25);
        c.require(static_cast<double>(r.report.set_size) >= floor54,
                  "p=" + std::to_string(p) + ": size " + std::to_string(r.report.set_size) +
                      " below 0.004 n^{5/4} = " + fmt(floor54));
        logn.push_back(std::log(static_cast<double>(r.report.n)));
        logsz.push_back(std::log(static_cast<double>(r.report.set_size)));
        c.note("p=" + std::to_string(p) + ": n=" + std::to_string(r.report.n) +
               ", size=" + std::to_string(r.report.set_size) +
               ", size/n^{5/4}=" + fmt(r.report.ratio));
    }
    const double slope = least_squares_slope(logn, logsz);
    c.note("least-squares slope of log size vs log n: " + fmt(slope) +
           " (threshold 1.20)");
    c.require(slope >= 1.20,
              "slope " + fmt(slope) + " is below 1.20 at the pinned defaults");
}

// 4. The digit map: integer differences determine digit differences
//    (exhaustive for p=5, m=3), and planted skew corners mapped through it
//    round-trip through detection in 100/100 seeded trials.
void criterion4(Ctx& c) {
    const std::uint32_t p = 5;
    const std::uint32_t m = 3;
    using Digits = std::array<std::uint16_t, 4>;
    const auto decode = [&](int idx) {
        Digits d{};
        for (int i = 0; i < 4; ++i) {
            d[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(idx % 3);
            idx /= 3;
        }
        return d;
    };

    std::map<std::int64_t, std::array<int, 4>> seen;
    bool consistent = true;
    for (int ai = 0; ai < 81; ++ai) {
        const Digits a = decode(ai);
        const std::int64_t pa = skewfree::construct::digit_map(p, a, m);
        for (int bi = 0; bi < 81; ++bi) {
            const Digits b = decode(bi);
            std::array<int, 4> dd{};
            for (std::size_t i = 0; i < 4; ++i) dd[i] = int(a[i]) - int(b[i]);
            const std::int64_t dv = pa - skewfree::construct::digit_map(p, b, m);
            const auto [it, fresh] = seen.emplace(dv, dd);
            if (!fresh && it->second != dd) consistent = false;
        }
    }
    c.require(consistent, "two digit differences mapped to one integer difference");
    c.require(seen.size() == 625, "expected 625 = (2m-1)^4 distinct differences, got " +
                                      std::to_string(seen.size()));
    c.note("difference map exhaustively checked on all 6561 ordered pairs (p=5, m=3)");

    const std::int64_t n =
        static_cast<std::int64_t>(m - 1) * (1 + p + p * p + p * p * p) + 1;
    std::mt19937_64 rng(20260819);
    int successes = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Digits x{}, y{}, z{}, xd{};
        std::array<int, 4> delta{};
        bool nonzero = false;
        while (!nonzero) {
            for (std::size_t i = 0; i < 4; ++i) {
                x[i] = static_cast<std::uint16_t>(rng() % m);
                y[i] = static_cast<std::uint16_t>(rng() % m);
            }
            for (std::size_t i = 0; i < 4; ++i) {
                const int lo = -static_cast<int>(std::min(x[i], y[i]));
                const int hi = static_cast<int>(m) - 1 - int(std::max(x[i], y[i]));
                delta[i] = lo + static_cast<int>(
                                    rng() % static_cast<std::uint64_t>(hi - lo + 1));
                nonzero = nonzero || delta[i] != 0;
            }
        }
        for (std::size_t i = 0; i < 4; ++i) {
            z[i] = static_cast<std::uint16_t>(int(y[i]) + delta[i]);
            xd[i] = static_cast<std::uint16_t>(int(x[i]) + delta[i]);
        }
        const std::int64_t X = skewfree::construct::digit_map(p, x, m);
        const std::int64_t Y = skewfree::construct::digit_map(p, y, m);
        const std::int64_t Z = skewfree::construct::digit_map(p, z, m);
        const std::int64_t Xd = skewfree::construct::digit_map(p, xd, m);
        const std::int64_t D = Z - Y;
        const std::int64_t Yp = static_cast<std::int64_t>(rng() % std::uint64_t(n));
        const std::vector<Point> pts = {{X, Y}, {X, Z}, {Xd, Yp}};
        const auto w = skewfree::detect::find_skew_corner(pts, Ambient::grid(n));
        bool good = w.has_value();
        if (good) {
            good = w->x == X && w->y == Y && w->d == D && w->y_prime == Yp;
            // Recover the digit offset from the integer difference alone
            // (balanced base-p digits) and compare with what was planted.
            std::int64_t rem = w->d;
            std::array<int, 4> rec{};
            for (std::size_t i = 0; i < 4; ++i) {
                const int r = static_cast<int>(((rem % p) + p) % p);
                rec[i] = r <= static_cast<int>(p - 1) / 2 ? r : r - static_cast<int>(p);
                rem = (rem - rec[i]) / p;
            }
            good = good && rem == 0 && rec == delta;
        }
        if (good) ++successes;
    }
    c.require(successes == 100,
              "planted-corner round-trip: " + std::to_string(successes) + "/100");
    c.note("planted-corner round-trip: " + std::to_string(successes) +
           "/100 seeded trials recovered the planted offset");
}

// 5. The exponent constants: c_2 = 0.081704 +- 1e-5 against the closed form
//    (x* = 1/2, infimum 3 * 2^{-2/3}) and c_3 = 0.077515 +- 1e-5 against the
//    closed-form root of 4x^2 + x - 2; stationarity residual < 1e-10.
void criterion5(Ctx& c) {
    const auto r2 = skewfree::clp::compute_cq(2);
    c.require(std::abs(r2.c_q - 0.081704) <= 1e-5,
              "c_2 = " + fmt(r2.c_q) + " misses 0.081704 by more than 1e-5");
    c.require(std::abs(r2.x_star - 0.5) <= 1e-7,
              "q=2 minimizer " + fmt(r2.x_star) + " differs from the closed form 1/2");
    c.require(std::abs(r2.inf_value - 3.0 * std::pow(2.0, -2.0 / 3.0)) <= 1e-9,
              "q=2 infimum differs from 3 * 2^{-2/3}");
    c.require(r2.residual < 1e-10,
              "q=2 stationarity residual " + fmt(r2.residual) + " >= 1e-10");

    const auto r3 = skewfree::clp::compute_cq(3);
    const double root = (std::sqrt(33.0) - 1.0) / 8.0;  // 4x^2 + x - 2 = 0 on (0,1)
    c.require(std::abs(r3.c_q - 0.077515) <= 1e-5,
              "c_3 = " + fmt(r3.c_q) + " misses 0.077515 by more than 1e-5");
    c.require(std::abs(r3.x_star - root) <= 1e-7,
              "q=3 minimizer " + fmt(r3.x_star) + " differs from the closed-form root");
    c.require(std::abs(r3.inf_value - 2.755105) <= 1e-6,
              "q=3 infimum " + fmt(r3.inf_value) + " misses 2.755105");
    c.require(r3.residual < 1e-10,
              "q=3 stationarity residual " + fmt(r3.residual) + " >= 1e-10");
    c.note("c_2 = " + fmt(r2.c_q) + ", c_3 = " + fmt(r3.c_q));
}

// 6. The degree-count table equals full enumeration for every prime q and
//    every n with q^n <= 10^4, at every degree; the complement identity holds
//    for q in {2,3,5}, n <= 8.
void criterion6(Ctx& c) {
    std::vector<std::uint32_t> primes;
    std::vector<bool> composite(10001, false);
    for (std::uint32_t i = 2; i <= 10000; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = std::uint64_t{i} * i; j <= 10000; j += i) {
            composite[static_cast<std::size_t>(j)] = true;
        }
    }

    std::uint64_t instances = 0;
    bool all_equal = true;
    std::string first_bad;
    for (const std::uint32_t q : primes) {
        std::uint64_t extent = 1;
        for (std::uint32_t n = 1; extent <= 10000 / q; ++n) {
            extent *= q;
            const skewfree::clp::MonomialTable table(q, n);
            std::vector<std::uint64_t> hist(std::size_t{q - 1} * n + 1, 0);
            std::vector<std::uint32_t> dig(n, 0);
            std::uint64_t sum = 0;
            while (true) {
                ++hist[sum];
                std::size_t i = 0;
                while (i < n && dig[i] + 1 == q) {
                    sum -= dig[i];
                    dig[i] = 0;
                    ++i;
                }
                if (i == n) break;
                ++dig[i];
                ++sum;
            }
            skewfree::clp::BigInt acc = 0;
            for (std::size_t d = 0; d < hist.size(); ++d) {
                acc += hist[d];
                if (all_equal && table.count(static_cast<std::int64_t>(d)) != acc) {
                    all_equal = false;
                    first_bad = "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                " d=" + std::to_string(d);
                }
            }
            ++instances;
        }
    }
    c.require(all_equal, "count table disagrees with enumeration at " + first_bad);
    c.note(std::to_string(instances) +
           " (q, n) instances cross-checked against full enumeration");

    bool complement = true;
    for (const std::uint32_t q : {2u, 3u, 5u}) {
        for (std::uint32_t n = 1; n <= 8; ++n) {
            complement = complement && skewfree::clp::complement_audit(q, n);
        }
    }
    c.require(complement, "complement identity audit failed");
}

// 7. 100 seeded random-polynomial trials per (q, n, d) never exceed the
//    two-sided rank bound; the diagonal property holds on every column of the
//    p=2 tangent-pair set and breaks once a corner is planted.
void criterion7(Ctx& c) {
    struct RankCase {
        std::uint32_t q;
        std::uint32_t n;
        std::int64_t d;
    };
    const RankCase cases[] = {{2, 3, 2}, {2, 3, 3}, {3, 2, 2}, {3, 2, 3}};
    for (const RankCase& rc : cases) {
        const auto r = skewfree::clp::clp_rank_check(rc.q, rc.n, rc.d, 100, 2026);
        c.require(r.pass, "rank bound exceeded for q=" + std::to_string(rc.q) +
                              " n=" + std::to_string(rc.n) + " d=" + std::to_string(rc.d));
        c.note("q=" + std::to_string(rc.q) + " n=" + std::to_string(rc.n) +
               " d=" + std::to_string(rc.d) + ": max rank " + std::to_string(r.max_rank) +
               " <= " + r.rank_bound.str() + " over 100 trials");
    }

    const skewfree::unital::Unital u{
        skewfree::gf::QuadExtField{skewfree::gf::PrimeModulus(2)}};
    const auto fs = skewfree::construct::build_field_set(u);
    const Ambient amb = skewfree::construct::pair_ambient(fs);
    const auto pts = skewfree::construct::to_points(fs);
    const auto cm = skewfree::detect::columnize(pts, amb);
    std::vector<std::uint32_t> g(static_cast<std::size_t>(amb.extent()), 0);
    for (const auto& [x, col] : cm.columns) g[static_cast<std::size_t>(x)] = 1;
    bool all = true;
    for (const auto& [x, col] : cm.columns) {
        all = all && skewfree::clp::diagonal_property_check(pts, amb, g, x);
    }
    c.require(all, "diagonal property failed on a column of the p=2 tangent-pair set");

    auto mutated = pts;
    const std::int64_t x0 = cm.columns.begin()->first;
    const std::int64_t y0 = cm.columns.begin()->second.front();
    const std::int64_t d0 = 1;
    for (const Point e : {Point{x0, amb.add(y0, d0)}, Point{amb.add(x0, d0), 0}}) {
        if (std::find(mutated.begin(), mutated.end(), e) == mutated.end()) {
            mutated.push_back(e);
        }
    }
    const auto cm2 = skewfree::detect::columnize(mutated, amb);
    std::vector<std::uint32_t> g2(static_cast<std::size_t>(amb.extent()), 0);
    for (const auto& [x, col] : cm2.columns) g2[static_cast<std::size_t>(x)] = 1;
    c.require(!skewfree::clp::diagonal_property_check(mutated, amb, g2, x0),
              "planted corner was not flagged by the diagonal check");
}

// 8. Exact maxima: both solvers agree and certify optimality on F_2^n for
//    n in {1,2} and on grids n in {1..5}; every vector-space maximum respects
//    both the exact minimized bound and the asymptotic bound.
void criterion8(Ctx& c) {
    const auto solve_both = [&c](const Ambient& amb,
                                 const std::string& name) -> std::optional<std::uint64_t> {
        skewfree::search::SearchConfig cfg;
        cfg.ambient = amb;
        const auto ex = skewfree::search::max_free_exhaustive(cfg);
        const auto bb = skewfree::search::max_free_branch_bound(cfg);
        c.require(ex.proved && bb.proved, name + ": a solver failed to certify optimality");
        c.require(ex.max_size == bb.max_size,
                  name + ": solvers disagree (" + std::to_string(ex.max_size) + " vs " +
                      std::to_string(bb.max_size) + ")");
        for (const auto* r : {&ex, &bb}) {
            const bool witness_ok =
                r->witness.size() == r->max_size &&
                skewfree::detect::assert_free(r->witness, amb).free;
            c.require(witness_ok, name + ": witness does not certify the reported maximum");
        }
        if (!(ex.proved && bb.proved && ex.max_size == bb.max_size)) return std::nullopt;
        return ex.max_size;
    };

    for (const std::uint32_t nn : {1u, 2u}) {
        const std::string name = "F_2^" + std::to_string(nn);
        const auto max = solve_both(Ambient::vector_space(2, nn), name);
        if (!max) continue;
        const auto bound = skewfree::clp::theorem_bound(2, nn);
        c.require(skewfree::clp::BigInt(*max) <= bound.exact_min_bound,
                  name + ": maximum exceeds the exact minimized bound");
        c.require(static_cast<double>(*max) <= bound.asymptotic_bound,
                  name + ": maximum exceeds the asymptotic bound");
        c.note(name + ": max " + std::to_string(*max) + ", exact bound " +
               bound.exact_min_bound.str() + ", asymptotic bound " +
               fmt(bound.asymptotic_bound));
    }

    std::string grid_line = "grid maxima:";
    for (std::int64_t nn = 1; nn <= 5; ++nn) {
        const auto max = solve_both(Ambient::grid(nn), "grid " + std::to_string(nn));
        grid_line += " n=" + std::to_string(nn) + " -> " + (max ? std::to_string(*max) : "?");
    }
    c.note(grid_line);
}

// 9. Byte determinism of reports and emitted files across repeated runs of
//    the binary with identical flags and seed, plus parse/serialize identity
//    on every emitted set.
void criterion9(Ctx& c, const std::string& cli) {
    if (cli.empty()) {
        c.require(false, "missing command-line binary path (argv[1])");
        return;
    }
    struct Job {
        const char* name;
        const char* args;
        bool emits_file;
    };
    const Job jobs[] = {
        {"construct-grid", "construct --p 5 --seed 1 --shifts 64", true},
        {"construct-field", "construct --p 3 --emit field", true},
        {"search-grid", "search --grid 4", true},
        {"bound", "bound --q 2 --n 4", false},
        {"cq", "cq --q 3", false},
    };
    for (const Job& job : jobs) {
        const std::string base = std::string("acc9_") + job.name;
        std::vector<std::string> cleanup;
        std::array<std::string, 2> report;
        std::array<std::string, 2> setfile;
        bool ran = true;
        // Both runs use byte-identical command lines; outputs are snapshotted
        // between runs so the second run overwrites the same paths.
        const std::string rpt = base + "_report.json";
        const std::string set = base + "_set.txt";
        cleanup.push_back(rpt);
        if (job.emits_file) cleanup.push_back(set);
        std::string cmd = "\"" + cli + "\" " + job.args;
        if (job.emits_file) cmd += " --out " + set;
        cmd += " > " + rpt;
        for (int run = 0; run < 2; ++run) {
            ran = ran && std::system(cmd.c_str()) == 0;
            report[static_cast<std::size_t>(run)] = read_file(rpt);
            if (job.emits_file) {
                setfile[static_cast<std::size_t>(run)] = read_file(set);
            }
        }
        c.require(ran, std::string(job.name) + ": command exited nonzero");
        c.require(!report[0].empty() && report[0] == report[1],
                  std::string(job.name) + ": reports differ between identical runs");
        if (job.emits_file) {
            c.require(!setfile[0].empty() && setfile[0] == setfile[1],
                      std::string(job.name) + ": emitted files differ between runs");
            try {
                const auto parsed = skewfree::io::parse(setfile[0]);
                c.require(skewfree::io::serialize(parsed) == setfile[0],
                          std::string(job.name) + ": file round-trip is not the identity");
            } catch (const std::exception& e) {
                c.require(false, std::string(job.name) +
                                     ": emitted file failed to parse: " + e.what());
            }
        }
        for (const std::string& f : cleanup) std::remove(f.c_str());
    }
    if (c.ok) {
        c.note("5 commands, 2 runs each: byte-identical output; round-trips exact");
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    run_criterion(1, "unital sizes and exhaustive tangency", 5.0, criterion1);
    run_criterion(2, "tangent-pair set size and freeness", 10.0, criterion2);
    run_criterion(3, "grid construction growth", 60.0, criterion3);
    run_criterion(4, "digit-map soundness and planted-corner round-trip", 0.0, criterion4);
    run_criterion(5, "exponent constants c_2 and c_3", 1.0, criterion5);
    run_criterion(6, "degree counts vs enumeration and complement identity", 5.0,
                  criterion6);
    run_criterion(7, "random rank bound and diagonal property", 30.0, criterion7);
    run_criterion(8, "exact maxima, solver agreement, bound dominance", 300.0, criterion8);
    run_criterion(9, "determinism and file round-trip", 0.0,
                  [&cli](Ctx& c) { criterion9(c, cli); });
    if (g_failures == 0) {
        std::printf("all 9 criteria passed\n");
    } else {
        std::printf("%d of 9 criteria failed\n", g_failures);
    }
    return g_failures == 0 ? 0 : 1;
}
