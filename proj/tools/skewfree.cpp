// skewfree: construct, verify, bound, and exhaustively solve skew corner-free
// set problems from the command line.  Every command prints one JSON report
// to stdout (density prints CSV); point sets go to files via --out.
//
// Exit codes: 0 success (verify: set is free), 1 usage or input error,
// 2 verify found a skew corner, 3 internal certification failure.

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "skewfree/clp.hpp"
#include "skewfree/construct.hpp"
#include "skewfree/detect.hpp"
#include "skewfree/io.hpp"
#include "skewfree/search.hpp"
#include "skewfree/unital.hpp"
#include "skewfree/version.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
namespace sf = skewfree;

int g_exit = 0;

void print_report(const std::string& command, ordered_json inputs,
                  ordered_json seed, ordered_json results) {
    ordered_json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["seed"] = std::move(seed);
    j["results"] = std::move(results);
    j["version"] = sf::kVersion;
    std::cout << j.dump(2) << "\n";
}

ordered_json ambient_json(const sf::detect::Ambient& amb) {
    ordered_json j;
    if (amb.is_grid()) {
        j["kind"] = "grid";
        j["n"] = amb.extent();
    } else {
        j["kind"] = "field";
        j["q"] = amb.q();
        j["n"] = amb.dim();
    }
    return j;
}

ordered_json coordinate_json(const sf::detect::Ambient& amb, std::int64_t v) {
    if (amb.is_grid()) return v;
    std::string s;
    for (std::uint32_t d : amb.digits(v)) s.push_back(static_cast<char>('0' + d));
    return s;
}

ordered_json witness_json(const sf::detect::Ambient& amb,
                          const sf::detect::Witness& w) {
    ordered_json j;
    j["x"] = coordinate_json(amb, w.x);
    j["y"] = coordinate_json(amb, w.y);
    j["d"] = amb.is_grid() ? ordered_json(w.d) : coordinate_json(amb, w.d);
    j["y_prime"] = coordinate_json(amb, w.y_prime);
    return j;
}

std::string big_to_string(const sf::clp::BigInt& v) { return v.str(); }

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct ConstructArgs {
    std::uint32_t p = 0;
    std::optional<std::uint32_t> box_side;
    std::uint32_t shifts = 64;
    std::uint64_t seed = 0;
    std::string emit = "grid";
    std::string out;
};

void run_construct(const ConstructArgs& a) {
    ordered_json inputs;
    inputs["p"] = a.p;
    inputs["box_side"] = a.box_side ? ordered_json(*a.box_side) : ordered_json(nullptr);
    inputs["shifts"] = a.shifts;
    inputs["seed"] = a.seed;
    inputs["emit"] = a.emit;
    inputs["out"] = a.out.empty() ? ordered_json(nullptr) : ordered_json(a.out);

    if (a.emit == "field") {
        const sf::gf::QuadExtField field((sf::gf::PrimeModulus(a.p)));
        const sf::unital::Unital u(field);
        const sf::construct::FieldPairSet sprime = sf::construct::build_field_set(u);

        ordered_json results;
        results["p"] = a.p;
        results["q"] = field.q();
        results["field_pairs"] = sprime.pairs.size();
        if (!a.out.empty()) {
            const auto psf = sf::io::make_point_set(sf::construct::pair_ambient(sprime),
                                                    sf::construct::to_points(sprime));
            sf::io::save(a.out, psf);
        }
        print_report("construct", std::move(inputs), a.seed, std::move(results));
        return;
    }

    const sf::construct::ConstructResult res =
        sf::construct::construct_grid_set(a.p, a.box_side, a.shifts, a.seed);
    const auto& rep = res.report;

    ordered_json results;
    results["p"] = rep.p;
    results["q"] = rep.q;
    results["m"] = rep.m;
    results["n"] = rep.n;
    results["field_pairs"] = rep.field_pairs;
    results["shift"] = rep.shift.v;
    results["set_size"] = rep.set_size;
    results["ratio"] = rep.ratio;
    results["seed"] = rep.seed;
    results["shifts_tried"] = rep.shifts_tried;

    if (!a.out.empty()) {
        const auto psf = sf::io::make_point_set(sf::detect::Ambient::grid(res.set.n),
                                                res.set.points);
        sf::io::save(a.out, psf);
    }
    print_report("construct", std::move(inputs), a.seed, std::move(results));
}

struct VerifyArgs {
    std::string in;
    bool count = false;
};

void run_verify(const VerifyArgs& a) {
    ordered_json inputs;
    inputs["in"] = a.in;
    inputs["count"] = a.count;

    const sf::io::PointSetFile psf = sf::io::load(a.in);
    sf::detect::DetectStats stats;
    const auto witness = sf::detect::find_skew_corner(psf.points, psf.ambient, &stats);

    ordered_json results;
    results["ambient"] = ambient_json(psf.ambient);
    results["set_size"] = psf.points.size();
    results["free"] = !witness.has_value();
    results["witness"] =
        witness ? witness_json(psf.ambient, *witness) : ordered_json(nullptr);
    if (a.count) {
        results["corner_count"] = sf::detect::count_skew_corners(psf.points, psf.ambient);
    }
    results["probes"] = stats.probes;

    print_report("verify", std::move(inputs), nullptr, std::move(results));
    if (witness) g_exit = 2;
}

void run_bound(std::uint32_t q, std::uint32_t n) {
    ordered_json inputs;
    inputs["q"] = q;
    inputs["n"] = n;

    const sf::clp::BoundReport rep = sf::clp::theorem_bound(q, n);
    ordered_json results;
    results["q"] = rep.q;
    results["n"] = rep.n;
    results["paper_d"] = rep.paper_d;
    results["paper_bound"] = big_to_string(rep.paper_bound);
    results["best_d"] = rep.best_d;
    results["exact_min_bound"] = big_to_string(rep.exact_min_bound);
    results["c_q"] = rep.c_q;
    results["asymptotic_bound"] = rep.asymptotic_bound;
    print_report("bound", std::move(inputs), nullptr, std::move(results));
}

void run_cq(std::uint32_t q, double tol) {
    ordered_json inputs;
    inputs["q"] = q;
    inputs["tol"] = tol;

    const sf::clp::CqResult r = sf::clp::compute_cq(q, tol);
    ordered_json results;
    results["q"] = r.q;
    results["x_star"] = r.x_star;
    results["inf_value"] = r.inf_value;
    results["c_q"] = r.c_q;
    results["residual"] = r.residual;
    results["golden_iterations"] = r.golden_iterations;
    print_report("cq", std::move(inputs), nullptr, std::move(results));
}

struct SearchArgs {
    std::optional<std::int64_t> grid;
    std::vector<std::int64_t> field;  // [q, n]
    std::string algo = "branch_and_bound";
    std::optional<std::uint64_t> node_limit;
    bool symmetry = false;
    std::string out;
};

void run_search(const SearchArgs& a) {
    ordered_json inputs;
    inputs["grid"] = a.grid ? ordered_json(*a.grid) : ordered_json(nullptr);
    inputs["field"] = a.field.empty() ? ordered_json(nullptr) : ordered_json(a.field);
    inputs["algo"] = a.algo;
    inputs["node_limit"] =
        a.node_limit ? ordered_json(*a.node_limit) : ordered_json(nullptr);
    inputs["symmetry"] = a.symmetry;
    inputs["out"] = a.out.empty() ? ordered_json(nullptr) : ordered_json(a.out);

    if (a.grid.has_value() == !a.field.empty()) {
        throw CLI::ValidationError("search", "give exactly one of --grid N or --field Q N");
    }

    sf::search::SearchConfig config;
    if (a.grid) {
        config.ambient = sf::detect::Ambient::grid(*a.grid);
    } else {
        config.ambient = sf::detect::Ambient::vector_space(
            static_cast<std::uint32_t>(a.field[0]),
            static_cast<std::uint32_t>(a.field[1]));
    }
    config.algorithm = a.algo == "exhaustive" ? sf::search::Algorithm::exhaustive
                                              : sf::search::Algorithm::branch_and_bound;
    if (a.node_limit) config.node_limit = *a.node_limit;
    config.symmetry_reduction = a.symmetry;

    const sf::search::ExtremalResult res = sf::search::max_free(config);

    ordered_json results;
    results["ambient"] = ambient_json(config.ambient);
    results["algorithm"] = a.algo;
    results["max_size"] = res.max_size;
    results["nodes"] = res.nodes;
    results["proved"] = res.proved;
    ordered_json witness = ordered_json::array();
    for (const auto& p : res.witness) {
        witness.push_back(sf::io::format_point(config.ambient, p));
    }
    results["witness"] = std::move(witness);

    if (!a.out.empty()) {
        sf::io::save(a.out, sf::io::make_point_set(config.ambient, res.witness));
    }
    print_report("search", std::move(inputs), nullptr, std::move(results));
}

struct RankCheckArgs {
    std::uint32_t q = 0;
    std::uint32_t n = 0;
    std::int64_t d = 0;
    std::uint32_t trials = 100;
    std::uint64_t seed = 0;
};

void run_rank_check(const RankCheckArgs& a) {
    ordered_json inputs;
    inputs["q"] = a.q;
    inputs["n"] = a.n;
    inputs["d"] = a.d;
    inputs["trials"] = a.trials;
    inputs["seed"] = a.seed;

    const sf::clp::RankCheckReport rep =
        sf::clp::clp_rank_check(a.q, a.n, a.d, a.trials, a.seed);
    ordered_json results;
    results["q"] = rep.q;
    results["n"] = rep.n;
    results["d"] = rep.d;
    results["trials"] = rep.trials;
    results["max_rank"] = rep.max_rank;
    results["rank_bound"] = big_to_string(rep.rank_bound);
    results["pass"] = rep.pass;
    print_report("rank-check", std::move(inputs), a.seed, std::move(results));
    // A rank above the bound would falsify a proved inequality: that is an
    // internal failure, not a property of the input.
    if (!rep.pass) g_exit = 3;
}

struct DensityArgs {
    std::optional<std::int64_t> grid;
    std::vector<std::int64_t> field;  // [q, n_max]
};

void run_density(const DensityArgs& a) {
    if (a.grid.has_value() == !a.field.empty()) {
        throw CLI::ValidationError("density", "give exactly one of --grid N or --field Q N");
    }
    std::vector<sf::search::DensityRow> rows;
    if (a.grid) {
        rows = sf::search::density_table(*a.grid, std::nullopt);
    } else {
        rows = sf::search::density_table(
            a.field[1], static_cast<std::uint32_t>(a.field[0]));
    }
    std::cout << "n,max_size,ratio_n54,ratio_n2\n";
    for (const auto& row : rows) {
        std::cout << row.n << "," << row.max_size << "," << fmt_double(row.ratio_pow54)
                  << "," << fmt_double(row.ratio_sq) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew corner-free sets: constructions, detection, and bounds"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand(
        "construct", "build a certified skew corner-free set from the unital pipeline");
    construct->add_option("--p", ca.p, "prime base p")->required();
    construct->add_option("--box-side", ca.box_side,
                          "box side m (default floor((p+1)/2))");
    construct->add_option("--shifts", ca.shifts, "number of shift trials")
        ->default_val(64);
    construct->add_option("--seed", ca.seed, "shift sampling seed")->default_val(0);
    construct->add_option("--emit", ca.emit, "grid: final set in [n]^2; field: S'")
        ->default_val("grid")
        ->check(CLI::IsMember({"grid", "field"}));
    construct->add_option("--out", ca.out, "write the point set to this file");
    construct->callback([&ca] { run_construct(ca); });

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check a point-set file for skew corners");
    verify->add_option("--in", va.in, "point-set file")->required();
    verify->add_flag("--count", va.count, "also count all skew corners");
    verify->callback([&va] { run_verify(va); });

    std::uint32_t bq = 0, bn = 0;
    auto* bound = app.add_subcommand("bound", "upper bounds for free sets in F_q^n x F_q^n");
    bound->add_option("--q", bq, "field order (prime)")->required();
    bound->add_option("--n", bn, "dimension")->required();
    bound->callback([&bq, &bn] { run_bound(bq, bn); });

    std::uint32_t cqq = 0;
    double cqtol = 1e-12;
    auto* cq = app.add_subcommand("cq", "the exponent constant c_q");
    cq->add_option("--q", cqq, "field order (prime)")->required();
    cq->add_option("--tol", cqtol, "golden-section bracket tolerance")
        ->default_val(1e-12);
    cq->callback([&cqq, &cqtol] { run_cq(cqq, cqtol); });

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "exact maximum free set on a small instance");
    search->add_option("--grid", sa.grid, "grid bound n");
    search->add_option("--field", sa.field, "field instance: q n")->expected(2);
    search->add_option("--algo", sa.algo, "search algorithm")
        ->default_val("branch_and_bound")
        ->check(CLI::IsMember({"exhaustive", "branch_and_bound"}));
    search->add_option("--node-limit", sa.node_limit, "abort after this many nodes");
    search->add_flag("--symmetry", sa.symmetry,
                     "restrict the first column to reflection-canonical subsets");
    search->add_option("--out", sa.out, "write the witness set to this file");
    search->callback([&sa] { run_search(sa); });

    RankCheckArgs ra;
    auto* rank_check = app.add_subcommand(
        "rank-check", "randomized audit of the difference-matrix rank bound");
    rank_check->add_option("--q", ra.q, "field order (prime)")->required();
    rank_check->add_option("--n", ra.n, "dimension")->required();
    rank_check->add_option("--d", ra.d, "polynomial total degree")->required();
    rank_check->add_option("--trials", ra.trials, "number of trials")->default_val(100);
    rank_check->add_option("--seed", ra.seed, "trial seed")->default_val(0);
    rank_check->callback([&ra] { run_rank_check(ra); });

    DensityArgs da;
    auto* density = app.add_subcommand(
        "density", "CSV table of exact maxima over a range of instance sizes");
    density->add_option("--grid", da.grid, "solve grid(1..N)");
    density->add_option("--field", da.field, "solve vector_space(q, 1..N): q n")
        ->expected(2);
    density->callback([&da] { run_density(da); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const sf::detect::CertificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return g_exit;
}
