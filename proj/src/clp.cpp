#include "skewfree/clp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "skewfree/gf.hpp"
#include "skewfree/threads.hpp"

namespace skewfree::clp {

namespace {

void require_prime(std::uint32_t q) {
    if (!gf::is_prime(q)) {
        throw std::invalid_argument("q = " + std::to_string(q) + " is not prime");
    }
}

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t q) {
    std::uint64_t r = 1;
    b %= q;
    while (e) {
        if (e & 1) r = r * b % q;
        b = b * b % q;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t q) {
    return mod_pow(a, q - 2, q);  // q prime, a != 0
}

// Derives an independent generator for one trial of a seeded batch; the
// seed_seq scrambling is fully specified by the standard, so streams are
// reproducible across platforms.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint32_t trial) {
    std::seed_seq sq{static_cast<std::uint32_t>(seed),
                     static_cast<std::uint32_t>(seed >> 32), trial};
    return std::mt19937_64(sq);
}

}  // namespace

MonomialTable::MonomialTable(std::uint32_t q, std::uint32_t n) : q_(q), n_(n) {
    require_prime(q);
    if (n < 1) throw std::invalid_argument("monomial table requires n >= 1");
    const std::uint64_t max_deg = std::uint64_t{q - 1} * n;
    if (max_deg > 1000000) {
        throw std::invalid_argument("monomial table too large: (q-1)n > 10^6");
    }

    // Coefficients of (1 + x + ... + x^{q-1})^n by repeated convolution with
    // a sliding window sum, then prefix sums.
    std::vector<BigInt> coeff{1};
    for (std::uint32_t v = 0; v < n; ++v) {
        std::vector<BigInt> next(coeff.size() + q - 1, 0);
        BigInt window = 0;
        for (std::size_t k = 0; k < next.size(); ++k) {
            if (k < coeff.size()) window += coeff[k];
            if (k >= q) window -= coeff[k - q];
            next[k] = window;
        }
        coeff = std::move(next);
    }

    counts_.resize(coeff.size());
    BigInt acc = 0;
    for (std::size_t d = 0; d < coeff.size(); ++d) {
        acc += coeff[d];
        counts_[d] = acc;
    }
    total_ = acc;

    BigInt check = 1;
    for (std::uint32_t v = 0; v < n; ++v) check *= q;
    if (total_ != check) throw std::logic_error("monomial table failed q^n check");
}

BigInt MonomialTable::count(std::int64_t d) const {
    if (d < 0) return 0;
    if (d >= static_cast<std::int64_t>(counts_.size())) return total_;
    return counts_[static_cast<std::size_t>(d)];
}

bool complement_audit(std::uint32_t q, std::uint32_t n) {
    const MonomialTable table(q, n);
    const std::int64_t D = table.max_degree();
    for (std::int64_t d = 0; d <= D; ++d) {
        if (table.total() - table.count(d) != table.count(D - d - 1)) return false;
    }

    // Small cases: re-derive the identity from the exponent flip itself.
    if (table.total() <= 4096) {
        const std::int64_t npoints = static_cast<std::int64_t>(table.total());
        const detect::Ambient amb = detect::Ambient::vector_space(q, n);
        std::vector<std::int64_t> degree(npoints);
        for (std::int64_t e = 0; e < npoints; ++e) {
            std::int64_t s = 0;
            for (std::uint32_t dig : amb.digits(e)) s += dig;
            degree[e] = s;
        }
        for (std::int64_t e = 0; e < npoints; ++e) {
            // flip a_i -> q-1-a_i, an involution pairing degrees s and D-s
            auto ds = amb.digits(e);
            for (auto& dig : ds) dig = q - 1 - dig;
            const std::int64_t flipped = amb.from_digits(ds);
            if (degree[flipped] != D - degree[e]) return false;
            auto back = amb.digits(flipped);
            for (auto& dig : back) dig = q - 1 - dig;
            if (amb.from_digits(back) != e) return false;
        }
        for (std::int64_t d = 0; d <= D; ++d) {
            std::int64_t over = 0, under = 0;
            for (std::int64_t e = 0; e < npoints; ++e) {
                if (degree[e] > d) ++over;
                if (degree[e] <= D - d - 1) ++under;
            }
            if (over != under) return false;
            if (BigInt(over) != table.total() - table.count(d)) return false;
        }
    }
    return true;
}

namespace {

// Stationarity expression sum_j (j - (q-1)/3) x^j; negative left of the
// minimizer, positive right of it.
double stationarity(std::uint32_t q, double x) {
    const double e = (q - 1) / 3.0;
    double s = 0.0, xj = 1.0;
    for (std::uint32_t j = 0; j < q; ++j) {
        s += (j - e) * xj;
        xj *= x;
    }
    return s;
}

// log f(e^t) = -e t + log(sum_j e^{j t}); the largest exponent is 0 for
// t < 0, so the sum needs no shifting.
double log_objective(std::uint32_t q, double t) {
    const double e = (q - 1) / 3.0;
    double s = 0.0;
    for (std::uint32_t j = 0; j < q; ++j) s += std::exp(j * t);
    return -e * t + std::log(s);
}

}  // namespace

CqResult compute_cq(std::uint32_t q, double tol) {
    require_prime(q);
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");

    // Golden-section on the convex log-objective over t = log x in [-60, 0].
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = -60.0, b = 0.0;
    double c1 = b - phi * (b - a), c2 = a + phi * (b - a);
    double f1 = log_objective(q, c1), f2 = log_objective(q, c2);
    std::uint64_t iters = 0;
    while (b - a > tol) {
        if (f1 <= f2) {
            b = c2;
            c2 = c1;
            f2 = f1;
            c1 = b - phi * (b - a);
            f1 = log_objective(q, c1);
        } else {
            a = c1;
            c1 = c2;
            f1 = f2;
            c2 = a + phi * (b - a);
            f2 = log_objective(q, c2);
        }
        ++iters;
    }
    const double x_golden = std::exp((a + b) / 2);

    // Independent refinement: bisect the sign change of the stationarity
    // expression.  A bracket-width stop leaves the golden-section minimizer
    // with a ~sqrt(eps) stationarity defect; the sign bisection pins the root
    // to the last representable digit.
    double lo = 1e-30, hi = 1.0 - 1e-16;
    if (!(stationarity(q, lo) < 0.0) || !(stationarity(q, hi) > 0.0)) {
        throw std::logic_error("stationarity bracket failed");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-18; ++it) {
        const double mid = 0.5 * (lo + hi);
        (stationarity(q, mid) < 0.0 ? lo : hi) = mid;
    }
    const double x_star = 0.5 * (lo + hi);

    if (std::abs(x_star - x_golden) > 1e-6) {
        throw std::logic_error("minimizer cross-check failed: golden-section and "
                               "stationarity bisection disagree");
    }

    CqResult r;
    r.q = q;
    r.x_star = x_star;
    r.golden_iterations = iters;
    double sum = 0.0, xj = 1.0;
    for (std::uint32_t j = 0; j < q; ++j) {
        sum += xj;
        xj *= x_star;
    }
    r.inf_value = std::pow(x_star, -static_cast<double>(q - 1) / 3.0) * sum;
    r.c_q = 1.0 - std::log(r.inf_value) / std::log(static_cast<double>(q));
    r.residual = std::abs(stationarity(q, x_star));

    if (!(r.inf_value > 1.0) || !(r.inf_value <= q) || !(r.c_q > 0.0) ||
        !(r.c_q < 1.0)) {
        throw std::logic_error("c_q result violates its invariants");
    }
    return r;
}

BoundReport theorem_bound(std::uint32_t q, std::uint32_t n) {
    const MonomialTable table(q, n);
    const std::int64_t D = table.max_degree();

    BigInt qn = table.total();
    auto bound_at = [&](std::int64_t d) {
        return qn * (2 * table.count(d / 2) + table.count(D - d));
    };

    BoundReport r;
    r.q = q;
    r.n = n;
    r.best_d = 0;
    r.exact_min_bound = bound_at(0);
    for (std::int64_t d = 1; d <= D; ++d) {
        BigInt b = bound_at(d);
        if (b < r.exact_min_bound) {
            r.exact_min_bound = std::move(b);
            r.best_d = d;
        }
    }
    r.paper_d = 2 * static_cast<std::int64_t>(q - 1) * n / 3;
    r.paper_bound = bound_at(r.paper_d);
    if (r.exact_min_bound > r.paper_bound) {
        throw std::logic_error("exact minimum exceeds the closed-form degree bound");
    }

    const CqResult cq = compute_cq(q);
    r.c_q = cq.c_q;
    r.asymptotic_bound =
        3.0 * std::pow(static_cast<double>(q), (2.0 - cq.c_q) * n);
    return r;
}

BigInt dim_lower_bound(const MonomialTable& table, const BigInt& x_size,
                       std::int64_t d) {
    return table.count(d) - table.total() + x_size;
}

std::size_t rank(FqMatrix m) {
    require_prime(m.q);
    const std::uint32_t q = m.q;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        for (std::size_t c = col; c < m.cols; ++c) {
            std::swap(m.at(r, c), m.at(pivot, c));
        }
        const std::uint32_t inv = mod_inv(m.at(r, col), q);
        for (std::size_t c = col; c < m.cols; ++c) {
            m.at(r, c) = static_cast<std::uint32_t>(std::uint64_t{m.at(r, c)} * inv % q);
        }
        for (std::size_t row = r + 1; row < m.rows; ++row) {
            const std::uint32_t f = m.at(row, col);
            if (f == 0) continue;
            for (std::size_t c = col; c < m.cols; ++c) {
                const std::uint64_t sub =
                    std::uint64_t{f} * m.at(r, c) % q;
                m.at(row, c) = static_cast<std::uint32_t>(
                    (m.at(row, c) + q - sub) % q);
            }
        }
        ++r;
    }
    return r;
}

MultiPoly::MultiPoly(std::uint32_t q, std::uint32_t n) : q_(q), n_(n) {
    require_prime(q);
    if (n < 1) throw std::invalid_argument("polynomial requires n >= 1");
    std::int64_t pts = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (pts > (std::int64_t{1} << 40) / q) {
            throw std::invalid_argument("polynomial space too large");
        }
        pts *= q;
    }
    points_ = pts;
    coeff_.assign(static_cast<std::size_t>(pts), 0);
}

bool MultiPoly::is_zero() const {
    return std::all_of(coeff_.begin(), coeff_.end(),
                       [](std::uint32_t c) { return c == 0; });
}

std::int64_t MultiPoly::total_degree() const {
    const detect::Ambient amb = detect::Ambient::vector_space(q_, n_);
    std::int64_t best = -1;
    for (std::int64_t e = 0; e < points_; ++e) {
        if (coeff_[static_cast<std::size_t>(e)] == 0) continue;
        std::int64_t s = 0;
        for (std::uint32_t dig : amb.digits(e)) s += dig;
        best = std::max(best, s);
    }
    return best;
}

std::uint32_t MultiPoly::eval(std::int64_t point_index) const {
    const detect::Ambient amb = detect::Ambient::vector_space(q_, n_);
    const auto x = amb.digits(point_index);

    // pow[i][k] = x_i^k for k <= q-1
    std::vector<std::uint32_t> pw(static_cast<std::size_t>(n_) * q_);
    for (std::uint32_t i = 0; i < n_; ++i) {
        pw[i * q_] = 1;
        for (std::uint32_t k = 1; k < q_; ++k) {
            pw[i * q_ + k] = static_cast<std::uint32_t>(
                std::uint64_t{pw[i * q_ + k - 1]} * x[i] % q_);
        }
    }

    std::uint64_t acc = 0;
    for (std::int64_t e = 0; e < points_; ++e) {
        const std::uint32_t c = coeff_[static_cast<std::size_t>(e)];
        if (c == 0) continue;
        std::uint64_t term = c;
        std::int64_t rest = e;
        for (std::uint32_t i = n_; i-- > 0;) {
            term = term * pw[i * q_ + rest % q_] % q_;
            rest /= q_;
        }
        acc = (acc + term) % q_;
    }
    return static_cast<std::uint32_t>(acc);
}

std::vector<std::uint32_t> MultiPoly::value_table() const {
    std::vector<std::uint32_t> vals(static_cast<std::size_t>(points_));
    for (std::int64_t v = 0; v < points_; ++v) {
        vals[static_cast<std::size_t>(v)] = eval(v);
    }
    return vals;
}

MultiPoly MultiPoly::random(std::uint32_t q, std::uint32_t n,
                            std::int64_t max_degree, std::mt19937_64& rng) {
    MultiPoly p(q, n);
    const detect::Ambient amb = detect::Ambient::vector_space(q, n);
    for (int attempt = 0; attempt < 64; ++attempt) {
        for (std::int64_t e = 0; e < p.points_; ++e) {
            std::int64_t s = 0;
            for (std::uint32_t dig : amb.digits(e)) s += dig;
            p.coeff_[static_cast<std::size_t>(e)] =
                s <= max_degree ? static_cast<std::uint32_t>(rng() % q) : 0;
        }
        if (!p.is_zero()) return p;
    }
    throw std::logic_error("random polynomial sampling kept returning zero");
}

RankCheckReport clp_rank_check(std::uint32_t q, std::uint32_t n, std::int64_t d,
                               std::uint32_t trials, std::uint64_t seed) {
    require_prime(q);
    if (n < 1) throw std::invalid_argument("rank check requires n >= 1");
    const std::int64_t D = std::int64_t{q - 1} * n;
    if (d < 0 || d > D) {
        throw std::invalid_argument("degree d must lie in [0, (q-1)n]");
    }
    if (trials < 1) throw std::invalid_argument("need at least one trial");

    std::int64_t pts = 1;
    for (std::uint32_t i = 0; i < n; ++i) pts *= q;
    if (pts > 4096) {
        throw std::length_error("dimension overflow: q^n = " + std::to_string(pts) +
                                " exceeds the 4096-row matrix cap");
    }

    const MonomialTable table(q, n);
    const BigInt bound = table.count(d / 2) + table.count(d - d / 2);
    const detect::Ambient amb = detect::Ambient::vector_space(q, n);

    std::vector<std::size_t> ranks(trials, 0);
    parallel_for(trials, [&](std::uint64_t k) {
        std::mt19937_64 rng = trial_rng(seed, static_cast<std::uint32_t>(k));
        const MultiPoly P = MultiPoly::random(q, n, d, rng);
        const std::int64_t x = static_cast<std::int64_t>(rng() % pts);
        const std::vector<std::uint32_t> vals = P.value_table();

        FqMatrix A(q, static_cast<std::size_t>(pts), static_cast<std::size_t>(pts));
        for (std::int64_t y = 0; y < pts; ++y) {
            for (std::int64_t z = 0; z < pts; ++z) {
                A.at(static_cast<std::size_t>(y), static_cast<std::size_t>(z)) =
                    vals[static_cast<std::size_t>(amb.add(x, amb.sub(y, z)))];
            }
        }
        ranks[k] = rank(std::move(A));
    });

    RankCheckReport r;
    r.q = q;
    r.n = n;
    r.d = d;
    r.trials = trials;
    r.seed = seed;
    r.rank_bound = bound;
    r.max_rank = *std::max_element(ranks.begin(), ranks.end());
    r.pass = BigInt(static_cast<std::uint64_t>(r.max_rank)) <= bound;
    return r;
}

bool diagonal_property_check(std::span<const detect::Point> points,
                             const detect::Ambient& ambient,
                             std::span<const std::uint32_t> g, std::int64_t x) {
    if (ambient.is_grid()) {
        throw std::invalid_argument(
            "diagonal_property_check requires the vector_space ambient");
    }
    if (static_cast<std::int64_t>(g.size()) != ambient.extent()) {
        throw std::invalid_argument("g must assign a value to every ambient point");
    }
    const detect::ColumnMap cm = detect::columnize(points, ambient);
    for (std::int64_t v = 0; v < ambient.extent(); ++v) {
        if (g[static_cast<std::size_t>(v)] != 0 && !cm.xs.contains(v)) {
            throw std::invalid_argument("g is supported outside X");
        }
    }
    if (!ambient.in_range(x) || g[static_cast<std::size_t>(x)] == 0) {
        throw std::invalid_argument("base point must satisfy g(x) != 0");
    }

    const auto& col = cm.columns.at(x);  // exists: g(x) != 0 forces x in X
    for (std::int64_t y : col) {
        for (std::int64_t z : col) {
            const std::uint32_t val =
                g[static_cast<std::size_t>(ambient.add(x, ambient.sub(y, z)))];
            if (y == z) {
                if (val != g[static_cast<std::size_t>(x)]) return false;
            } else if (val != 0) {
                return false;
            }
        }
    }
    return true;
}

ColumnAuditReport column_bound_audit(std::span<const detect::Point> points,
                                     const detect::Ambient& ambient,
                                     std::int64_t d) {
    if (ambient.is_grid()) {
        throw std::invalid_argument("column_bound_audit requires the vector_space ambient");
    }
    const detect::FreenessResult fr = detect::assert_free(points, ambient);
    if (!fr.free) {
        throw std::invalid_argument("column_bound_audit requires a skew corner-free set");
    }

    const detect::ColumnMap cm = detect::columnize(points, ambient);
    const std::int64_t N = ambient.extent();
    std::vector<std::uint32_t> g(static_cast<std::size_t>(N), 0);
    for (std::int64_t x : cm.xs) g[static_cast<std::size_t>(x)] = 1;

    const MonomialTable table(ambient.q(), ambient.dim());

    ColumnAuditReport r;
    r.d = d;
    r.clp_bound = 2 * table.count(d / 2);
    r.pass = true;
    r.min_rank = static_cast<std::size_t>(N) + 1;

    std::vector<std::int64_t> xs(cm.xs.begin(), cm.xs.end());
    std::sort(xs.begin(), xs.end());
    std::vector<std::size_t> ranks(xs.size(), 0);
    std::vector<char> diag_ok(xs.size(), 0);
    parallel_for(xs.size(), [&](std::uint64_t i) {
        const std::int64_t x = xs[i];
        diag_ok[i] = diagonal_property_check(points, ambient, g, x) ? 1 : 0;
        FqMatrix G(ambient.q(), static_cast<std::size_t>(N),
                   static_cast<std::size_t>(N));
        for (std::int64_t y = 0; y < N; ++y) {
            for (std::int64_t z = 0; z < N; ++z) {
                G.at(static_cast<std::size_t>(y), static_cast<std::size_t>(z)) =
                    g[static_cast<std::size_t>(ambient.add(x, ambient.sub(y, z)))];
            }
        }
        ranks[i] = rank(std::move(G));
    });

    for (std::size_t i = 0; i < xs.size(); ++i) {
        const std::uint64_t colsize = cm.columns.at(xs[i]).size();
        r.max_column = std::max(r.max_column, colsize);
        r.min_rank = std::min(r.min_rank, ranks[i]);
        if (!diag_ok[i] || colsize > ranks[i]) r.pass = false;
        ++r.columns_checked;
    }
    if (xs.empty()) r.min_rank = 0;
    return r;
}

}  // namespace skewfree::clp
