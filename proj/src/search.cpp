#include "skewfree/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace skewfree::search {

namespace {

// Both ambients have as many columns as rows: n for grid(n), q^n for
// vector_space(q, n).  Cells are numbered x * rows + y.
struct Geometry {
    std::int64_t cols = 0;
    std::int64_t rows = 0;
};

Geometry geometry(const detect::Ambient& amb) {
    return {amb.extent(), amb.extent()};
}

std::vector<detect::Point> mask_to_points(std::uint64_t cells_mask,
                                          std::int64_t rows) {
    std::vector<detect::Point> pts;
    while (cells_mask) {
        const int c = std::countr_zero(cells_mask);
        cells_mask &= cells_mask - 1;
        pts.push_back({c / rows, c % rows});
    }
    return pts;
}

void certify_witness(const std::vector<detect::Point>& pts,
                     const detect::Ambient& amb) {
    if (!detect::assert_free(pts, amb).free) {
        throw detect::CertificationError("search produced a non-free witness");
    }
}

// All skew-corner triples as 3-cell masks, deduplicated, and indexed by their
// lowest cell (every triple subset of a mask whose lowest set bit is c has
// minimum cell exactly c, which is what the subset DP peels off).
std::vector<std::vector<std::uint64_t>> corner_triples_by_min_cell(
    const detect::Ambient& amb) {
    const auto [cols, rows] = geometry(amb);
    std::vector<std::uint64_t> triples;
    for (std::int64_t x = 0; x < cols; ++x) {
        for (std::int64_t y = 0; y < rows; ++y) {
            for (std::int64_t z = 0; z < rows; ++z) {
                if (z == y) continue;
                const std::int64_t xd = amb.add(x, amb.sub(z, y));
                if (!amb.in_range(xd)) continue;
                for (std::int64_t yp = 0; yp < rows; ++yp) {
                    const std::uint64_t mask = (std::uint64_t{1} << (x * rows + y)) |
                                               (std::uint64_t{1} << (x * rows + z)) |
                                               (std::uint64_t{1} << (xd * rows + yp));
                    triples.push_back(mask);
                }
            }
        }
    }
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

    std::vector<std::vector<std::uint64_t>> by_cell(
        static_cast<std::size_t>(cols * rows));
    for (std::uint64_t t : triples) {
        by_cell[static_cast<std::size_t>(std::countr_zero(t))].push_back(t);
    }
    return by_cell;
}

}  // namespace

ExtremalResult max_free_exhaustive(const SearchConfig& config) {
    const detect::Ambient& amb = config.ambient;
    const auto [cols, rows] = geometry(amb);
    const std::int64_t cells = cols * rows;
    if (cells > 26) {
        throw std::invalid_argument(
            "exhaustive search over " + std::to_string(cells) +
            " cells exceeds the 2^26-subset cap; use branch_and_bound");
    }

    const auto by_cell = corner_triples_by_min_cell(amb);
    const std::uint64_t space = std::uint64_t{1} << cells;
    std::vector<std::uint8_t> free(space, 0);
    free[0] = 1;

    ExtremalResult r;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 1; mask < space; ++mask) {
        const int low = std::countr_zero(mask);
        std::uint8_t ok = free[mask & (mask - 1)];
        if (ok) {
            for (std::uint64_t t : by_cell[static_cast<std::size_t>(low)]) {
                if ((mask & t) == t) {
                    ok = 0;
                    break;
                }
            }
        }
        free[mask] = ok;
        if (ok) {
            const auto size = static_cast<std::uint64_t>(std::popcount(mask));
            if (size > r.max_size) {
                r.max_size = size;
                best_mask = mask;
            }
        }
    }
    r.nodes = space;
    r.proved = true;
    r.witness = mask_to_points(best_mask, rows);
    certify_witness(r.witness, amb);
    return r;
}

namespace {

struct Candidate {
    std::uint32_t mask = 0;
    std::uint64_t diffs = 0;  // bit delta: some pair of rows differs by delta
    std::uint32_t size = 0;
};

// The difference profile of a row subset: for grids, bit delta is set when
// two chosen rows are exactly delta apart; for vector spaces, bit d is set
// when two chosen rows differ by the group element d (symmetric under
// negation since both orders are included).
std::uint64_t diff_profile(std::uint32_t mask, const detect::Ambient& amb,
                           std::int64_t rows) {
    std::uint64_t d = 0;
    if (amb.is_grid()) {
        for (std::int64_t delta = 1; delta < rows; ++delta) {
            if (mask & (mask >> delta)) d |= std::uint64_t{1} << delta;
        }
    } else {
        for (std::int64_t y = 0; y < rows; ++y) {
            if (!(mask >> y & 1)) continue;
            for (std::int64_t z = 0; z < rows; ++z) {
                if (z != y && (mask >> z & 1)) d |= std::uint64_t{1} << amb.sub(z, y);
            }
        }
    }
    return d;
}

class BranchBound {
public:
    BranchBound(const SearchConfig& config)
        : amb_(config.ambient), limit_(config.node_limit) {
        const auto [cols, rows] = geometry(amb_);
        cols_ = cols;
        rows_ = rows;
        if (rows_ > 20) {
            throw std::invalid_argument(
                "branch_and_bound enumerates per-column row subsets; " +
                std::to_string(rows_) + " rows exceeds the cap of 20");
        }

        candidates_.reserve(std::size_t{1} << rows_);
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << rows_); ++mask) {
            candidates_.push_back(
                {mask, diff_profile(mask, amb_, rows_),
                 static_cast<std::uint32_t>(std::popcount(mask))});
        }
        std::sort(candidates_.begin(), candidates_.end(),
                  [](const Candidate& a, const Candidate& b) {
                      if (a.size != b.size) return a.size > b.size;
                      return a.mask < b.mask;
                  });

        chosen_.assign(static_cast<std::size_t>(cols_), Candidate{});
        best_cols_.assign(static_cast<std::size_t>(cols_), 0);
        if (config.symmetry_reduction) build_reflection();
    }

    ExtremalResult run(std::optional<std::uint64_t> initial_lower_bound,
                       bool symmetry) {
        greedy();
        // A known-achievable size tightens pruning: branches that cannot even
        // tie it are cut, while branches that can reach it survive, so a set
        // of that size is still found and the witness matches max_size.
        if (initial_lower_bound && *initial_lower_bound > 0) {
            prune_cut_ = *initial_lower_bound - 1;
        }
        dfs(0, 0, symmetry);

        ExtremalResult r;
        r.max_size = best_size_;
        r.nodes = nodes_;
        r.proved = !aborted_;
        std::vector<detect::Point> pts;
        for (std::int64_t x = 0; x < cols_; ++x) {
            std::uint32_t m = best_cols_[static_cast<std::size_t>(x)];
            while (m) {
                const int y = std::countr_zero(m);
                m &= m - 1;
                pts.push_back({x, y});
            }
        }
        r.witness = std::move(pts);
        certify_witness(r.witness, amb_);
        return r;
    }

private:
    void build_reflection() {
        reflect_row_.resize(static_cast<std::size_t>(rows_));
        for (std::int64_t y = 0; y < rows_; ++y) {
            reflect_row_[static_cast<std::size_t>(y)] =
                amb_.is_grid() ? rows_ - 1 - y : amb_.sub(0, y);
        }
    }

    std::uint32_t reflect_mask(std::uint32_t mask) const {
        std::uint32_t out = 0;
        while (mask) {
            const int y = std::countr_zero(mask);
            mask &= mask - 1;
            out |= std::uint32_t{1} << reflect_row_[static_cast<std::size_t>(y)];
        }
        return out;
    }

    // May column `x` hold `cand` next to the already chosen columns?  A pair
    // in some C_i reaching column x, or a pair in cand reaching column i,
    // would complete a corner with any point of the other column.
    bool compatible(std::int64_t x, const Candidate& cand) const {
        for (std::int64_t i = 0; i < x; ++i) {
            const Candidate& prev = chosen_[static_cast<std::size_t>(i)];
            if (prev.mask == 0 && cand.mask == 0) continue;
            if (amb_.is_grid()) {
                const std::int64_t delta = x - i;
                if (cand.mask && (prev.diffs >> delta & 1)) return false;
                if (prev.mask && (cand.diffs >> delta & 1)) return false;
            } else {
                if (cand.mask && (prev.diffs >> amb_.sub(x, i) & 1)) return false;
                if (prev.mask && (cand.diffs >> amb_.sub(i, x) & 1)) return false;
            }
        }
        return true;
    }

    // Deterministic incumbent: scan columns left to right, growing each
    // column row by row, keeping every extension that stays corner-free.
    void greedy() {
        for (std::int64_t x = 0; x < cols_; ++x) {
            Candidate cur{};
            for (std::int64_t y = 0; y < rows_; ++y) {
                Candidate ext{cur.mask | (std::uint32_t{1} << y), 0, cur.size + 1};
                ext.diffs = diff_profile(ext.mask, amb_, rows_);
                if (compatible(x, ext)) cur = ext;
            }
            chosen_[static_cast<std::size_t>(x)] = cur;
        }
        std::uint64_t size = 0;
        for (const auto& c : chosen_) size += c.size;
        best_size_ = size;
        for (std::int64_t x = 0; x < cols_; ++x) {
            best_cols_[static_cast<std::size_t>(x)] =
                chosen_[static_cast<std::size_t>(x)].mask;
        }
        for (auto& c : chosen_) c = Candidate{};
    }

    void dfs(std::int64_t x, std::uint64_t size, bool symmetry) {
        if (aborted_) return;
        if (x == cols_) {
            if (size > best_size_) {
                best_size_ = size;
                for (std::int64_t i = 0; i < cols_; ++i) {
                    best_cols_[static_cast<std::size_t>(i)] =
                        chosen_[static_cast<std::size_t>(i)].mask;
                }
            }
            return;
        }
        const std::uint64_t rest =
            static_cast<std::uint64_t>((cols_ - x - 1) * rows_);
        for (const Candidate& cand : candidates_) {
            // Candidates are ordered by decreasing size, so once even a full
            // remainder cannot beat the incumbent, the rest cannot either.
            if (size + cand.size + rest <= std::max(best_size_, prune_cut_)) break;
            if (symmetry && x == 0 && cand.mask > reflect_mask(cand.mask)) continue;
            if (++nodes_ > limit_) {
                aborted_ = true;
                return;
            }
            if (!compatible(x, cand)) continue;
            chosen_[static_cast<std::size_t>(x)] = cand;
            dfs(x + 1, size + cand.size, symmetry);
            chosen_[static_cast<std::size_t>(x)] = Candidate{};
            if (aborted_) return;
        }
    }

    detect::Ambient amb_;
    std::uint64_t limit_;
    std::int64_t cols_ = 0;
    std::int64_t rows_ = 0;
    std::vector<Candidate> candidates_;
    std::vector<Candidate> chosen_;
    std::vector<std::uint32_t> best_cols_;
    std::vector<std::int64_t> reflect_row_;
    std::uint64_t best_size_ = 0;
    std::uint64_t prune_cut_ = 0;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

ExtremalResult max_free_branch_bound(const SearchConfig& config) {
    BranchBound bb(config);
    return bb.run(config.initial_lower_bound, config.symmetry_reduction);
}

ExtremalResult max_free(const SearchConfig& config) {
    return config.algorithm == Algorithm::exhaustive ? max_free_exhaustive(config)
                                                     : max_free_branch_bound(config);
}

std::vector<DensityRow> density_table(std::int64_t n_max,
                                      std::optional<std::uint32_t> q) {
    if (n_max < 1) throw std::invalid_argument("density table requires n_max >= 1");
    std::vector<DensityRow> rows;
    for (std::int64_t k = 1; k <= n_max; ++k) {
        SearchConfig config;
        config.ambient = q ? detect::Ambient::vector_space(*q, static_cast<std::uint32_t>(k))
                           : detect::Ambient::grid(k);
        const std::int64_t cells = config.ambient.extent() * config.ambient.extent();
        config.algorithm = cells <= 20 ? Algorithm::exhaustive
                                       : Algorithm::branch_and_bound;
        const ExtremalResult res = max_free(config);

        DensityRow row;
        row.n = k;
        row.domain = config.ambient.extent();
        row.max_size = res.max_size;
        const double dom = static_cast<double>(row.domain);
        row.ratio_pow54 = static_cast<double>(res.max_size) / std::pow(dom, 1.25);
        row.ratio_sq = static_cast<double>(res.max_size) / (dom * dom);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace skewfree::search
