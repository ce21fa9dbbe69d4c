#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewfree/detect.hpp"

namespace skewfree::search {

enum class Algorithm { exhaustive, branch_and_bound };

struct SearchConfig {
    detect::Ambient ambient = detect::Ambient::grid(1);
    Algorithm algorithm = Algorithm::branch_and_bound;
    std::uint64_t node_limit = UINT64_MAX;
    // Size of a free set known to exist; used only to prune harder.  The
    // reported maximum always comes from a set the search actually visited.
    std::optional<std::uint64_t> initial_lower_bound;
    // Restrict the first column's candidates to reflection-canonical subsets.
    // Off by default so the optimality argument stays a plain exhaustion.
    bool symmetry_reduction = false;
};

struct ExtremalResult {
    std::uint64_t max_size = 0;
    std::vector<detect::Point> witness;  // one maximum set, certified free
    std::uint64_t nodes = 0;
    bool proved = false;  // true iff the whole space was covered or pruned soundly
};

// Exact maximum by subset dynamic programming over all 2^(cells) subsets.
// Requires cells <= 26; beyond that use max_free_branch_bound.
ExtremalResult max_free_exhaustive(const SearchConfig& config);

// Exact maximum by column-by-column depth-first search.  Column subsets are
// tried in decreasing popcount (then increasing value); pruning drops a
// branch when current size + all remaining cells <= incumbent; the incumbent
// starts from a deterministic greedy pass.  If the node limit is hit, the
// best set found so far is returned with proved = false.
ExtremalResult max_free_branch_bound(const SearchConfig& config);

// Dispatch on config.algorithm.
ExtremalResult max_free(const SearchConfig& config);

struct DensityRow {
    std::int64_t n = 0;       // grid bound, or vector-space dimension
    std::int64_t domain = 0;  // n for grids, q^n for vector spaces
    std::uint64_t max_size = 0;
    double ratio_pow54 = 0.0;  // max / domain^(5/4)
    double ratio_sq = 0.0;     // max / domain^2
};

// Exact maxima over a range of instance sizes: grid(1..n_max), or
// vector_space(q, 1..n_max) when q is given.  Each instance is solved with
// the exhaustive DP when it fits the cap and branch-and-bound otherwise.
std::vector<DensityRow> density_table(std::int64_t n_max,
                                      std::optional<std::uint32_t> q);

}  // namespace skewfree::search
