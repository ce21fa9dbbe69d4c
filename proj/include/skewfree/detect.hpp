#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace skewfree::detect {

// Raised when an internally produced set fails its own freeness
// certification; reaching it means a bug, not bad input.
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A point (x, y).  Coordinates are encoded ambient values: plain integers for
// the grid, dense indices of F_q^n vectors for the vector-space ambient.
struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend constexpr bool operator==(const Point&, const Point&) = default;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

// The two coordinate domains a point set can live in:
//   grid(n):            coordinates in [0, n), differences are plain integer
//                       subtraction with no wraparound;
//   vector_space(q, n): coordinates encode vectors of F_q^n (q prime),
//                       differences are componentwise mod q.
//
// Vectors (v1, ..., vn) are encoded big-endian: index = sum v_i * q^(n-i),
// so v1 is the most significant digit.
class Ambient {
public:
    enum class Kind { grid, vector_space };

    static Ambient grid(std::int64_t n);
    static Ambient vector_space(std::uint32_t q, std::uint32_t n);

    Kind kind() const { return kind_; }
    bool is_grid() const { return kind_ == Kind::grid; }

    // Grid bound n, or q^n for the vector space.
    std::int64_t extent() const { return extent_; }
    std::uint32_t q() const;    // vector_space only
    std::uint32_t dim() const;  // vector_space only

    bool in_range(std::int64_t c) const { return c >= 0 && c < extent_; }

    // Group/affine operations on encoded coordinates.  Grid results may fall
    // outside [0, n); membership tests are the only range gate, matching the
    // definition of a corner in a subset of the grid.
    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t sub(std::int64_t a, std::int64_t b) const;

    // Whether d + d = 0 in the difference domain (grid: only d = 0; vector
    // space: everywhere iff q = 2).  Drives corner-triple deduplication.
    bool twice_is_zero(std::int64_t d) const;

    std::vector<std::uint32_t> digits(std::int64_t v) const;  // vector_space only
    std::int64_t from_digits(std::span<const std::uint32_t> ds) const;

    friend bool operator==(const Ambient&, const Ambient&) = default;

private:
    Ambient(Kind k, std::int64_t extent, std::uint32_t q, std::uint32_t dim)
        : kind_(k), extent_(extent), q_(q), dim_(dim) {}

    Kind kind_;
    std::int64_t extent_;
    std::uint32_t q_;
    std::uint32_t dim_;
};

// Columns C_x = {y : (x, y) in S}, plus the occupied-column set X with O(1)
// membership probes.  Input duplicates collapse; point_count is |S| as a set.
struct ColumnMap {
    std::map<std::int64_t, std::vector<std::int64_t>> columns;  // x -> sorted C_x
    std::unordered_set<std::int64_t> xs;                        // X
    std::uint64_t point_count = 0;
};

ColumnMap columnize(std::span<const Point> points, const Ambient& ambient);

// Witness of a skew corner: the three points (x, y), (x, y+d), (x+d, y')
// with d != 0 all belong to the set.
struct Witness {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t d = 0;
    std::int64_t y_prime = 0;
    friend constexpr bool operator==(const Witness&, const Witness&) = default;
};

struct DetectStats {
    std::uint64_t probes = 0;  // column-membership probes, one per (y, z) pair
};

// Finds the lexicographically first witness in (x, y, d, y') scan order, or
// nothing if the set is skew corner-free.  For each column x and each ordered
// pair y != z in C_x with d = z - y, membership of column x + d is probed in
// O(1); total work is O(sum |C_x|^2) probes plus input size.
std::optional<Witness> find_skew_corner(std::span<const Point> points,
                                        const Ambient& ambient,
                                        DetectStats* stats = nullptr);

// Exact number of skew corners, counted as distinct point triples
// {(x,y), (x,y+d), (x+d,y')}.  When d = -d the two parametrizations
// (y, d) and (y+d, -d) describe the same triple and are counted once.
std::uint64_t count_skew_corners(std::span<const Point> points,
                                 const Ambient& ambient,
                                 DetectStats* stats = nullptr);

struct FreenessResult {
    bool free = false;
    std::optional<Witness> witness;  // present iff !free
    std::uint64_t probes = 0;
};

// Certification entry point: free iff find_skew_corner returns nothing; a
// failure carries the witness (structured result, not an exception).
FreenessResult assert_free(std::span<const Point> points, const Ambient& ambient);

}  // namespace skewfree::detect
