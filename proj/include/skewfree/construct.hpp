#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "skewfree/detect.hpp"
#include "skewfree/gf.hpp"
#include "skewfree/unital.hpp"

namespace skewfree::construct {

// S' = {(x, y) : x in Q, y on the tangent line l_x}, stored in F_p
// coordinates.  Each pair holds the eight digits
//   (x1.c0, x1.c1, x2.c0, x2.c1, y1.c0, y1.c1, y2.c0, y2.c1)
// of the two F_{p^2}^2 points x = (x1, x2) and y = (y1, y2).
struct FieldPairSet {
    gf::QuadExtField field;
    std::vector<std::array<std::uint16_t, 8>> pairs;
};

// Enumerates S' in canonical order (x along the unital, then t along the
// line); |result| = (p^3 - p) * p^2 = p^5 - p^3.
FieldPairSet build_field_set(const unital::Unital& u);

// A shift s in F_p^8, acting on pairs by componentwise subtraction.
struct ShiftVector {
    std::array<std::uint16_t, 8> v{};
    friend constexpr bool operator==(const ShiftVector&, const ShiftVector&) = default;
};

FieldPairSet apply_shift(const FieldPairSet& s, const ShiftVector& shift);

struct BestShiftResult {
    ShiftVector shift;
    std::uint64_t count = 0;        // |(S' - s) ∩ [0, m)^8|
    std::uint32_t trial_index = 0;  // earliest trial attaining the maximum
};

// Draws `trials` shifts from a seeded generator and returns the one whose
// translate meets the box [0, m)^8 in the most pairs.  Trials are independent
// and may be evaluated concurrently; ties break to the smallest trial index,
// so the result is deterministic for a fixed seed under any schedule.
BestShiftResult best_shift(const FieldPairSet& s, std::uint32_t m,
                           std::uint32_t trials, std::uint64_t seed);

// psi(b0, b1, b2, b3) = b0 + b1*p + b2*p^2 + b3*p^3 (little-endian digits).
// Injective on [0, m)^4 for m <= p; differences of box points determine digit
// differences when 2m - 1 <= p.
std::int64_t digit_map(std::uint32_t p, const std::array<std::uint16_t, 4>& digits,
                       std::uint32_t m);

struct GridPointSet {
    std::int64_t n = 0;  // points live in [0, n)^2
    std::vector<detect::Point> points;
};

struct ConstructionReport {
    std::uint32_t p = 0;
    std::uint64_t q = 0;  // p^2
    std::uint32_t m = 0;
    std::int64_t n = 0;
    std::uint64_t field_pairs = 0;  // |S'|
    ShiftVector shift;
    std::uint64_t set_size = 0;  // |S|
    double ratio = 0.0;          // |S| / n^(5/4)
    std::uint64_t seed = 0;
    std::uint32_t shifts_tried = 0;
};

struct ConstructResult {
    GridPointSet set;
    ConstructionReport report;
};

// Full pipeline: build S', pick the best of `trials` seeded shifts, intersect
// with the box [0, m)^8, map through psi x psi into [n]^2 with
// n = (m-1)(1 + p + p^2 + p^3) + 1, and certify the result skew corner-free
// before returning (a certification failure throws, as it would mean a bug).
// m defaults to floor((p+1)/2), the largest box with unique signed-digit
// differences; larger m is rejected.
ConstructResult construct_grid_set(std::uint32_t p,
                                   std::optional<std::uint32_t> m_opt,
                                   std::uint32_t trials, std::uint64_t seed);

// S' as plain points for the detection module: both sides encoded big-endian
// in the vector_space(p, 4) ambient, digit order as stored in FieldPairSet.
detect::Ambient pair_ambient(const FieldPairSet& s);
std::vector<detect::Point> to_points(const FieldPairSet& s);

}  // namespace skewfree::construct
