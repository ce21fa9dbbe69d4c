#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewfree/gf.hpp"

namespace skewfree::unital {

// A pair (a, b) in F_{p^2} x F_{p^2}.  Points of the unital Q satisfy
// N(a) + N(b) = 1; tangent-line points are arbitrary pairs.
struct FqPair {
    gf::ExtElement a;
    gf::ExtElement b;
    friend constexpr bool operator==(const FqPair&, const FqPair&) = default;
    friend constexpr auto operator<=>(const FqPair&, const FqPair&) = default;
};

using UnitalPoint = FqPair;

// The affine Hermitian unital Q = {(a, b) : N(a) + N(b) = 1}, with exactly
// p^3 - p points, enumerated in lexicographic (a, b) index order.
class Unital {
public:
    explicit Unital(gf::QuadExtField field);

    const gf::QuadExtField& field() const { return field_; }
    const std::vector<UnitalPoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    // Membership test via the defining equation.
    bool contains(const FqPair& x) const;

    // N(e) for every e in F_{p^2}, indexed by field().index(e).
    const std::vector<std::uint32_t>& norm_table() const { return norms_; }

private:
    gf::QuadExtField field_;
    std::vector<std::uint32_t> norms_;
    std::vector<UnitalPoint> points_;
};

// The tangent F_q-line through x = (a, b) on Q:
//   l_x = {(a + t*conj(b), b - t*conj(a)) : t in F_q},
// materialized with t running over F_q in canonical index order, so
// points[0] (t = 0) is the base point itself.
struct TangentLine {
    UnitalPoint base;
    std::vector<FqPair> points;
};

TangentLine tangent_line(const Unital& u, const UnitalPoint& x);

// First failure found by tangency_audit, if any.
struct TangencyFailure {
    UnitalPoint x;
    gf::ExtElement t;
    std::uint32_t lhs = 0;  // N(a + t*conj(b)) + N(b - t*conj(a)) mod p
    std::uint32_t rhs = 0;  // 1 + N(t) mod p
};

struct TangencyReport {
    bool pass = true;
    std::uint64_t identities_checked = 0;  // (x, t) pairs verified
    std::uint64_t lines_checked = 0;       // lines with a verified unique contact
    std::optional<TangencyFailure> failure;
};

// Verifies, for every x in Q and every t in F_q, the norm identity
//   N(a + t*conj(b)) + N(b - t*conj(a)) = 1 + N(t),
// and that each tangent line meets Q exactly once (at t = 0).
TangencyReport tangency_audit(const Unital& u);

}  // namespace skewfree::unital
