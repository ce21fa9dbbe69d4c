#include "skewfree/construct.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "skewfree/threads.hpp"

namespace skewfree::construct {

namespace {

constexpr std::uint64_t kMaxFieldPairs = std::uint64_t{1} << 25;

std::uint64_t pow5(std::uint64_t p) { return p * p * p * p * p; }

}  // namespace

FieldPairSet build_field_set(const unital::Unital& u) {
    const auto& f = u.field();
    const std::uint64_t p = f.p();
    const std::uint64_t expected = pow5(p) - p * p * p;
    if (expected > kMaxFieldPairs) {
        throw std::length_error("field pair set too large: p^5 - p^3 = " +
                                std::to_string(expected) + " pairs exceeds the cap");
    }

    FieldPairSet s{f, {}};
    s.pairs.reserve(expected);
    for (const auto& x : u.points()) {
        const unital::TangentLine line = tangent_line(u, x);
        for (const auto& y : line.points) {
            s.pairs.push_back({static_cast<std::uint16_t>(x.a.c0),
                               static_cast<std::uint16_t>(x.a.c1),
                               static_cast<std::uint16_t>(x.b.c0),
                               static_cast<std::uint16_t>(x.b.c1),
                               static_cast<std::uint16_t>(y.a.c0),
                               static_cast<std::uint16_t>(y.a.c1),
                               static_cast<std::uint16_t>(y.b.c0),
                               static_cast<std::uint16_t>(y.b.c1)});
        }
    }
    if (s.pairs.size() != expected) {
        throw std::logic_error("field pair set size mismatch");
    }
    return s;
}

FieldPairSet apply_shift(const FieldPairSet& s, const ShiftVector& shift) {
    const std::uint32_t p = s.field.p();
    for (std::uint16_t c : shift.v) {
        if (c >= p) throw std::invalid_argument("shift component out of range");
    }
    FieldPairSet out{s.field, {}};
    out.pairs.reserve(s.pairs.size());
    for (const auto& pair : s.pairs) {
        std::array<std::uint16_t, 8> t;
        for (int j = 0; j < 8; ++j) {
            const std::uint32_t c = pair[j];
            const std::uint32_t sj = shift.v[j];
            t[j] = static_cast<std::uint16_t>(c >= sj ? c - sj : c + p - sj);
        }
        out.pairs.push_back(t);
    }
    return out;
}

BestShiftResult best_shift(const FieldPairSet& s, std::uint32_t m,
                           std::uint32_t trials, std::uint64_t seed) {
    const std::uint32_t p = s.field.p();
    if (m < 1 || m > p) {
        throw std::invalid_argument("box side must satisfy 1 <= m <= p");
    }
    if (trials < 1) throw std::invalid_argument("need at least one shift trial");

    // All candidate shifts are drawn up front from one seeded stream, so the
    // sample set is independent of how trials are later scheduled.  Drawing
    // via gen() % p keeps the stream portable across standard libraries (the
    // modulo bias is < 2^-33 for p < 2^31).
    std::mt19937_64 gen(seed);
    std::vector<ShiftVector> shifts(trials);
    for (std::uint32_t k = 0; k < trials; ++k) {
        for (int j = 0; j < 8; ++j) {
            shifts[k].v[j] = static_cast<std::uint16_t>(gen() % p);
        }
    }

    std::vector<std::uint64_t> counts(trials, 0);
    parallel_for(trials, [&](std::uint64_t k) {
        const auto& sh = shifts[k].v;
        std::uint64_t c = 0;
        for (const auto& pair : s.pairs) {
            bool inside = true;
            for (int j = 0; j < 8; ++j) {
                const std::uint32_t v = pair[j];
                const std::uint32_t shifted = v >= sh[j] ? v - sh[j] : v + p - sh[j];
                if (shifted >= m) {
                    inside = false;
                    break;
                }
            }
            c += inside;
        }
        counts[k] = c;
    });

    BestShiftResult best{shifts[0], counts[0], 0};
    for (std::uint32_t k = 1; k < trials; ++k) {
        if (counts[k] > best.count) {
            best = {shifts[k], counts[k], k};
        }
    }
    return best;
}

std::int64_t digit_map(std::uint32_t p, const std::array<std::uint16_t, 4>& digits,
                       std::uint32_t m) {
    if (m < 1 || m > p) {
        throw std::invalid_argument("digit_map requires 1 <= m <= p");
    }
    if (p > (1u << 15)) {
        throw std::invalid_argument("digit_map base too large");
    }
    std::int64_t value = 0;
    std::int64_t pw = 1;
    for (int i = 0; i < 4; ++i) {
        if (digits[i] >= m) {
            throw std::invalid_argument("digit_map: digit " + std::to_string(digits[i]) +
                                        " outside [0, " + std::to_string(m) + ")");
        }
        value += std::int64_t{digits[i]} * pw;
        pw *= p;
    }
    return value;
}

ConstructResult construct_grid_set(std::uint32_t p_in,
                                   std::optional<std::uint32_t> m_opt,
                                   std::uint32_t trials, std::uint64_t seed) {
    const gf::PrimeModulus p(p_in);
    const std::uint32_t m = m_opt.value_or((p.value + 1) / 2);
    if (m < 1 || 2ull * m - 1 > p.value) {
        throw std::invalid_argument(
            "digit-difference uniqueness violated: box side m=" + std::to_string(m) +
            " needs 2m-1 <= p=" + std::to_string(p.value));
    }
    if (trials < 1) throw std::invalid_argument("need at least one shift trial");

    const gf::QuadExtField field(p);
    const unital::Unital u(field);
    const FieldPairSet sprime = build_field_set(u);

    const BestShiftResult bs = best_shift(sprime, m, trials, seed);

    const std::int64_t P = p.value;
    const std::int64_t n = (std::int64_t{m} - 1) * (1 + P + P * P + P * P * P) + 1;

    GridPointSet set;
    set.n = n;
    set.points.reserve(bs.count);
    for (const auto& pair : sprime.pairs) {
        std::array<std::uint16_t, 8> t;
        bool inside = true;
        for (int j = 0; j < 8; ++j) {
            const std::uint32_t v = pair[j];
            const std::uint32_t sj = bs.shift.v[j];
            const std::uint32_t shifted = v >= sj ? v - sj : v + p.value - sj;
            if (shifted >= m) {
                inside = false;
                break;
            }
            t[j] = static_cast<std::uint16_t>(shifted);
        }
        if (!inside) continue;
        set.points.push_back({digit_map(p.value, {t[0], t[1], t[2], t[3]}, m),
                              digit_map(p.value, {t[4], t[5], t[6], t[7]}, m)});
    }
    std::sort(set.points.begin(), set.points.end());
    if (std::adjacent_find(set.points.begin(), set.points.end()) != set.points.end()) {
        throw std::logic_error("digit map collided on distinct pairs");
    }
    if (set.points.size() != bs.count) {
        throw std::logic_error("box intersection size mismatch");
    }

    const detect::FreenessResult cert =
        detect::assert_free(set.points, detect::Ambient::grid(n));
    if (!cert.free) {
        const auto& w = *cert.witness;
        throw detect::CertificationError(
            "constructed grid set failed freeness certification: witness x=" +
            std::to_string(w.x) + " y=" + std::to_string(w.y) +
            " d=" + std::to_string(w.d) + " y'=" + std::to_string(w.y_prime));
    }

    ConstructResult r;
    r.set = std::move(set);
    r.report = ConstructionReport{p.value,
                                  field.q(),
                                  m,
                                  n,
                                  sprime.pairs.size(),
                                  bs.shift,
                                  r.set.points.size(),
                                  static_cast<double>(r.set.points.size()) /
                                      std::pow(static_cast<double>(n), 1.25),
                                  seed,
                                  trials};
    return r;
}

detect::Ambient pair_ambient(const FieldPairSet& s) {
    return detect::Ambient::vector_space(s.field.p(), 4);
}

std::vector<detect::Point> to_points(const FieldPairSet& s) {
    const std::int64_t p = s.field.p();
    std::vector<detect::Point> pts;
    pts.reserve(s.pairs.size());
    for (const auto& pair : s.pairs) {
        const std::int64_t x =
            ((pair[0] * p + pair[1]) * p + pair[2]) * p + pair[3];
        const std::int64_t y =
            ((pair[4] * p + pair[5]) * p + pair[6]) * p + pair[7];
        pts.push_back({x, y});
    }
    return pts;
}

}  // namespace skewfree::construct
