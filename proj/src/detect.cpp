#include "skewfree/detect.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "skewfree/gf.hpp"

namespace skewfree::detect {

Ambient Ambient::grid(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("grid ambient requires n >= 1");
    return Ambient(Kind::grid, n, 0, 0);
}

Ambient Ambient::vector_space(std::uint32_t q, std::uint32_t n) {
    if (!gf::is_prime(q)) {
        throw std::invalid_argument("vector_space ambient requires prime q, got " +
                                    std::to_string(q));
    }
    if (n < 1) throw std::invalid_argument("vector_space ambient requires n >= 1");
    std::int64_t extent = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (extent > (std::int64_t{1} << 56) / q) {
            throw std::invalid_argument("vector_space ambient too large: q^n overflows");
        }
        extent *= q;
    }
    return Ambient(Kind::vector_space, extent, q, n);
}

std::uint32_t Ambient::q() const {
    if (kind_ != Kind::vector_space) {
        throw std::logic_error("q() is only defined for the vector_space ambient");
    }
    return q_;
}

std::uint32_t Ambient::dim() const {
    if (kind_ != Kind::vector_space) {
        throw std::logic_error("dim() is only defined for the vector_space ambient");
    }
    return dim_;
}

std::int64_t Ambient::add(std::int64_t a, std::int64_t b) const {
    if (kind_ == Kind::grid) return a + b;
    std::int64_t r = 0, pw = 1;
    for (std::uint32_t i = 0; i < dim_; ++i) {
        r += (a % q_ + b % q_) % q_ * pw;
        a /= q_;
        b /= q_;
        pw *= q_;
    }
    return r;
}

std::int64_t Ambient::sub(std::int64_t a, std::int64_t b) const {
    if (kind_ == Kind::grid) return a - b;
    std::int64_t r = 0, pw = 1;
    for (std::uint32_t i = 0; i < dim_; ++i) {
        r += (a % q_ - b % q_ + q_) % q_ * pw;
        a /= q_;
        b /= q_;
        pw *= q_;
    }
    return r;
}

bool Ambient::twice_is_zero(std::int64_t d) const {
    if (kind_ == Kind::grid) return d == 0;
    return q_ == 2 || d == 0;
}

std::vector<std::uint32_t> Ambient::digits(std::int64_t v) const {
    if (kind_ != Kind::vector_space) {
        throw std::logic_error("digits() is only defined for the vector_space ambient");
    }
    std::vector<std::uint32_t> ds(dim_);
    for (std::uint32_t i = dim_; i-- > 0;) {  // least significant digit last
        ds[i] = static_cast<std::uint32_t>(v % q_);
        v /= q_;
    }
    return ds;
}

std::int64_t Ambient::from_digits(std::span<const std::uint32_t> ds) const {
    if (kind_ != Kind::vector_space) {
        throw std::logic_error(
            "from_digits() is only defined for the vector_space ambient");
    }
    if (ds.size() != dim_) {
        throw std::invalid_argument("from_digits: expected " + std::to_string(dim_) +
                                    " digits, got " + std::to_string(ds.size()));
    }
    std::int64_t v = 0;
    for (std::uint32_t d : ds) {
        if (d >= q_) throw std::invalid_argument("from_digits: digit out of range");
        v = v * q_ + d;
    }
    return v;
}

ColumnMap columnize(std::span<const Point> points, const Ambient& ambient) {
    ColumnMap cm;
    for (const Point& pt : points) {
        if (!ambient.in_range(pt.x) || !ambient.in_range(pt.y)) {
            throw std::invalid_argument("columnize: point (" + std::to_string(pt.x) +
                                        ", " + std::to_string(pt.y) +
                                        ") outside the ambient range");
        }
        cm.columns[pt.x].push_back(pt.y);
    }
    for (auto& [x, col] : cm.columns) {
        std::sort(col.begin(), col.end());
        col.erase(std::unique(col.begin(), col.end()), col.end());
        cm.xs.insert(x);
        cm.point_count += col.size();
    }
    return cm;
}

std::optional<Witness> find_skew_corner(std::span<const Point> points,
                                        const Ambient& ambient,
                                        DetectStats* stats) {
    const ColumnMap cm = columnize(points, ambient);
    DetectStats local;
    DetectStats& st = stats ? *stats : local;

    for (const auto& [x, col] : cm.columns) {
        if (col.size() < 2) continue;
        std::vector<std::int64_t> ds;
        ds.reserve(col.size() - 1);
        for (std::int64_t y : col) {
            // Candidate differences for this base y, scanned in ascending
            // order of d so the first hit is lexicographically minimal.
            ds.clear();
            for (std::int64_t z : col) {
                if (z != y) ds.push_back(ambient.sub(z, y));
            }
            std::sort(ds.begin(), ds.end());
            for (std::int64_t d : ds) {
                ++st.probes;
                const std::int64_t xd = ambient.add(x, d);
                if (!cm.xs.contains(xd)) continue;
                Witness w{x, y, d, cm.columns.at(xd).front()};
                // Re-validate against the raw input, not the column index.
                const std::set<Point> raw(points.begin(), points.end());
                if (!raw.contains({w.x, w.y}) ||
                    !raw.contains({w.x, ambient.add(w.y, w.d)}) ||
                    !raw.contains({ambient.add(w.x, w.d), w.y_prime})) {
                    throw CertificationError("witness failed raw-set re-validation");
                }
                return w;
            }
        }
    }
    return std::nullopt;
}

std::uint64_t count_skew_corners(std::span<const Point> points,
                                 const Ambient& ambient,
                                 DetectStats* stats) {
    const ColumnMap cm = columnize(points, ambient);
    DetectStats local;
    DetectStats& st = stats ? *stats : local;

    std::uint64_t count = 0;
    for (const auto& [x, col] : cm.columns) {
        if (col.size() < 2) continue;
        for (std::int64_t y : col) {
            for (std::int64_t z : col) {
                if (z == y) continue;
                ++st.probes;
                const std::int64_t d = ambient.sub(z, y);
                const std::int64_t xd = ambient.add(x, d);
                if (!cm.xs.contains(xd)) continue;
                // When d = -d the ordered pairs (y, z) and (z, y) reach the
                // same third column and describe the same triples; keep the
                // y < z representative only.
                if (ambient.twice_is_zero(d) && y > z) continue;
                count += cm.columns.at(xd).size();
            }
        }
    }
    return count;
}

FreenessResult assert_free(std::span<const Point> points, const Ambient& ambient) {
    FreenessResult r;
    DetectStats st;
    r.witness = find_skew_corner(points, ambient, &st);
    r.free = !r.witness.has_value();
    r.probes = st.probes;
    return r;
}

}  // namespace skewfree::detect
