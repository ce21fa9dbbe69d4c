#include "skewfree/unital.hpp"

#include <stdexcept>
#include <string>

namespace skewfree::unital {

Unital::Unital(gf::QuadExtField field) : field_(field) {
    const std::uint64_t q = field_.q();
    const std::uint32_t p = field_.p();

    norms_.resize(q);
    for (std::uint64_t i = 0; i < q; ++i) {
        norms_[i] = field_.norm(field_.element(i));
    }

    // Bucket elements by norm value; buckets stay sorted by element index, so
    // scanning a ascending and each bucket in order yields lexicographic
    // (a, b) enumeration.
    std::vector<std::vector<std::uint32_t>> fiber(p);
    for (std::uint64_t i = 0; i < q; ++i) {
        fiber[norms_[i]].push_back(static_cast<std::uint32_t>(i));
    }

    const std::uint64_t expected =
        std::uint64_t{p} * p * p - p;  // p^3 - p
    points_.reserve(expected);
    for (std::uint64_t ia = 0; ia < q; ++ia) {
        const std::uint32_t want = (1u + p - norms_[ia]) % p;  // N(b) = 1 - N(a)
        for (std::uint32_t ib : fiber[want]) {
            points_.push_back({field_.element(ia), field_.element(ib)});
        }
    }
    if (points_.size() != expected) {
        throw std::logic_error("unital size mismatch: got " +
                               std::to_string(points_.size()) + ", expected " +
                               std::to_string(expected));
    }
}

bool Unital::contains(const FqPair& x) const {
    return field_.base_add(norms_[field_.index(x.a)], norms_[field_.index(x.b)]) == 1;
}

TangentLine tangent_line(const Unital& u, const UnitalPoint& x) {
    const auto& f = u.field();
    if (!u.contains(x)) {
        throw std::invalid_argument("tangent_line: base point is not on the unital");
    }
    const gf::ExtElement cb = f.conjugate(x.b);
    const gf::ExtElement ca = f.conjugate(x.a);
    TangentLine line;
    line.base = x;
    line.points.reserve(f.q());
    for (std::uint64_t it = 0; it < f.q(); ++it) {
        const gf::ExtElement t = f.element(it);
        line.points.push_back({f.add(x.a, f.mul(t, cb)), f.sub(x.b, f.mul(t, ca))});
    }
    return line;
}

TangencyReport tangency_audit(const Unital& u) {
    const auto& f = u.field();
    const auto& norms = u.norm_table();
    const std::uint64_t q = f.q();

    TangencyReport report;
    for (const UnitalPoint& x : u.points()) {
        const gf::ExtElement cb = f.conjugate(x.b);
        const gf::ExtElement ca = f.conjugate(x.a);
        std::uint64_t contacts = 0;
        for (std::uint64_t it = 0; it < q; ++it) {
            const gf::ExtElement t = f.element(it);
            const gf::ExtElement u0 = f.add(x.a, f.mul(t, cb));
            const gf::ExtElement u1 = f.sub(x.b, f.mul(t, ca));
            const std::uint32_t lhs =
                f.base_add(norms[f.index(u0)], norms[f.index(u1)]);
            const std::uint32_t rhs = f.base_add(1 % f.p(), norms[it]);
            ++report.identities_checked;
            if (lhs != rhs) {
                report.pass = false;
                report.failure = TangencyFailure{x, t, lhs, rhs};
                return report;
            }
            if (lhs == 1 % f.p()) ++contacts;  // line point lies on Q
        }
        if (contacts != 1) {
            report.pass = false;
            report.failure = TangencyFailure{x, f.zero(), 0, 0};
            return report;
        }
        ++report.lines_checked;
    }
    return report;
}

}  // namespace skewfree::unital
