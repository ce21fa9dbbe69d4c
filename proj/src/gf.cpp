#include "skewfree/gf.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace skewfree::gf {

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    if (v % 3 == 0) return v == 3;
    for (std::uint64_t d = 5; d * d <= v; d += 6) {
        if (v % d == 0 || v % (d + 2) == 0) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t v) {
    if (v >= (std::uint64_t{1} << 31)) {
        throw std::invalid_argument("modulus " + std::to_string(v) +
                                    " too large: need p < 2^31");
    }
    if (!is_prime(v)) {
        throw std::invalid_argument("modulus " + std::to_string(v) + " is not prime");
    }
    value = static_cast<std::uint32_t>(v);
}

std::ostream& operator<<(std::ostream& os, const ExtElement& e) {
    return os << e.c0 << "+" << e.c1 << "t";
}

namespace {

// Is t^2 + beta*t + gamma irreducible over F_p?  For odd p this holds iff the
// discriminant beta^2 - 4*gamma is a quadratic non-residue (Euler's
// criterion); for p = 2 the discriminant argument breaks down, so test the two
// candidate roots directly.
bool quadratic_irreducible(std::uint32_t p, std::uint32_t beta, std::uint32_t gamma) {
    auto pw = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    if (p == 2) {
        for (std::uint32_t r = 0; r < 2; ++r) {
            if ((r * r + beta * r + gamma) % 2 == 0) return false;
        }
        return true;
    }
    std::uint64_t disc =
        ((std::uint64_t{beta} * beta) % p + 4ull * p - 4ull * gamma % p) % p;
    if (disc == 0) return false;  // repeated root in F_p
    return pw(disc, (p - 1) / 2) == p - 1;
}

}  // namespace

QuadExtField::QuadExtField(PrimeModulus p) : p_(p.value), beta_(0), gamma_(0) {
    for (std::uint32_t b = 0; b < p_; ++b) {
        for (std::uint32_t g = 0; g < p_; ++g) {
            if (quadratic_irreducible(p_, b, g)) {
                beta_ = b;
                gamma_ = g;
                return;
            }
        }
    }
    // Unreachable: irreducible quadratics exist over every finite field.
    throw std::logic_error("no irreducible quadratic found over F_p");
}

std::uint32_t QuadExtField::base_add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    if (s >= p_) s -= p_;
    return static_cast<std::uint32_t>(s);
}

std::uint32_t QuadExtField::base_sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : static_cast<std::uint32_t>(a + std::uint64_t{p_} - b);
}

std::uint32_t QuadExtField::base_mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
}

std::uint32_t QuadExtField::base_neg(std::uint32_t a) const {
    return a == 0 ? 0 : p_ - a;
}

std::uint32_t QuadExtField::base_pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t r = 1, b = a % p_;
    while (e) {
        if (e & 1) r = r * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint32_t QuadExtField::base_inv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::invalid_argument("division by zero in F_p");
    return base_pow(a, p_ - 2);  // Fermat
}

ExtElement QuadExtField::make(std::uint64_t c0, std::uint64_t c1) const {
    return {static_cast<std::uint32_t>(c0 % p_), static_cast<std::uint32_t>(c1 % p_)};
}

ExtElement QuadExtField::from_base(std::uint32_t c) const {
    return {c % p_, 0};
}

ExtElement QuadExtField::add(ExtElement a, ExtElement b) const {
    return {base_add(a.c0, b.c0), base_add(a.c1, b.c1)};
}

ExtElement QuadExtField::sub(ExtElement a, ExtElement b) const {
    return {base_sub(a.c0, b.c0), base_sub(a.c1, b.c1)};
}

ExtElement QuadExtField::neg(ExtElement a) const {
    return {base_neg(a.c0), base_neg(a.c1)};
}

ExtElement QuadExtField::mul(ExtElement a, ExtElement b) const {
    // (a0 + a1 t)(b0 + b1 t) with t^2 = -beta*t - gamma.
    const std::uint64_t p = p_;
    const std::uint64_t t2 = std::uint64_t{a.c1} * b.c1 % p;  // coeff of t^2
    const std::uint64_t c0 =
        (std::uint64_t{a.c0} * b.c0 + (p - gamma_ % p) % p * t2) % p;
    const std::uint64_t c1 =
        (std::uint64_t{a.c0} * b.c1 + std::uint64_t{a.c1} * b.c0 +
         (p - beta_ % p) % p * t2) %
        p;
    return {static_cast<std::uint32_t>(c0), static_cast<std::uint32_t>(c1)};
}

ExtElement QuadExtField::pow(ExtElement a, std::uint64_t e) const {
    ExtElement r = one();
    ExtElement b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

ExtElement QuadExtField::inv(ExtElement a) const {
    if (a == zero()) throw std::invalid_argument("division by zero in F_{p^2}");
    // a^{-1} = conjugate(a) / N(a): the norm is a nonzero base-field scalar.
    return mul(conjugate(a), from_base(base_inv(norm(a))));
}

ExtElement QuadExtField::conjugate(ExtElement a) const {
    return pow(a, p_);
}

std::uint32_t QuadExtField::norm(ExtElement a) const {
    ExtElement r = mul(a, conjugate(a));
    if (r.c1 != 0) throw std::logic_error("norm value left the base field");
    return r.c0;
}

ExtElement QuadExtField::element(std::uint64_t index) const {
    if (index >= q()) {
        throw std::invalid_argument("element index " + std::to_string(index) +
                                    " outside [0, p^2)");
    }
    return {static_cast<std::uint32_t>(index / p_),
            static_cast<std::uint32_t>(index % p_)};
}

}  // namespace skewfree::gf
