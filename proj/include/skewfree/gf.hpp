#pragma once

#include <cstdint>
#include <iosfwd>

namespace skewfree::gf {

// Deterministic trial-division primality test; intended for values below 2^31.
bool is_prime(std::uint64_t v);

// A prime p with 2 <= p < 2^31.  The cap keeps every product of two residues
// inside 64-bit intermediates, so no multiprecision arithmetic is needed.
struct PrimeModulus {
    std::uint32_t value;
    explicit PrimeModulus(std::uint64_t v);
};

// Element of F_{p^2} = F_p[t] / (t^2 + beta*t + gamma), stored as c0 + c1*t.
struct ExtElement {
    std::uint32_t c0 = 0;
    std::uint32_t c1 = 0;
    friend constexpr bool operator==(const ExtElement&, const ExtElement&) = default;
    friend constexpr auto operator<=>(const ExtElement&, const ExtElement&) = default;
};

std::ostream& operator<<(std::ostream& os, const ExtElement& e);

// Arithmetic in F_p and its quadratic extension F_{p^2}.
//
// The reduction polynomial t^2 + beta*t + gamma is the lexicographically
// smallest irreducible pair (beta, gamma), so a given p always produces the
// same representation, run to run and machine to machine.  Conjugation is the
// Frobenius map a -> a^p; the norm N(a) = a * a^p lands in F_p.
class QuadExtField {
public:
    explicit QuadExtField(PrimeModulus p);

    std::uint32_t p() const { return p_; }
    std::uint64_t q() const { return std::uint64_t{p_} * p_; }  // |F_{p^2}|
    std::uint32_t beta() const { return beta_; }
    std::uint32_t gamma() const { return gamma_; }

    // Base field F_p.
    std::uint32_t base_add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t base_sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t base_mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t base_neg(std::uint32_t a) const;
    std::uint32_t base_pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t base_inv(std::uint32_t a) const;  // a != 0

    // Extension field F_{p^2}.
    ExtElement make(std::uint64_t c0, std::uint64_t c1) const;  // reduces mod p
    ExtElement zero() const { return {0, 0}; }
    ExtElement one() const { return {1, 0}; }
    ExtElement from_base(std::uint32_t c) const;

    ExtElement add(ExtElement a, ExtElement b) const;
    ExtElement sub(ExtElement a, ExtElement b) const;
    ExtElement neg(ExtElement a) const;
    ExtElement mul(ExtElement a, ExtElement b) const;
    ExtElement pow(ExtElement a, std::uint64_t e) const;
    ExtElement inv(ExtElement a) const;  // a != 0

    // Galois conjugate a^p, computed by square-and-multiply.
    ExtElement conjugate(ExtElement a) const;

    // Norm N(a) = a * conjugate(a) = a^{p+1}; always lies in F_p, and
    // N(a) = 0 iff a = 0.
    std::uint32_t norm(ExtElement a) const;

    // Canonical dense numbering: index(c0 + c1*t) = c0*p + c1, a bijection
    // with [0, p^2) whose order is lexicographic on (c0, c1).
    std::uint64_t index(ExtElement a) const { return std::uint64_t{a.c0} * p_ + a.c1; }
    ExtElement element(std::uint64_t index) const;

private:
    std::uint32_t p_;
    std::uint32_t beta_;
    std::uint32_t gamma_;
};

}  // namespace skewfree::gf
