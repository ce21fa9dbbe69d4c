#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewfree/detect.hpp"

namespace skewfree::clp {

using BigInt = boost::multiprecision::cpp_int;

// m_d(q, n): the number of monomials in n variables with per-variable degree
// <= q-1 and total degree <= d, for d = 0 .. (q-1)n.  Exact integers
// throughout; the counts overflow 64 bits already around n = 40 for q = 3.
class MonomialTable {
public:
    MonomialTable(std::uint32_t q, std::uint32_t n);

    std::uint32_t q() const { return q_; }
    std::uint32_t n() const { return n_; }
    std::int64_t max_degree() const { return static_cast<std::int64_t>(counts_.size()) - 1; }
    const BigInt& total() const { return total_; }  // q^n

    // m_d with the natural clamping: d < 0 -> 0, d >= (q-1)n -> q^n.
    BigInt count(std::int64_t d) const;

private:
    std::uint32_t q_;
    std::uint32_t n_;
    std::vector<BigInt> counts_;
    BigInt total_;
};

// Verifies q^n - m_d = m_{(q-1)n-d-1} for every d (with m_{-1} = 0), and, for
// q^n <= 4096, re-derives it from the exponent flip a_i -> q-1-a_i directly.
bool complement_audit(std::uint32_t q, std::uint32_t n);

struct CqResult {
    std::uint32_t q = 0;
    double x_star = 0.0;     // minimizer in (0, 1)
    double inf_value = 0.0;  // q^{1 - c_q}
    double c_q = 0.0;
    double residual = 0.0;   // |sum_j (j - (q-1)/3) x*^j|, stationarity defect
    std::uint64_t golden_iterations = 0;
};

// Minimizes f(x) = x^{-(q-1)/3} (1 + x + ... + x^{q-1}) over 0 < x < 1 by
// golden-section search on log f in t = log x (convex there: an affine term
// plus a log-sum-exp), then sharpens the minimizer by bisecting the sign of
// the stationarity expression sum_j (j - (q-1)/3) x^j, which changes sign
// exactly once on (0, 1).  The two independently obtained minimizers must
// agree; c_q = 1 - log_q(inf).
CqResult compute_cq(std::uint32_t q, double tol = 1e-12);

struct BoundReport {
    std::uint32_t q = 0;
    std::uint32_t n = 0;
    std::int64_t paper_d = 0;  // floor(2(q-1)n/3)
    BigInt paper_bound;        // q^n (2 m_{floor(paper_d/2)} + m_{(q-1)n-paper_d})
    std::int64_t best_d = 0;   // minimizing integer d (smallest on ties)
    BigInt exact_min_bound;    // min over d of q^n (2 m_{floor(d/2)} + m_{(q-1)n-d})
    double c_q = 0.0;
    double asymptotic_bound = 0.0;  // 3 q^{(2-c_q) n}
};

// Size bounds for skew corner-free subsets of F_q^n x F_q^n: the closed-form
// degree choice floor(2(q-1)n/3), the exact minimum over all integer degrees
// (valid since the argument works for any d), and the asymptotic form.
BoundReport theorem_bound(std::uint32_t q, std::uint32_t n);

// dim(V) >= m_d - q^n + |X|: lower bound on the dimension of the space of
// degree-<= d polynomials vanishing off X.  May be <= 0 (vacuous) for small X.
BigInt dim_lower_bound(const MonomialTable& table, const BigInt& x_size,
                       std::int64_t d);

// Dense matrix over F_q.
struct FqMatrix {
    std::uint32_t q = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> a;  // row-major, entries in [0, q)

    FqMatrix() = default;
    FqMatrix(std::uint32_t q_, std::size_t rows_, std::size_t cols_)
        : q(q_), rows(rows_), cols(cols_), a(rows_ * cols_, 0) {}
    std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// Row-echelon rank by Gaussian elimination with exact modular arithmetic.
std::size_t rank(FqMatrix m);

// Polynomial on F_q^n with per-variable degree <= q-1, stored as a dense
// coefficient array indexed like vector_space(q, n) points (big-endian
// exponent tuples).
class MultiPoly {
public:
    MultiPoly(std::uint32_t q, std::uint32_t n);

    std::uint32_t q() const { return q_; }
    std::uint32_t n() const { return n_; }
    std::vector<std::uint32_t>& coeffs() { return coeff_; }
    const std::vector<std::uint32_t>& coeffs() const { return coeff_; }

    bool is_zero() const;
    std::int64_t total_degree() const;  // max over nonzero coefficients; -1 if zero

    // Evaluation at the point with the given dense index.
    std::uint32_t eval(std::int64_t point_index) const;
    // Values at every point of F_q^n, indexed densely.
    std::vector<std::uint32_t> value_table() const;

    // Uniform random coefficients on monomials of total degree <= max_degree,
    // resampled until nonzero.
    static MultiPoly random(std::uint32_t q, std::uint32_t n,
                            std::int64_t max_degree, std::mt19937_64& rng);

private:
    std::uint32_t q_;
    std::uint32_t n_;
    std::int64_t points_;
    std::vector<std::uint32_t> coeff_;
};

struct RankCheckReport {
    std::uint32_t q = 0;
    std::uint32_t n = 0;
    std::int64_t d = 0;
    std::uint32_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t max_rank = 0;
    BigInt rank_bound;  // m_{floor(d/2)} + m_{ceil(d/2)}
    bool pass = false;
};

// Samples `trials` random polynomials P of total degree <= d and base points
// x, forms the q^n x q^n matrix A_{y,z} = P(x + y - z), and asserts
// rank(A) <= m_{floor(d/2)} + m_{ceil(d/2)} every time (the two-sided split
// of a degree-d monomial; equals 2 m_{d/2} for even d).
RankCheckReport clp_rank_check(std::uint32_t q, std::uint32_t n, std::int64_t d,
                               std::uint32_t trials, std::uint64_t seed);

// For a skew corner-free set in a vector_space ambient, a function g
// supported on X = pi(S), and a point x with g(x) != 0, checks that the
// matrix G_{y,z} = g(x + y - z) restricted to rows and columns C_x is
// diagonal with every diagonal entry equal to g(x).  Freeness of the input is
// the mathematical hypothesis, not a validated precondition: a planted corner
// surfaces as a `false` return (some off-diagonal entry hits X).
bool diagonal_property_check(std::span<const detect::Point> points,
                             const detect::Ambient& ambient,
                             std::span<const std::uint32_t> g, std::int64_t x);

struct ColumnAuditReport {
    bool pass = false;
    std::uint64_t columns_checked = 0;
    std::uint64_t max_column = 0;   // max |C_x|
    std::size_t min_rank = 0;       // min over x of rank(G)
    std::int64_t d = 0;
    BigInt clp_bound;               // 2 m_{floor(d/2)}, reported for context
};

// For every x in X (g = indicator of X), verifies |C_x| <= rank(G) by
// exhibiting the nonsingular diagonal C_x x C_x submatrix, and computes
// rank(G) outright as a cross-check.  Requires a certified-free input.
ColumnAuditReport column_bound_audit(std::span<const detect::Point> points,
                                     const detect::Ambient& ambient,
                                     std::int64_t d);

}  // namespace skewfree::clp
