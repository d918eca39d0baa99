// Polynomial bases of P_d and their symbolic decompositions.
//
// Six basis kinds are supported.  Four are the classical ones (power,
// falling factorial, rising factorial, binomial coefficient); the two
// alternating kinds twist the sign of each element, b_i -> (-1)^(d-i) b_i,
// and show up when locating roots of chromatic polynomials.  Every basis
// element evaluates as a product of linear factors, which is what makes
// both the exact real/imaginary decomposition and the syzygy triples
// (p_k, q_k, r_k) with  p_k b_k + q_k b_{k+1} + r_k b_{k+2} = 0  explicit.

#pragma once

#include <galeroot/bivar_poly.hpp>

#include <complex>
#include <stdexcept>
#include <vector>

namespace galeroot {

enum class BasisKind {
    Power,
    FallingFactorial,
    RisingFactorial,
    BinomialCoefficient,
    AlternatingPower,
    AlternatingRisingFactorial,
};

const char* basis_name(BasisKind kind);
BasisKind basis_from_name(const std::string& name);

/// Thrown by operations that need the full complex-root machinery
/// (a (d+1)x(d-1) dual matrix) when d < 2.
class degenerate_degree_error : public std::invalid_argument {
public:
    explicit degenerate_degree_error(int d)
        : std::invalid_argument("degree " + std::to_string(d) +
                                " is too small for complex-root analysis (need d >= 2)") {}
};

struct BasisContext {
    BasisKind kind;
    int d;  // degree; d >= 0, complex-root operations need d >= 2

    BasisContext(BasisKind k, int degree) : kind(k), d(degree) {
        if (degree < 0) throw std::invalid_argument("negative degree");
    }
    void require_complex_machinery() const {
        if (d < 2) throw degenerate_degree_error(d);
    }
    bool operator==(const BasisContext&) const = default;
};

struct RationalComplex {
    Rational re, im;
};

/// A point of the complex plane with a non-real predicate driven by an
/// explicit tolerance (|y| > tol).
struct ComplexPoint {
    double x = 0.0;
    double y = 0.0;
    ComplexPoint() = default;
    ComplexPoint(double re, double im) : x(re), y(im) {}
    ComplexPoint(std::complex<double> z) : x(z.real()), y(z.imag()) {}
    std::complex<double> to_complex() const { return {x, y}; }
    bool non_real(double tol = 1e-12) const { return std::abs(y) > tol; }
};

/// b_i(z), as a product of linear factors (exact integer arithmetic is
/// deferred to basis_eval_exact; this is the float path).
std::complex<double> basis_eval(const BasisContext& ctx, int i, std::complex<double> z);

/// b_i(x + iy) with exact rational arithmetic; the binomial division by d!
/// happens after the factor product, so the value is exact.
RationalComplex basis_eval_exact(const BasisContext& ctx, int i, const Rational& x,
                                 const Rational& y);

/// b_i at a real rational point.
Rational basis_eval_real_exact(const BasisContext& ctx, int i, const Rational& x);

/// b_i(z) together with b_i'(z), accumulated by the product rule (stable
/// even at the roots of b_i, unlike the logarithmic derivative).
std::pair<std::complex<double>, std::complex<double>> basis_eval_deriv(const BasisContext& ctx,
                                                                       int i,
                                                                       std::complex<double> z);

/// R_i, I_i with R_i(x,y) + i I_i(x,y) = b_i(x+iy) as exact polynomials.
std::pair<BivarPoly, BivarPoly> basis_realimag(const BasisContext& ctx, int i);

struct SyzygyTriple {
    BivarPoly p, q, r;
};

/// The (p_k, q_k, r_k) table; 0 <= k <= d-2.
SyzygyTriple syzygy_triple(const BasisContext& ctx, int k);

/// Scalar evaluation of the same table at (x, y); cheaper than building
/// polynomials when scanning grids.
struct SyzygyValues {
    double p, q, r;
};
SyzygyValues syzygy_values(const BasisContext& ctx, int k, double x, double y);

/// Row i holds the power-basis coefficients of b_i; always invertible.
std::vector<std::vector<Rational>> to_power_matrix(const BasisContext& ctx);

/// Closed interval of the real line, possibly unbounded on either side.
struct RealInterval {
    bool lo_unbounded = false;
    bool hi_unbounded = false;
    Rational lo, hi;

    static RealInterval bounded(Rational a, Rational b) { return {false, false, std::move(a), std::move(b)}; }
    bool contains(const Rational& x) const {
        if (!lo_unbounded && x < lo) return false;
        if (!hi_unbounded && x > hi) return false;
        return true;
    }
    bool contains(double x) const;
};

/// The locus of possible real roots: all x with b_i(x) b_j(x) <= 0 for some
/// i != j, computed exactly from the rational roots of the basis elements
/// and sign tables between them.
std::vector<RealInterval> real_root_locus(const BasisContext& ctx);

namespace detail {
/// Linear factor offsets: b_i(z) = sign * (1/denom) * prod_t (z + offsets[t]).
struct FactorForm {
    std::vector<Rational> offsets;
    BigInt denom = 1;
    int sign = 1;
};
FactorForm factor_form(const BasisContext& ctx, int i);
}  // namespace detail

}  // namespace galeroot
