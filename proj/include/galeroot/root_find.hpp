// Numerical root computation for polynomials in any supported basis.
//
// Coefficients convert to the power basis through the exact rational
// change-of-basis matrix (floated only at the end), then an Aberth-style
// simultaneous iteration finds all roots at once.  Roots coming through
// the basis interface get a few guarded Newton steps against the
// basis-form evaluation to shake off conversion noise.

#pragma once

#include <galeroot/basis.hpp>

#include <complex>
#include <vector>

namespace galeroot {

struct PolynomialInBasis {
    BasisContext ctx;
    std::vector<Rational> coeffs;  // a_0..a_d

    PolynomialInBasis(BasisContext c, std::vector<Rational> a)
        : ctx(c), coeffs(std::move(a)) {
        if (static_cast<int>(coeffs.size()) != ctx.d + 1)
            throw std::invalid_argument("coefficient count does not match degree");
    }
};

/// Exact power-basis coefficients of sum a_i b_i.
std::vector<Rational> to_power_exact(const PolynomialInBasis& p);
/// Same, floated last.
std::vector<double> to_power(const PolynomialInBasis& p);

struct RootFindResult {
    std::vector<std::complex<double>> roots;  // multiset; zero roots included explicitly
    bool converged = true;
    int iterations = 0;
};

/// All complex roots of sum c_j z^j; leading/trailing zero coefficients are
/// stripped first (trailing zeros report z = 0 roots explicitly).
/// Non-convergence after the iteration cap is reported via the flag, never
/// silently dropped.
RootFindResult find_roots(const std::vector<double>& coeffs);

/// to_power + find_roots + Newton polish on the basis-form evaluation.
RootFindResult roots_in_basis(const PolynomialInBasis& p);

/// |f(z)| and the scale sum |c_j||z|^j for residual contracts.
std::pair<double, double> power_residual(const std::vector<double>& coeffs,
                                         std::complex<double> z);

/// f(z) and f'(z) for f = sum a_i b_i.
std::pair<std::complex<double>, std::complex<double>> basis_form_eval(
    const PolynomialInBasis& p, std::complex<double> z);

}  // namespace galeroot
