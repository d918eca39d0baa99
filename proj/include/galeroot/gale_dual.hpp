// Gale dual matrices of the basis-evaluation configuration.
//
// For a basis B of P_d, the 2x(d+1) matrix W(x,y) collects the real and
// imaginary parts of the b_i(x+iy).  A Gale dual of W is a (d+1)x(d-1)
// matrix annihilated by W; it can always be chosen banded, with column k
// holding (p_k, -q_k, r_k) in rows k, k+1, k+2.  Linear inequalities on
// the coefficients append rows to the dual; linear equations combine its
// columns.  We build the two equation patterns that come up for
// chromatic polynomials explicitly and fall back to a generic exact
// kernel computation otherwise (slower; degrees are not reduced).

#pragma once

#include <galeroot/basis.hpp>

#include <optional>
#include <vector>

namespace galeroot {

using PolyMatrix = std::vector<std::vector<BivarPoly>>;

struct GaleDual {
    BasisContext ctx;
    PolyMatrix entries;  // (d+1) x (d-1), three nonzero diagonals

    int rows() const { return ctx.d + 1; }
    int cols() const { return ctx.d - 1; }
};

struct LinearConstraint {
    enum class Kind { InequalityLE, InequalityLT, Equation };

    std::vector<Rational> lambda;  // length d+1, not all zero
    Kind kind = Kind::InequalityLE;

    bool is_inequality() const { return kind != Kind::Equation; }
    bool is_strict() const { return kind == Kind::InequalityLT; }
    void validate(int d) const;
};

/// A dual matrix extended by coefficient constraints.  Inequalities append
/// omega rows below the band; equations are realized as a column transform
/// of the band (the matrix `rows x cols` is fully materialized for the
/// sign machinery and for oracle checks).  eff_degree tracks translations
/// that absorb vanishing leading coefficients (a_0 = ... = a_{chi-1} = 0).
struct ExtendedDual {
    enum class Form {
        BandPlusRows,      // band + m omega rows; fast minor formulas apply
        ChromaticBinomial,
        AltPowerEquation,
        GenericEquation,
    };

    explicit ExtendedDual(BasisContext c) : ctx(c) {}

    BasisContext ctx;
    Form form = Form::BandPlusRows;
    int eff_degree = 0;  // d' (== ctx.d unless a translation dropped it)
    int n_cols = 0;
    PolyMatrix matrix;                    // (eff_degree + 1 + #ineq rows) x n_cols
    std::vector<LinearConstraint> ineqs;  // one omega row each, in order
    std::optional<PolyMatrix> column_transform;  // (d-1) x n_cols when equations present

    // parameters of the special equation forms (for the fast chromatic path)
    Rational chromatic_eps;
    int chi = 0;
    int kappa = 0;
    int alt_m = 0;

    int base_rows() const { return eff_degree + 1; }
    int total_rows() const { return base_rows() + static_cast<int>(ineqs.size()); }
    bool has_equations() const { return form != Form::BandPlusRows; }
};

/// The banded dual; requires d >= 2.
GaleDual build_gale_dual(const BasisContext& ctx);

/// Symbolically multiplies W by the banded dual and checks for the exact
/// zero matrix.
bool verify_duality(const BasisContext& ctx);
bool verify_duality(const BasisContext& ctx, const GaleDual& dual);

/// The real-case analogue: a (d+1) x d bidiagonal kernel basis of the row
/// vector (b_0(x), ..., b_d(x)).
std::vector<std::vector<Rational>> real_gale_dual(const BasisContext& ctx, const Rational& x);

/// Wraps a plain dual for constraint extension.
ExtendedDual extend_base(const GaleDual& dual);

/// Appends the omega row (-lambda_i p_i + lambda_{i+1} q_i - lambda_{i+2} r_i).
ExtendedDual extend_with_inequality(const ExtendedDual& dual, const LinearConstraint& c);
ExtendedDual extend_with_inequality(const GaleDual& dual, const LinearConstraint& c);

/// The omega row by itself.
std::vector<BivarPoly> omega_row(const BasisContext& ctx, const std::vector<Rational>& lambda);

/// Ehrhart s=0 inequality a_d <= a_0 + a_1, i.e. lambda = (-1,-1,0,...,0,1).
LinearConstraint ehrhart_s0_constraint(int d);

/// Chromatic-polynomial equation handling in the binomial basis: the
/// vanishing prefix a_0 = ... = a_{chi-1} = 0 drops the effective degree to
/// d' = d - chi after translating x -> x + chi, and the combined relation
/// sum a_i - (1/eps) a_d = 0 with eps = omega/d! merges the last two dual
/// columns.  chi = 0 is allowed (no vanishing prefix, no translation).
ExtendedDual chromatic_equation_dual(const BasisContext& ctx, int chi, const Rational& eps);

/// Alternating-power chromatic handling: kappa vanishing coefficients plus
/// the equation m a_d - a_{d-1} = 0, realized by replacing the last two
/// dual columns with the combination (0,...,0,g,h,m,1)^T.
ExtendedDual alt_power_equation_dual(const BasisContext& ctx, int kappa, int m);

/// Generic exact kernel path for arbitrary equations: the new columns are
/// Cramer-style combinations of the old ones with polynomial entries.
ExtendedDual generic_equation_dual(const BasisContext& ctx,
                                   const std::vector<LinearConstraint>& equations);

/// The extended primal rows annihilated by `dual.matrix` (base R/I rows of
/// the effective configuration plus one row per constraint); used by the
/// symbolic verification tests.
PolyMatrix extended_primal(const ExtendedDual& dual);

/// W_primal * dual.matrix == 0, symbolically.
bool verify_extended_duality(const ExtendedDual& dual);

}  // namespace galeroot
