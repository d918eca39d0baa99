#include <galeroot/gale_dual.hpp>

#include <stdexcept>

namespace galeroot {

namespace {

PolyMatrix zero_matrix(int rows, int cols) {
    return PolyMatrix(rows, std::vector<BivarPoly>(cols));
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
    const int rows = static_cast<int>(a.size());
    const int inner = rows ? static_cast<int>(a[0].size()) : 0;
    const int cols = inner ? static_cast<int>(b[0].size()) : 0;
    PolyMatrix out = zero_matrix(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int t = 0; t < inner; ++t) {
            if (a[i][t].is_zero()) continue;
            for (int j = 0; j < cols; ++j) {
                if (b[t][j].is_zero()) continue;
                out[i][j] += a[i][t] * b[t][j];
            }
        }
    return out;
}

bool all_zero(const PolyMatrix& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

/// The banded dual of the effective configuration: rows 0..e, columns
/// 0..e-2, entries from ctx's syzygy table (which may carry the original
/// degree d even when e < d, as happens after a chromatic translation).
PolyMatrix banded_dual(const BasisContext& ctx, int e) {
    PolyMatrix m = zero_matrix(e + 1, e - 1);
    for (int k = 0; k <= e - 2; ++k) {
        auto t = syzygy_triple(ctx, k);
        m[k][k] = t.p;
        m[k + 1][k] = -t.q;
        m[k + 2][k] = t.r;
    }
    return m;
}

}  // namespace

void LinearConstraint::validate(int d) const {
    if (static_cast<int>(lambda.size()) != d + 1)
        throw std::invalid_argument("constraint has wrong length");
    for (const auto& l : lambda)
        if (l != 0) return;
    throw std::invalid_argument("constraint coefficients are all zero");
}

GaleDual build_gale_dual(const BasisContext& ctx) {
    ctx.require_complex_machinery();
    return {ctx, banded_dual(ctx, ctx.d)};
}

bool verify_duality(const BasisContext& ctx, const GaleDual& dual) {
    ctx.require_complex_machinery();
    PolyMatrix w = zero_matrix(2, ctx.d + 1);
    for (int i = 0; i <= ctx.d; ++i) {
        auto [re, im] = basis_realimag(ctx, i);
        w[0][i] = std::move(re);
        w[1][i] = std::move(im);
    }
    return all_zero(multiply(w, dual.entries));
}

bool verify_duality(const BasisContext& ctx) { return verify_duality(ctx, build_gale_dual(ctx)); }

std::vector<std::vector<Rational>> real_gale_dual(const BasisContext& ctx, const Rational& x) {
    const int d = ctx.d;
    std::vector<Rational> b(d + 1);
    for (int i = 0; i <= d; ++i) b[i] = basis_eval_real_exact(ctx, i, x);
    std::vector<std::vector<Rational>> m(d + 1, std::vector<Rational>(d, Rational(0)));
    for (int j = 0; j < d; ++j) {
        m[j][j] = -b[j + 1];
        m[j + 1][j] = b[j];
    }
    return m;
}

std::vector<BivarPoly> omega_row(const BasisContext& ctx, const std::vector<Rational>& lambda) {
    ctx.require_complex_machinery();
    if (static_cast<int>(lambda.size()) != ctx.d + 1)
        throw std::invalid_argument("lambda has wrong length");
    std::vector<BivarPoly> row(ctx.d - 1);
    for (int i = 0; i <= ctx.d - 2; ++i) {
        auto t = syzygy_triple(ctx, i);
        row[i] = t.p * (-lambda[i]) + t.q * lambda[i + 1] - t.r * lambda[i + 2];
    }
    return row;
}

ExtendedDual extend_base(const GaleDual& dual) {
    ExtendedDual out(dual.ctx);
    out.form = ExtendedDual::Form::BandPlusRows;
    out.eff_degree = dual.ctx.d;
    out.n_cols = dual.cols();
    out.matrix = dual.entries;
    return out;
}

ExtendedDual extend_with_inequality(const ExtendedDual& dual, const LinearConstraint& c) {
    if (!c.is_inequality()) throw std::invalid_argument("constraint kind mismatch: expected inequality");
    if (dual.has_equations())
        throw std::invalid_argument("mixing inequalities with equation-transformed duals is not supported");
    c.validate(dual.ctx.d);
    ExtendedDual out = dual;
    out.matrix.push_back(omega_row(dual.ctx, c.lambda));
    out.ineqs.push_back(c);
    return out;
}

ExtendedDual extend_with_inequality(const GaleDual& dual, const LinearConstraint& c) {
    return extend_with_inequality(extend_base(dual), c);
}

LinearConstraint ehrhart_s0_constraint(int d) {
    if (d < 2) throw degenerate_degree_error(d);
    LinearConstraint c;
    c.kind = LinearConstraint::Kind::InequalityLE;
    c.lambda.assign(d + 1, Rational(0));
    c.lambda[0] = -1;
    c.lambda[1] = -1;
    c.lambda[d] = 1;
    return c;
}

ExtendedDual chromatic_equation_dual(const BasisContext& ctx, int chi, const Rational& eps) {
    if (ctx.kind != BasisKind::BinomialCoefficient)
        throw std::invalid_argument("chromatic equation dual needs the binomial basis");
    if (chi < 0 || chi > ctx.d - 2) throw std::out_of_range("chi out of range");
    if (eps <= 0 || eps > 1) throw std::invalid_argument("eps must lie in (0, 1]");
    const int e = ctx.d - chi;  // effective degree after x -> x + chi

    // After the translation, the effective band carries the original-d
    // syzygies with indices 0..e-2.
    PolyMatrix band = banded_dual(ctx, e);

    // Column transform (e-1) x (e-2): v_1 - v_0, ..., v_{e-3} - v_0,
    // lambda v_{e-2} - mu v_0 with lambda = eps d(d-1), mu = lambda - r_{e-2}.
    const Rational lambda_scalar = eps * Rational(ctx.d) * Rational(ctx.d - 1);
    PolyMatrix transform = zero_matrix(e - 1, e - 2);
    for (int c = 0; c + 1 <= e - 3; ++c) {
        transform[c + 1][c] = BivarPoly::constant(1);
        transform[0][c] = BivarPoly::constant(-1);
    }
    if (e - 2 >= 1) {
        const BivarPoly mu =
            BivarPoly::constant(lambda_scalar) - syzygy_triple(ctx, e - 2).r;
        transform[e - 2][e - 3] = BivarPoly::constant(lambda_scalar);
        transform[0][e - 3] = -mu;
    }

    ExtendedDual out(ctx);
    out.form = ExtendedDual::Form::ChromaticBinomial;
    out.eff_degree = e;
    out.n_cols = e - 2;
    out.matrix = multiply(band, transform);
    out.column_transform = std::move(transform);
    out.chromatic_eps = eps;
    out.chi = chi;
    return out;
}

ExtendedDual alt_power_equation_dual(const BasisContext& ctx, int kappa, int m) {
    if (ctx.kind != BasisKind::AlternatingPower)
        throw std::invalid_argument("alt-power equation dual needs the alternating power basis");
    if (kappa < 0 || kappa > ctx.d - 2) throw std::out_of_range("kappa out of range");
    const int e = ctx.d - kappa;
    if (e < 3) throw degenerate_degree_error(e);

    // p, q, r do not depend on k here, so the effective band is just the
    // degree-e alternating-power dual.
    const BasisContext eff(BasisKind::AlternatingPower, e);
    PolyMatrix band = banded_dual(eff, e);

    // Replace the last two columns by (m - 2x) v_{e-3} + v_{e-2}, which the
    // appended primal row (0,...,0,-1,m) annihilates.  The combined column
    // reads (0,...,0,g,h,m,1)^T.
    PolyMatrix transform = zero_matrix(e - 1, e - 2);
    for (int c = 0; c <= e - 4; ++c) transform[c][c] = BivarPoly::constant(1);
    const BivarPoly m_minus_2x = BivarPoly::constant(m) - BivarPoly::var_x() * Rational(2);
    transform[e - 3][e - 3] = m_minus_2x;
    transform[e - 2][e - 3] = BivarPoly::constant(1);

    ExtendedDual out(ctx);
    out.form = ExtendedDual::Form::AltPowerEquation;
    out.eff_degree = e;
    out.n_cols = e - 2;
    out.matrix = multiply(band, transform);
    out.column_transform = std::move(transform);
    out.kappa = kappa;
    out.alt_m = m;
    return out;
}

namespace {

/// Cofactor determinant of a small polynomial matrix.
BivarPoly poly_det(const PolyMatrix& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return BivarPoly::constant(1);
    if (n == 1) return m[0][0];
    BivarPoly acc;
    for (int j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix sub(n - 1, std::vector<BivarPoly>(n - 1));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        BivarPoly term = m[0][j] * poly_det(sub);
        if (j % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

}  // namespace

ExtendedDual generic_equation_dual(const BasisContext& ctx,
                                   const std::vector<LinearConstraint>& equations) {
    ctx.require_complex_machinery();
    const int m = static_cast<int>(equations.size());
    const int cols = ctx.d - 1;
    if (m == 0) throw std::invalid_argument("no equations given");
    if (m >= cols) throw std::invalid_argument("too many equations for this degree");

    PolyMatrix omega(m);
    for (int t = 0; t < m; ++t) {
        const auto& eq = equations[t];
        if (eq.kind != LinearConstraint::Kind::Equation)
            throw std::invalid_argument("constraint kind mismatch: expected equation");
        eq.validate(ctx.d);
        omega[t] = omega_row(ctx, eq.lambda);
    }

    // Find m pivot columns with a symbolically nonzero m x m minor.
    std::vector<int> pivots;
    {
        std::vector<int> comb(m);
        for (int t = 0; t < m; ++t) comb[t] = t;
        while (true) {
            PolyMatrix sq(m, std::vector<BivarPoly>(m));
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c) sq[r][c] = omega[r][comb[c]];
            if (!poly_det(sq).is_zero()) {
                pivots = comb;
                break;
            }
            int t = m - 1;
            while (t >= 0 && comb[t] == cols - m + t) --t;
            if (t < 0) throw std::invalid_argument("equation rows are symbolically dependent");
            ++comb[t];
            for (int s = t + 1; s < m; ++s) comb[s] = comb[s - 1] + 1;
        }
    }

    // One kernel column per free index f: entries at the pivots solve
    // P x = -omega_f by Cramer's rule scaled by det P, and the entry at f
    // is det P itself, so everything stays polynomial.
    PolyMatrix pivot_sq(m, std::vector<BivarPoly>(m));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) pivot_sq[r][c] = omega[r][pivots[c]];
    const BivarPoly det_p = poly_det(pivot_sq);

    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;

    PolyMatrix transform = zero_matrix(cols, cols - m);
    int out_col = 0;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        for (int c = 0; c < m; ++c) {
            // Cramer: x_c * det P = det(P with column c replaced by -omega_f)
            PolyMatrix rep = pivot_sq;
            for (int r = 0; r < m; ++r) rep[r][c] = -omega[r][f];
            transform[pivots[c]][out_col] = poly_det(rep);
        }
        transform[f][out_col] = det_p;
        ++out_col;
    }

    ExtendedDual out(ctx);
    out.form = ExtendedDual::Form::GenericEquation;
    out.eff_degree = ctx.d;
    out.n_cols = cols - m;
    out.matrix = multiply(banded_dual(ctx, ctx.d), transform);
    out.column_transform = std::move(transform);
    for (const auto& eq : equations) out.ineqs.push_back(eq);  // kept for the primal check
    return out;
}

PolyMatrix extended_primal(const ExtendedDual& dual) {
    const int e = dual.eff_degree;
    PolyMatrix primal;
    auto realimag_rows = [&](const BasisContext& basis_ctx) {
        std::vector<BivarPoly> re_row(dual.total_rows()), im_row(dual.total_rows());
        for (int i = 0; i <= e; ++i) {
            auto [re, im] = basis_realimag(basis_ctx, i);
            re_row[i] = std::move(re);
            im_row[i] = std::move(im);
        }
        primal.push_back(std::move(re_row));
        primal.push_back(std::move(im_row));
    };

    switch (dual.form) {
        case ExtendedDual::Form::BandPlusRows: {
            realimag_rows(dual.ctx);
            // one primal row per inequality: (lambda, slack unit)
            const int m = static_cast<int>(dual.ineqs.size());
            for (int t = 0; t < m; ++t) {
                std::vector<BivarPoly> row(dual.total_rows());
                for (int i = 0; i <= e; ++i)
                    row[i] = BivarPoly::constant(dual.ineqs[t].lambda[i]);
                row[e + 1 + t] = BivarPoly::constant(1);
                primal.push_back(std::move(row));
            }
            break;
        }
        case ExtendedDual::Form::ChromaticBinomial: {
            // effective basis after translation: b_i = C(z+d-i, d), 0 <= i <= e
            realimag_rows(dual.ctx);
            std::vector<BivarPoly> row(dual.total_rows());
            for (int i = 0; i <= e; ++i) row[i] = BivarPoly::constant(1);
            row[e] = BivarPoly::constant(Rational(1) - Rational(1) / dual.chromatic_eps);
            primal.push_back(std::move(row));
            break;
        }
        case ExtendedDual::Form::AltPowerEquation: {
            realimag_rows(BasisContext(BasisKind::AlternatingPower, e));
            std::vector<BivarPoly> row(dual.total_rows());
            row[e - 1] = BivarPoly::constant(-1);
            row[e] = BivarPoly::constant(dual.alt_m);
            primal.push_back(std::move(row));
            break;
        }
        case ExtendedDual::Form::GenericEquation: {
            realimag_rows(dual.ctx);
            for (const auto& eq : dual.ineqs) {
                std::vector<BivarPoly> row(dual.total_rows());
                for (int i = 0; i <= e; ++i) row[i] = BivarPoly::constant(eq.lambda[i]);
                primal.push_back(std::move(row));
            }
            break;
        }
    }
    return primal;
}

bool verify_extended_duality(const ExtendedDual& dual) {
    return all_zero(multiply(extended_primal(dual), dual.matrix));
}

}  // namespace galeroot
