#include <galeroot/root_locus.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace galeroot {

namespace {

constexpr double kRealAxisTol = 1e-12;

void require_non_real(ComplexPoint z) {
    if (!z.non_real(kRealAxisTol))
        throw std::domain_error("real-axis point; use real_root_locus for real roots");
}

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

struct Vec2 {
    double x, y;
    double norm() const { return std::hypot(x, y); }
};

double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

}  // namespace

int sign_with_tolerance(const ScaledDouble& value, const ScaledDouble& scale) {
    ScaledDouble threshold =
        ScaledDouble::from(kSignTolAbs) + scale.abs() * ScaledDouble::from(kSignTolRel);
    if (value.abs().magnitude_le(threshold)) return 0;
    return value.sign();
}

SignSet sigma_triple(const DTable& table, int i, int j, int k) {
    SignSet set;
    set.insert(parity_sign(i) * sign_with_tolerance(table.d_value(j, k), table.d_scale(j, k)));
    set.insert(parity_sign(j + 1) * sign_with_tolerance(table.d_value(i, k), table.d_scale(i, k)));
    set.insert(parity_sign(k) * sign_with_tolerance(table.d_value(i, j), table.d_scale(i, j)));
    return set;
}

SignSet sigma_triple(const BasisContext& ctx, int i, int j, int k, ComplexPoint z) {
    ctx.require_complex_machinery();
    if (!(0 <= i && i < j && j < k && k <= ctx.d)) throw std::out_of_range("need 0 <= i < j < k <= d");
    require_non_real(z);
    DTable table(ctx, z.x, z.y);
    return sigma_triple(table, i, j, k);
}

bool in_S_ijk(const BasisContext& ctx, int i, int j, int k, ComplexPoint z) {
    return !sigma_triple(ctx, i, j, k, z).contains_plus_minus();
}

bool excluded(const BasisContext& ctx, ComplexPoint z, ExclusionHint* hint) {
    ctx.require_complex_machinery();
    require_non_real(z);
    DTable table(ctx, z.x, z.y);
    if (hint && hint->valid()) {
        if (!sigma_triple(table, hint->i, hint->j, hint->k).contains_plus_minus()) return false;
    }
    const int d = ctx.d;
    for (int i = 0; i <= d - 2; ++i)
        for (int j = i + 1; j <= d - 1; ++j)
            for (int k = j + 1; k <= d; ++k) {
                if (!sigma_triple(table, i, j, k).contains_plus_minus()) {
                    if (hint) *hint = {i, j, k};
                    return false;
                }
            }
    return true;
}

std::optional<std::vector<double>> certificate(const BasisContext& ctx, ComplexPoint z) {
    ctx.require_complex_machinery();
    require_non_real(z);
    const int d = ctx.d;
    std::vector<Vec2> w(d + 1);
    for (int i = 0; i <= d; ++i) {
        auto v = basis_eval(ctx, i, z.to_complex());
        w[i] = {v.real(), v.imag()};
    }

    constexpr double kResidualTol = 1e-9;
    auto residual_ok = [&](const std::vector<double>& a) {
        double fx = 0, fy = 0, bound = 0;
        for (int i = 0; i <= d; ++i) {
            fx += a[i] * w[i].x;
            fy += a[i] * w[i].y;
            bound += a[i] * w[i].norm();
        }
        return std::hypot(fx, fy) <= kResidualTol * bound && bound > 0;
    };

    // pair circuits first: two antiparallel vectors
    constexpr double kAntiparallelTol = 1e-9;
    for (int i = 0; i <= d - 1; ++i)
        for (int j = i + 1; j <= d; ++j) {
            double ni = w[i].norm(), nj = w[j].norm();
            if (ni == 0 || nj == 0) continue;
            if (dot(w[i], w[j]) >= 0) continue;
            if (std::abs(cross(w[i], w[j])) > kAntiparallelTol * ni * nj) continue;
            std::vector<double> a(d + 1, 0.0);
            a[i] = nj;
            a[j] = ni;
            if (residual_ok(a)) return a;
        }

    // triple circuits: solve w_i a_i + w_j a_j = -w_k with a_k = 1
    for (int i = 0; i <= d - 2; ++i)
        for (int j = i + 1; j <= d - 1; ++j) {
            double det = cross(w[i], w[j]);
            double scale = w[i].norm() * w[j].norm();
            if (scale == 0 || std::abs(det) <= 1e-12 * scale) continue;
            for (int k = j + 1; k <= d; ++k) {
                Vec2 rhs{-w[k].x, -w[k].y};
                double ai = cross(rhs, w[j]) / det;
                double aj = cross(w[i], rhs) / det;
                if (ai < 0 || aj < 0) continue;
                std::vector<double> a(d + 1, 0.0);
                a[i] = ai;
                a[j] = aj;
                a[k] = 1.0;
                if (residual_ok(a)) return a;
            }
        }
    return std::nullopt;
}

OvalMembership angle_sum(const BasisContext& ctx, int j, int k, ComplexPoint z) {
    if (ctx.kind != BasisKind::BinomialCoefficient)
        throw std::invalid_argument("angle sums apply to the binomial basis");
    if (!(0 <= j && j < k && k <= ctx.d)) throw std::out_of_range("need 0 <= j < k <= d");
    auto pts = shifted_points(ctx.d, j, k);
    const double xs = z.x - to_double(pts.shift);
    const double ys = std::abs(z.y);  // conjugation symmetry

    // Kahan-compensated sum of the viewing angles of [-a_i, a_i]
    double sum = 0.0, comp = 0.0;
    for (const auto& aq : pts.a) {
        double a = to_double(aq);
        double alpha = std::atan2(ys, xs - a) - std::atan2(ys, xs + a);
        double y_ = alpha - comp;
        double t = sum + y_;
        comp = (t - sum) - y_;
        sum = t;
    }
    OvalMembership m;
    m.angle_sum = sum;
    int l = static_cast<int>(std::floor(sum / M_PI));
    m.oval_index = std::clamp(l, 0, k - j - 1);
    return m;
}

bool in_outermost_closure(const BasisContext& ctx, ComplexPoint z, double tol) {
    require_non_real(z);
    return angle_sum(ctx, 0, ctx.d, z).angle_sum >= M_PI - tol;
}

std::vector<Circle> limiting_circles(int d, int j, int k) {
    if (k - j < 2) throw std::invalid_argument("limiting circles need k - j >= 2");
    std::vector<Circle> out;
    const double cx = -static_cast<double>(d + 1 - k - j) / 2.0;
    for (int l = 1; l <= k - j - 1; ++l) {
        double theta = M_PI * l / (k - j);
        double s = std::sin(theta), c = std::cos(theta);
        out.push_back({{cx, -(d / 2.0) * (c / s)}, d / (2.0 * s)});
    }
    return out;
}

// ---- constrained exclusion ----

ConstraintEvaluator::ConstraintEvaluator(const ExtendedDual& dual, ComplexPoint z)
    : dual_(dual), z_(z), table_(dual.ctx, dual.eff_degree, z.x, z.y) {
    if (dual.form == ExtendedDual::Form::BandPlusRows) {
        for (const auto& c : dual.ineqs)
            omega_.push_back(omega_values(dual.ctx, c.lambda, z.x, z.y));
    } else {
        dense_rows_.resize(dual.matrix.size());
        for (std::size_t r = 0; r < dual.matrix.size(); ++r) {
            dense_rows_[r].resize(dual.n_cols);
            for (int c = 0; c < dual.n_cols; ++c)
                dense_rows_[r][c] = dual.matrix[r][c].eval_f(z.x, z.y);
        }
    }
}

SignSet ConstraintEvaluator::sigma_band_rows(const std::vector<int>& J) const {
    const int e = dual_.eff_degree;
    SignSet set;
    std::vector<int> base_in_j;
    std::vector<int> ineq_in_j;
    for (int ji : J) (ji <= e ? base_in_j : ineq_in_j).push_back(ji);
    const int m = static_cast<int>(dual_.ineqs.size());

    for (std::size_t pos = 0; pos < J.size(); ++pos) {
        const int ji = J[pos];
        const int pref = parity_sign(ji + static_cast<int>(pos));
        if (ji <= e) {
            // deleted rows: the other base rows in J and all ineq rows in J;
            // any ineq row NOT in J stays in the matrix.
            std::vector<int> others;
            for (int b : base_in_j)
                if (b != ji) others.push_back(b);
            std::vector<int> retained;
            for (int t = 0; t < m; ++t)
                if (std::find(ineq_in_j.begin(), ineq_in_j.end(), e + 1 + t) == ineq_in_j.end())
                    retained.push_back(t);
            if (retained.empty() && others.size() == 2) {
                ScaledDouble v = table_.det_deleted(others[0], others[1]);
                ScaledDouble s = table_.p_prefix(others[0]).abs() *
                                 table_.d_scale(others[0], others[1]) *
                                 table_.r_suffix(others[1]).abs();
                set.insert(pref * sign_with_tolerance(v, s));
            } else if (retained.size() == 1 && others.size() == 3) {
                ScaledDouble s;
                ScaledDouble v = det_extended_scaled(dual_.ctx, table_, others[0], others[1],
                                                     others[2], omega_[retained[0]], &s);
                set.insert(pref * sign_with_tolerance(v, s));
            } else {
                throw std::invalid_argument("unsupported index set for banded sigma");
            }
        } else {
            // an inequality row: all three base rows of J are deleted and this
            // omega row is retained as the bottom row.
            if (base_in_j.size() != 3)
                throw std::invalid_argument("unsupported index set for banded sigma");
            const int t = ji - (e + 1);
            ScaledDouble s;
            ScaledDouble v = det_extended_scaled(dual_.ctx, table_, base_in_j[0], base_in_j[1],
                                                 base_in_j[2], omega_[t], &s);
            set.insert(pref * sign_with_tolerance(v, s));
        }
    }
    return set;
}

std::pair<ScaledDouble, ScaledDouble> ConstraintEvaluator::dense_det_without(
    const std::vector<int>& deleted) const {
    const int total = static_cast<int>(dense_rows_.size());
    const int n = dual_.n_cols;
    std::vector<std::vector<double>> m;
    m.reserve(n);
    for (int r = 0; r < total; ++r) {
        if (std::find(deleted.begin(), deleted.end(), r) != deleted.end()) continue;
        m.push_back(dense_rows_[r]);
    }
    if (static_cast<int>(m.size()) != n) throw std::logic_error("dense submatrix is not square");

    // Hadamard bound as the scale estimate
    ScaledDouble scale = ScaledDouble::from(1.0);
    for (int r = 0; r < n; ++r) {
        double norm = 0;
        for (int c = 0; c < n; ++c) norm += m[r][c] * m[r][c];
        scale = scale * ScaledDouble::from(std::sqrt(norm));
    }

    ScaledDouble det = ScaledDouble::from(1.0);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (m[piv][col] == 0.0) return {ScaledDouble{}, scale};
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det.mant = -det.mant;
        }
        det = det * ScaledDouble::from(m[col][col]);
        for (int r = col + 1; r < n; ++r) {
            double f = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return {det, scale};
}

SignSet ConstraintEvaluator::sigma_dense(const std::vector<int>& J) const {
    SignSet set;
    for (std::size_t pos = 0; pos < J.size(); ++pos) {
        std::vector<int> deleted;
        for (std::size_t t = 0; t < J.size(); ++t)
            if (t != pos) deleted.push_back(J[t]);
        auto [det, scale] = dense_det_without(deleted);
        set.insert(parity_sign(J[pos] + static_cast<int>(pos)) * sign_with_tolerance(det, scale));
    }
    return set;
}

SignSet ConstraintEvaluator::sigma(const std::vector<int>& J) const {
    std::vector<int> sorted = J;
    std::sort(sorted.begin(), sorted.end());
    if (dual_.form == ExtendedDual::Form::BandPlusRows) return sigma_band_rows(sorted);
    return sigma_dense(sorted);
}

bool ConstraintEvaluator::excluded(const ConstraintOptions& opts) const {
    const int e = dual_.eff_degree;
    if (dual_.form == ExtendedDual::Form::BandPlusRows) {
        const int m = static_cast<int>(dual_.ineqs.size());
        std::vector<int> J;
        for (int i = 0; i <= e - 2; ++i)
            for (int j = i + 1; j <= e - 1; ++j)
                for (int k = j + 1; k <= e; ++k) {
                    J = {i, j, k};
                    for (int t = 0; t < m; ++t) J.push_back(e + 1 + t);
                    if (!sigma_band_rows(J).contains_plus_minus()) return false;
                }
        if (opts.weak_inequalities && m == 1) {
            // hyperplanes through the new row: J is any 4 base rows
            for (int i = 0; i <= e - 3; ++i)
                for (int j = i + 1; j <= e - 2; ++j)
                    for (int k = j + 1; k <= e - 1; ++k)
                        for (int l = k + 1; l <= e; ++l) {
                            J = {i, j, k, l};
                            if (!sigma_band_rows(J).contains_plus_minus()) return false;
                        }
        } else if (opts.weak_inequalities && m > 1) {
            throw std::invalid_argument("weak variant implemented for a single inequality only");
        }
        return true;
    }

    // equation-transformed duals: |J| = rows - cols + 1
    const int rows = dual_.total_rows();
    const int size_j = rows - dual_.n_cols + 1;
    std::vector<int> comb(size_j);
    for (int t = 0; t < size_j; ++t) comb[t] = t;
    while (true) {
        if (!sigma_dense(comb).contains_plus_minus()) return false;
        int t = size_j - 1;
        while (t >= 0 && comb[t] == rows - size_j + t) --t;
        if (t < 0) break;
        ++comb[t];
        for (int s = t + 1; s < size_j; ++s) comb[s] = comb[s - 1] + 1;
    }
    return true;
}

SignSet sigma_quad(const ExtendedDual& dual, const std::vector<int>& J, ComplexPoint z) {
    require_non_real(z);
    return ConstraintEvaluator(dual, z).sigma(J);
}

bool excluded_with_constraints(const ExtendedDual& dual, ComplexPoint z,
                               const ConstraintOptions& opts) {
    require_non_real(z);
    return ConstraintEvaluator(dual, z).excluded(opts);
}

bool power_sector_excluded(int d, ComplexPoint z) {
    if (d < 1) throw std::invalid_argument("need d >= 1");
    if (z.x == 0.0 && z.y == 0.0) throw std::domain_error("sector test undefined at z = 0");
    return std::abs(std::atan2(z.y, z.x)) < M_PI / d;
}

bool alt_power_sector(int d, int kappa, ComplexPoint z) {
    if (kappa < 0 || kappa > d - 1) throw std::out_of_range("kappa out of range");
    if (z.x == 0.0 && z.y == 0.0) throw std::domain_error("sector test undefined at z = 0");
    const int e = d - kappa;
    return std::abs(std::atan2(z.y, z.x)) > (1.0 - 1.0 / e) * M_PI;
}

bool cone_order_check(const BasisContext& ctx, ComplexPoint z) {
    if (ctx.kind != BasisKind::BinomialCoefficient)
        throw std::invalid_argument("cone order check applies to the binomial basis");
    require_non_real(z);
    if (angle_sum(ctx, 0, ctx.d, z).angle_sum >= M_PI - 1e-9)
        throw std::invalid_argument("cone order check needs a point outside the outermost oval");

    // Unwrapped arguments of the primal vectors; consecutive vectors are
    // never antipodal here, so nearest-branch unwrapping is well defined.
    std::vector<double> theta(ctx.d + 1);
    for (int j = 0; j <= ctx.d; ++j) {
        auto w = basis_eval(ctx, j, z.to_complex());
        double t = std::atan2(w.imag(), w.real());
        if (j > 0) {
            while (t - theta[j - 1] > M_PI) t -= 2 * M_PI;
            while (t - theta[j - 1] < -M_PI) t += 2 * M_PI;
        }
        theta[j] = t;
    }
    bool increasing = true, decreasing = true;
    for (int j = 0; j < ctx.d; ++j) {
        if (theta[j + 1] <= theta[j]) increasing = false;
        if (theta[j + 1] >= theta[j]) decreasing = false;
    }
    return (increasing || decreasing) && std::abs(theta[ctx.d] - theta[0]) < M_PI;
}

double primal_dot(const BasisContext& ctx, int j, int k, ComplexPoint z) {
    auto wj = basis_eval(ctx, j, z.to_complex());
    auto wk = basis_eval(ctx, k, z.to_complex());
    return wj.real() * wk.real() + wj.imag() * wk.imag();
}

}  // namespace galeroot
