#include <galeroot/determinant.hpp>

#include <galeroot/gale_dual.hpp>

#include <complex>
#include <stdexcept>

namespace galeroot {

namespace {

void check_pair(const BasisContext& ctx, int j, int k) {
    if (!(0 <= j && j < k && k <= ctx.d)) throw std::out_of_range("need 0 <= j < k <= d");
}

void check_pair_eff(int eff, int j, int k) {
    if (!(0 <= j && j < k && k <= eff)) throw std::out_of_range("need 0 <= j < k <= effective degree");
}

}  // namespace

ShiftedPoints shifted_points(int d, int j, int k) {
    if (!(0 <= j && j < k && k <= d)) throw std::out_of_range("need 0 <= j < k <= d");
    ShiftedPoints s;
    s.d = d;
    s.j = j;
    s.k = k;
    const Rational delta = Rational(d - 1 - k + j);
    for (int i = 1; i <= k - j; ++i) s.a.push_back(Rational(i) + delta / 2);
    s.shift = Rational(k + j - d - 1) / 2;
    return s;
}

DTable::DTable(const BasisContext& ctx, double x, double y) : DTable(ctx, ctx.d, x, y) {}

DTable::DTable(const BasisContext& ctx, int eff, double x, double y)
    : ctx_(ctx), eff_(eff), x_(x), y_(y) {
    if (eff < 2 || eff > ctx.d) throw degenerate_degree_error(eff);
    build();
}

void DTable::build() {
    const int e = eff_;
    p_.resize(e - 1);
    q_.resize(e - 1);
    r_.resize(e - 1);
    for (int t = 0; t <= e - 2; ++t) {
        auto v = syzygy_values(ctx_, t, x_, y_);
        p_[t] = v.p;
        q_[t] = v.q;
        r_[t] = v.r;
    }

    d_.assign((e + 1) * (e + 1), ScaledDouble{});
    scale_.assign((e + 1) * (e + 1), ScaledDouble{});
    for (int j = 0; j <= e - 1; ++j) {
        // D_{j,j+1} = 1, then the three-term step up to k = e
        ScaledDouble prevprev{};                      // D_{j,j}   = 0
        ScaledDouble prev = ScaledDouble::from(1.0);  // D_{j,j+1}
        ScaledDouble sprevprev{};
        ScaledDouble sprev = ScaledDouble::from(1.0);
        d_[idx(j, j + 1)] = prev;
        scale_[idx(j, j + 1)] = sprev;
        for (int t = j; t + 2 <= e; ++t) {
            ScaledDouble a = ScaledDouble::from(-q_[t]);
            // the prevprev term vanishes at t = j (D_{j,j} = 0)
            ScaledDouble b = t > j ? ScaledDouble::from(-p_[t] * r_[t - 1]) : ScaledDouble{};
            ScaledDouble cur = a * prev + b * prevprev;
            ScaledDouble scur = a.abs() * sprev + b.abs() * sprevprev;
            // keep the scale at least as large as the value itself
            if (scur.magnitude_le(cur.abs())) scur = cur.abs();
            d_[idx(j, t + 2)] = cur;
            scale_[idx(j, t + 2)] = scur;
            prevprev = prev;
            prev = cur;
            sprevprev = sprev;
            sprev = scur;
        }
    }

    pfx_p_.assign(e + 1, ScaledDouble::from(1.0));
    for (int j = 1; j <= e; ++j) pfx_p_[j] = pfx_p_[j - 1] * ScaledDouble::from(p_[j - 1]);
    sfx_r_.assign(e + 2, ScaledDouble::from(1.0));
    // sfx_r_[k] = r_{k-1} ... r_{e-2}; defined for 1 <= k <= e+1 (empty for k >= e)
    for (int k = e - 1; k >= 1; --k) sfx_r_[k] = sfx_r_[k + 1] * ScaledDouble::from(r_[k - 1]);
}

ScaledDouble DTable::d_value(int j, int k) const {
    if (j >= k) return ScaledDouble{};
    check_pair_eff(eff_, j, k);
    return d_[idx(j, k)];
}

ScaledDouble DTable::d_scale(int j, int k) const {
    if (j >= k) return ScaledDouble::from(1.0);
    check_pair_eff(eff_, j, k);
    return scale_[idx(j, k)];
}

ScaledDouble DTable::p_prefix(int j) const { return pfx_p_[j]; }
ScaledDouble DTable::r_suffix(int k) const { return sfx_r_[std::max(k, 0)]; }

ScaledDouble DTable::p_range(int a, int b) const {
    ScaledDouble v = ScaledDouble::from(1.0);
    for (int t = a; t <= b; ++t) v = v * ScaledDouble::from(p_[t]);
    return v;
}

ScaledDouble DTable::r_range(int a, int b) const {
    ScaledDouble v = ScaledDouble::from(1.0);
    for (int t = a; t <= b; ++t) v = v * ScaledDouble::from(r_[t]);
    return v;
}

ScaledDouble DTable::det_deleted(int j, int k) const {
    check_pair_eff(eff_, j, k);
    return p_prefix(j) * d_value(j, k) * r_suffix(k);
}

ScaledDouble DTable::minor(int j, int k, int l, int c) const {
    if (!(0 <= j && j < k && k < l && l <= eff_)) throw std::out_of_range("need 0 <= j < k < l <= d");
    if (c < 0 || c > eff_ - 2) throw std::out_of_range("column index out of range");
    if (c <= k - 1) {
        // p_0..p_{j-1} D_{j,c+1} p_{c+1}..p_{k-1} D_{k,l} r_{l-1}..r_{e-2}
        if (c + 1 <= j) return ScaledDouble{};
        return p_prefix(j) * d_value(j, c + 1) * p_range(c + 1, k - 1) * d_value(k, l) *
               r_suffix(l);
    }
    // p_0..p_{j-1} D_{j,k} r_{k-1}..r_{c-1} D_{c+1,l} r_{l-1}..r_{e-2}
    if (c + 1 >= l) return ScaledDouble{};
    return p_prefix(j) * d_value(j, k) * r_range(k - 1, c - 1) * d_value(c + 1, l) * r_suffix(l);
}

ScaledDouble DTable::minor_scale(int j, int k, int l, int c) const {
    if (c <= k - 1) {
        if (c + 1 <= j) return ScaledDouble{};
        return p_prefix(j).abs() * d_scale(j, c + 1) * p_range(c + 1, k - 1).abs() *
               d_scale(k, l) * r_suffix(l).abs();
    }
    if (c + 1 >= l) return ScaledDouble{};
    return p_prefix(j).abs() * d_scale(j, k) * r_range(k - 1, c - 1).abs() * d_scale(c + 1, l) *
           r_suffix(l).abs();
}

DPoly d_poly(const BasisContext& ctx, int j, int k) {
    check_pair(ctx, j, k);
    BivarPoly prevprev;                            // D_{j,j} = 0
    BivarPoly prev = BivarPoly::constant(1);       // D_{j,j+1}
    for (int t = j; t + 2 <= k; ++t) {
        auto syz_t = syzygy_triple(ctx, t);
        BivarPoly cur = (-syz_t.q) * prev;
        if (t > j) {
            auto syz_prev = syzygy_triple(ctx, t - 1);
            cur -= syz_t.p * syz_prev.r * prevprev;
        }
        prevprev = std::move(prev);
        prev = std::move(cur);
    }
    return {ctx, j, k, prev};
}

namespace {

void syzygy_values_ld(const BasisContext& ctx, int k, long double x, long double y,
                      long double& p, long double& q, long double& r) {
    const long double y2 = y * y;
    auto sq = [&](long double c) { return (x + c) * (x + c) + y2; };
    switch (ctx.kind) {
        case BasisKind::Power: p = sq(0); q = 2 * x; r = 1; return;
        case BasisKind::AlternatingPower: p = sq(0); q = -2 * x; r = 1; return;
        case BasisKind::FallingFactorial: p = sq(-k); q = 2 * (x - k) - 1; r = 1; return;
        case BasisKind::RisingFactorial: p = sq(k); q = 2 * (x + k) + 1; r = 1; return;
        case BasisKind::AlternatingRisingFactorial:
            p = sq(k);
            q = -(2 * (x + k) + 1);
            r = 1;
            return;
        case BasisKind::BinomialCoefficient:
            p = sq(-k);
            r = sq(static_cast<long double>(ctx.d - 1 - k));
            q = p + r - static_cast<long double>(ctx.d) * (ctx.d - 1);
            return;
    }
}

}  // namespace

ScaledDouble d_eval_scaled(const BasisContext& ctx, int j, int k, ComplexPoint z) {
    check_pair(ctx, j, k);
    if (k == j + 1) return ScaledDouble::from(1.0);
    // extended-precision recursion; falls back to the rescaled double path
    // when the values leave the long double range
    long double prevprev = 0.0L, prev = 1.0L;
    long double p = 0, q = 0, r = 0, r_prev = 0;
    bool ok = true;
    for (int t = j; t + 2 <= k; ++t) {
        syzygy_values_ld(ctx, t, z.x, z.y, p, q, r);
        long double cur = -q * prev;
        if (t > j) cur -= p * r_prev * prevprev;
        if (std::abs(cur) > 1e4000L) {
            ok = false;
            break;
        }
        prevprev = prev;
        prev = cur;
        r_prev = r;
    }
    if (ok) {
        int e = 0;
        long double mant = std::frexp(prev, &e);
        ScaledDouble s{static_cast<double>(mant), e};
        s.normalize();
        return s;
    }
    DTable table(ctx, std::max(k, 2), z.x, z.y);
    return table.d_value(j, k);
}

double d_eval(const BasisContext& ctx, int j, int k, ComplexPoint z) {
    return d_eval_scaled(ctx, j, k, z).to_double();
}

double d_closed_eval(const BasisContext& ctx, int j, int k, ComplexPoint z) {
    check_pair(ctx, j, k);
    if (std::abs(z.y) < 1e-8 * (1.0 + std::abs(z.x)))
        throw std::domain_error("closed-form evaluation refused near the real axis; use d_eval");
    const std::complex<long double> zz(z.x, z.y);
    const int n = k - j - 1;
    std::complex<long double> f = 1.0L;
    switch (ctx.kind) {
        case BasisKind::Power:
        case BasisKind::AlternatingPower:
            for (int t = 0; t < k - j; ++t) f *= zz;
            break;
        case BasisKind::FallingFactorial:
            for (int m = j; m <= k - 1; ++m) f *= zz - static_cast<long double>(m);
            break;
        case BasisKind::RisingFactorial:
        case BasisKind::AlternatingRisingFactorial:
            for (int m = j; m <= k - 1; ++m) f *= zz + static_cast<long double>(m);
            break;
        case BasisKind::BinomialCoefficient: {
            const std::complex<long double> zb = std::conj(zz);
            for (int m = j; m <= k - 1; ++m) f *= zz - static_cast<long double>(m);
            for (int m = j; m <= k - 1; ++m) f *= zb + static_cast<long double>(ctx.d - m);
            f /= static_cast<long double>(ctx.d);
            break;
        }
    }
    // D = sign * (f(z) - f(conj z)) / (z - conj z) = sign * Im f / y, where
    // the sign is (-1)^n for the four base kinds and +1 for the
    // alternating ones (their q flips sign, which cancels the (-1)^n).
    const bool alternating = ctx.kind == BasisKind::AlternatingPower ||
                             ctx.kind == BasisKind::AlternatingRisingFactorial;
    long double sign = alternating ? 1.0L : (n % 2 == 0 ? 1.0L : -1.0L);
    return static_cast<double>(sign * f.imag() / z.y);
}

double det_deleted(const BasisContext& ctx, int j, int k, ComplexPoint z) {
    check_pair(ctx, j, k);
    DTable table(ctx, z.x, z.y);
    return table.det_deleted(j, k).to_double();
}

double minor_eval(const BasisContext& ctx, int j, int k, int l, int c, ComplexPoint z) {
    DTable table(ctx, z.x, z.y);
    return table.minor(j, k, l, c).to_double();
}

std::vector<double> omega_values(const BasisContext& ctx, const std::vector<Rational>& lambda,
                                 double x, double y) {
    std::vector<double> w(ctx.d - 1);
    for (int i = 0; i <= ctx.d - 2; ++i) {
        auto v = syzygy_values(ctx, i, x, y);
        w[i] = -to_double(lambda[i]) * v.p + to_double(lambda[i + 1]) * v.q -
               to_double(lambda[i + 2]) * v.r;
    }
    return w;
}

ScaledDouble det_extended_scaled(const BasisContext& ctx, const DTable& table, int j, int k, int l,
                                 const std::vector<double>& omega, ScaledDouble* scale_out) {
    const int e = table.eff();
    ScaledDouble acc{};
    ScaledDouble scale{};
    for (int c = 0; c <= e - 2; ++c) {
        if (omega[c] == 0.0) continue;
        ScaledDouble term = table.minor(j, k, l, c) * ScaledDouble::from(omega[c]);
        ScaledDouble term_scale = table.minor_scale(j, k, l, c) * ScaledDouble::from(std::abs(omega[c]));
        if (c % 2 != 0) term.mant = -term.mant;
        acc = acc + term;
        scale = scale + term_scale;
    }
    if (e % 2 != 0) acc.mant = -acc.mant;
    if (scale.magnitude_le(acc.abs())) scale = acc.abs();
    if (scale_out) *scale_out = scale;
    return acc;
}

double det_extended(const BasisContext& ctx, int j, int k, int l,
                    const std::vector<Rational>& lambda, ComplexPoint z) {
    ctx.require_complex_machinery();
    DTable table(ctx, z.x, z.y);
    auto omega = omega_values(ctx, lambda, z.x, z.y);
    return det_extended_scaled(ctx, table, j, k, l, omega).to_double();
}

long leading_asymptote(const BasisContext& ctx, int j, int k) {
    if (ctx.kind != BasisKind::BinomialCoefficient)
        throw std::invalid_argument("leading asymptote applies to the binomial basis");
    check_pair(ctx, j, k);
    const int n = k - j - 1;
    return (n % 2 == 0 ? 1L : -1L) * static_cast<long>(k - j);
}

namespace {

template <typename Value>
Value chromatic_det_generic(int e, const Value& lambda_scalar, const Value& r_last,
                            const std::vector<Value>& minors) {
    // lambda sum_{c=0}^{e-3} (-1)^c M_c + (-1)^{e-2} (lambda - r_{e-2}) M_{e-2}
    Value acc = Value(0);
    for (int c = 0; c <= e - 3; ++c) {
        Value term = lambda_scalar * minors[c];
        if (c % 2 == 0) acc = acc + term;
        else acc = acc - term;
    }
    Value mu = lambda_scalar - r_last;
    Value last = mu * minors[e - 2];
    if ((e - 2) % 2 == 0) acc = acc + last;
    else acc = acc - last;
    return acc;
}

}  // namespace

double chromatic_det(const BasisContext& ctx, int chi, const Rational& eps, int i, int j, int k,
                     ComplexPoint z) {
    if (ctx.kind != BasisKind::BinomialCoefficient)
        throw std::invalid_argument("chromatic determinant needs the binomial basis");
    const int e = ctx.d - chi;
    if (e < 3) throw degenerate_degree_error(e);
    if (!(0 <= i && i < j && j < k && k <= e)) throw std::out_of_range("bad K for chromatic det");
    DTable table(ctx, e, z.x, z.y);
    const double lambda_scalar = to_double(eps) * ctx.d * (ctx.d - 1);
    std::vector<double> minors(e - 1);
    for (int c = 0; c <= e - 2; ++c) minors[c] = table.minor(i, j, k, c).to_double();
    double r_last = table.r(e - 2);
    return chromatic_det_generic<double>(e, lambda_scalar, r_last, minors);
}

SyzygyValuesExact syzygy_values_exact(const BasisContext& ctx, int k, const Rational& x,
                                      const Rational& y) {
    if (k < 0 || k > ctx.d - 2) throw std::out_of_range("syzygy index out of range");
    const Rational y2 = y * y;
    auto sq = [&](const Rational& c) {
        Rational s = x + c;
        return s * s + y2;
    };
    switch (ctx.kind) {
        case BasisKind::Power:
            return {sq(0), 2 * x, Rational(1)};
        case BasisKind::AlternatingPower:
            return {sq(0), -2 * x, Rational(1)};
        case BasisKind::FallingFactorial:
            return {sq(-k), 2 * (x - k) - 1, Rational(1)};
        case BasisKind::RisingFactorial:
            return {sq(k), 2 * (x + k) + 1, Rational(1)};
        case BasisKind::AlternatingRisingFactorial:
            return {sq(k), -(2 * (x + k) + 1), Rational(1)};
        case BasisKind::BinomialCoefficient: {
            Rational p = sq(-k);
            Rational r = sq(Rational(ctx.d - 1 - k));
            return {p, p + r - Rational(ctx.d) * Rational(ctx.d - 1), r};
        }
    }
    return {0, 0, 0};
}

Rational d_value_exact(const BasisContext& ctx, int j, int k, const Rational& x,
                       const Rational& y) {
    if (j >= k) return 0;
    check_pair(ctx, j, k);
    Rational prevprev = 0, prev = 1;
    for (int t = j; t + 2 <= k; ++t) {
        auto v = syzygy_values_exact(ctx, t, x, y);
        Rational cur = -v.q * prev;
        if (t > j) {
            auto vp = syzygy_values_exact(ctx, t - 1, x, y);
            cur -= v.p * vp.r * prevprev;
        }
        prevprev = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

Rational chromatic_det_exact(const BasisContext& ctx, int chi, const Rational& eps, int i, int j,
                             int k, const Rational& x, const Rational& y) {
    if (ctx.kind != BasisKind::BinomialCoefficient)
        throw std::invalid_argument("chromatic determinant needs the binomial basis");
    const int e = ctx.d - chi;
    if (e < 3) throw degenerate_degree_error(e);
    if (!(0 <= i && i < j && j < k && k <= e)) throw std::out_of_range("bad K for chromatic det");

    std::vector<Rational> p(e - 1), r(e - 1);
    for (int t = 0; t <= e - 2; ++t) {
        auto v = syzygy_values_exact(ctx, t, x, y);
        p[t] = v.p;
        r[t] = v.r;
    }
    auto dval = [&](int a, int b) { return d_value_exact(ctx, a, b, x, y); };
    auto prange = [&](int a, int b) {
        Rational v = 1;
        for (int t = a; t <= b; ++t) v *= p[t];
        return v;
    };
    auto rrange = [&](int a, int b) {
        Rational v = 1;
        for (int t = a; t <= b; ++t) v *= r[t];
        return v;
    };
    // two-case minor formula with K = {i,j,k}
    auto minor_exact = [&](int c) -> Rational {
        if (c <= j - 1) {
            if (c + 1 <= i) return 0;
            return prange(0, i - 1) * dval(i, c + 1) * prange(c + 1, j - 1) * dval(j, k) *
                   rrange(k - 1, e - 2);
        }
        if (c + 1 >= k) return 0;
        return prange(0, i - 1) * dval(i, j) * rrange(j - 1, c - 1) * dval(c + 1, k) *
               rrange(k - 1, e - 2);
    };
    std::vector<Rational> minors(e - 1);
    for (int c = 0; c <= e - 2; ++c) minors[c] = minor_exact(c);
    const Rational lambda_scalar = eps * Rational(ctx.d) * Rational(ctx.d - 1);
    return chromatic_det_generic<Rational>(e, lambda_scalar, r[e - 2], minors);
}

BivarPoly det_deleted_poly(const BasisContext& ctx, int j, int k) {
    check_pair(ctx, j, k);
    BivarPoly out = d_poly(ctx, j, k).poly;
    for (int t = 0; t <= j - 1; ++t) out = out * syzygy_triple(ctx, t).p;
    for (int t = k - 1; t <= ctx.d - 2; ++t) out = out * syzygy_triple(ctx, t).r;
    return out;
}

BivarPoly minor_poly(const BasisContext& ctx, int eff, int j, int k, int l, int c) {
    if (!(0 <= j && j < k && k < l && l <= eff)) throw std::out_of_range("need 0 <= j < k < l <= d");
    if (c < 0 || c > eff - 2) throw std::out_of_range("column index out of range");
    auto dval = [&](int a, int b) {
        return a >= b ? BivarPoly() : d_poly(ctx, a, b).poly;
    };
    auto prange = [&](int a, int b) {
        BivarPoly v = BivarPoly::constant(1);
        for (int t = a; t <= b; ++t) v = v * syzygy_triple(ctx, t).p;
        return v;
    };
    auto rrange = [&](int a, int b) {
        BivarPoly v = BivarPoly::constant(1);
        for (int t = a; t <= b; ++t) v = v * syzygy_triple(ctx, t).r;
        return v;
    };
    if (c <= k - 1) {
        if (c + 1 <= j) return BivarPoly();
        return prange(0, j - 1) * dval(j, c + 1) * prange(c + 1, k - 1) * dval(k, l) *
               rrange(l - 1, eff - 2);
    }
    if (c + 1 >= l) return BivarPoly();
    return prange(0, j - 1) * dval(j, k) * rrange(k - 1, c - 1) * dval(c + 1, l) *
           rrange(l - 1, eff - 2);
}

BivarPoly det_extended_poly(const BasisContext& ctx, const std::vector<Rational>& lambda, int j,
                            int k, int l) {
    ctx.require_complex_machinery();
    auto omegas = omega_row(ctx, lambda);
    BivarPoly acc;
    for (int c = 0; c <= ctx.d - 2; ++c) {
        if (omegas[c].is_zero()) continue;
        BivarPoly term = omegas[c] * minor_poly(ctx, ctx.d, j, k, l, c);
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    if (ctx.d % 2 != 0) acc = -acc;
    return acc;
}

BivarPoly chromatic_det_poly(const BasisContext& ctx, int chi, const Rational& eps, int i, int j,
                             int k) {
    if (ctx.kind != BasisKind::BinomialCoefficient)
        throw std::invalid_argument("chromatic determinant needs the binomial basis");
    const int e = ctx.d - chi;
    if (e < 3) throw degenerate_degree_error(e);
    if (!(0 <= i && i < j && j < k && k <= e)) throw std::out_of_range("bad K for chromatic det");
    const Rational lambda_scalar = eps * Rational(ctx.d) * Rational(ctx.d - 1);
    BivarPoly acc;
    for (int c = 0; c <= e - 3; ++c) {
        BivarPoly term = minor_poly(ctx, e, i, j, k, c) * lambda_scalar;
        acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    BivarPoly mu = BivarPoly::constant(lambda_scalar) - syzygy_triple(ctx, e - 2).r;
    BivarPoly last = mu * minor_poly(ctx, e, i, j, k, e - 2);
    acc = ((e - 2) % 2 == 0) ? acc + last : acc - last;
    return acc;
}

}  // namespace galeroot
