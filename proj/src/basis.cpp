#include <galeroot/basis.hpp>

#include <algorithm>
#include <set>

namespace galeroot {

const char* basis_name(BasisKind kind) {
    switch (kind) {
        case BasisKind::Power: return "power";
        case BasisKind::FallingFactorial: return "falling";
        case BasisKind::RisingFactorial: return "rising";
        case BasisKind::BinomialCoefficient: return "binomial";
        case BasisKind::AlternatingPower: return "alt-power";
        case BasisKind::AlternatingRisingFactorial: return "alt-rising";
    }
    return "?";
}

BasisKind basis_from_name(const std::string& name) {
    if (name == "power") return BasisKind::Power;
    if (name == "falling") return BasisKind::FallingFactorial;
    if (name == "rising") return BasisKind::RisingFactorial;
    if (name == "binomial") return BasisKind::BinomialCoefficient;
    if (name == "alt-power") return BasisKind::AlternatingPower;
    if (name == "alt-rising") return BasisKind::AlternatingRisingFactorial;
    throw std::invalid_argument("unknown basis: " + name);
}

namespace {

void check_index(const BasisContext& ctx, int i) {
    if (i < 0 || i > ctx.d) throw std::out_of_range("basis index out of range");
}

bool is_alternating(BasisKind kind) {
    return kind == BasisKind::AlternatingPower || kind == BasisKind::AlternatingRisingFactorial;
}

int alternating_sign(const BasisContext& ctx, int i) {
    if (!is_alternating(ctx.kind)) return 1;
    return ((ctx.d - i) % 2 == 0) ? 1 : -1;
}

}  // namespace

namespace detail {

FactorForm factor_form(const BasisContext& ctx, int i) {
    check_index(ctx, i);
    FactorForm form;
    form.sign = alternating_sign(ctx, i);
    switch (ctx.kind) {
        case BasisKind::Power:
        case BasisKind::AlternatingPower:
            form.offsets.assign(i, Rational(0));
            break;
        case BasisKind::FallingFactorial:
            for (int t = 0; t < i; ++t) form.offsets.push_back(Rational(-t));
            break;
        case BasisKind::RisingFactorial:
        case BasisKind::AlternatingRisingFactorial:
            for (int t = 0; t < i; ++t) form.offsets.push_back(Rational(t));
            break;
        case BasisKind::BinomialCoefficient:
            // C(z+d-i, d) = (z+d-i)(z+d-i-1)...(z-i+1) / d!
            for (int t = 0; t < ctx.d; ++t) form.offsets.push_back(Rational(ctx.d - i - t));
            form.denom = factorial(static_cast<unsigned>(ctx.d));
            break;
    }
    return form;
}

}  // namespace detail

std::complex<double> basis_eval(const BasisContext& ctx, int i, std::complex<double> z) {
    auto form = detail::factor_form(ctx, i);
    std::complex<double> v = 1.0;
    for (const auto& c : form.offsets) v *= z + to_double(c);
    v *= static_cast<double>(form.sign);
    if (form.denom != 1) v /= BigInt(form.denom).convert_to<double>();
    return v;
}

RationalComplex basis_eval_exact(const BasisContext& ctx, int i, const Rational& x,
                                 const Rational& y) {
    auto form = detail::factor_form(ctx, i);
    Rational re = form.sign, im = 0;
    for (const auto& c : form.offsets) {
        // (re + i im) * ((x + c) + i y)
        Rational a = x + c;
        Rational nre = re * a - im * y;
        Rational nim = re * y + im * a;
        re = std::move(nre);
        im = std::move(nim);
    }
    if (form.denom != 1) {
        Rational den(form.denom);
        re /= den;
        im /= den;
    }
    return {re, im};
}

Rational basis_eval_real_exact(const BasisContext& ctx, int i, const Rational& x) {
    auto form = detail::factor_form(ctx, i);
    Rational v = form.sign;
    for (const auto& c : form.offsets) v *= x + c;
    if (form.denom != 1) v /= Rational(form.denom);
    return v;
}

std::pair<std::complex<double>, std::complex<double>> basis_eval_deriv(const BasisContext& ctx,
                                                                       int i,
                                                                       std::complex<double> z) {
    auto form = detail::factor_form(ctx, i);
    std::complex<double> v = 1.0, dv = 0.0;
    for (const auto& c : form.offsets) {
        std::complex<double> f = z + to_double(c);
        dv = dv * f + v;
        v *= f;
    }
    double scale = static_cast<double>(form.sign);
    if (form.denom != 1) scale /= BigInt(form.denom).convert_to<double>();
    return {v * scale, dv * scale};
}

std::pair<BivarPoly, BivarPoly> basis_realimag(const BasisContext& ctx, int i) {
    auto form = detail::factor_form(ctx, i);
    BivarPoly re = BivarPoly::constant(form.sign);
    BivarPoly im;
    const BivarPoly x = BivarPoly::var_x();
    const BivarPoly y = BivarPoly::var_y();
    for (const auto& c : form.offsets) {
        BivarPoly a = x + BivarPoly::constant(c);
        BivarPoly nre = re * a - im * y;
        BivarPoly nim = re * y + im * a;
        re = std::move(nre);
        im = std::move(nim);
    }
    if (form.denom != 1) {
        Rational den(form.denom);
        re = re / den;
        im = im / den;
    }
    return {re, im};
}

SyzygyTriple syzygy_triple(const BasisContext& ctx, int k) {
    if (k < 0 || k > ctx.d - 2) throw std::out_of_range("syzygy index out of range");
    const BivarPoly x = BivarPoly::var_x();
    const BivarPoly y = BivarPoly::var_y();
    const BivarPoly y2 = y * y;
    auto sq_shift = [&](const Rational& c) {
        // (x + c)^2 + y^2
        BivarPoly s = x + BivarPoly::constant(c);
        return s * s + y2;
    };
    SyzygyTriple t;
    switch (ctx.kind) {
        case BasisKind::Power:
            t.p = sq_shift(0);
            t.q = x * Rational(2);
            t.r = BivarPoly::constant(1);
            break;
        case BasisKind::AlternatingPower:
            t.p = sq_shift(0);
            t.q = x * Rational(-2);
            t.r = BivarPoly::constant(1);
            break;
        case BasisKind::FallingFactorial:
            t.p = sq_shift(-k);
            t.q = (x - BivarPoly::constant(k)) * Rational(2) - BivarPoly::constant(1);
            t.r = BivarPoly::constant(1);
            break;
        case BasisKind::RisingFactorial:
            t.p = sq_shift(k);
            t.q = (x + BivarPoly::constant(k)) * Rational(2) + BivarPoly::constant(1);
            t.r = BivarPoly::constant(1);
            break;
        case BasisKind::AlternatingRisingFactorial:
            t.p = sq_shift(k);
            t.q = -((x + BivarPoly::constant(k)) * Rational(2) + BivarPoly::constant(1));
            t.r = BivarPoly::constant(1);
            break;
        case BasisKind::BinomialCoefficient:
            t.p = sq_shift(-k);
            t.r = sq_shift(Rational(ctx.d - 1 - k));  // p_{k+1-d} = (x - (k+1-d))^2 + y^2
            t.q = t.p + t.r - BivarPoly::constant(Rational(ctx.d) * Rational(ctx.d - 1));
            break;
    }
    return t;
}

SyzygyValues syzygy_values(const BasisContext& ctx, int k, double x, double y) {
    if (k < 0 || k > ctx.d - 2) throw std::out_of_range("syzygy index out of range");
    const double y2 = y * y;
    auto sq = [](double v) { return v * v; };
    switch (ctx.kind) {
        case BasisKind::Power:
            return {x * x + y2, 2 * x, 1.0};
        case BasisKind::AlternatingPower:
            return {x * x + y2, -2 * x, 1.0};
        case BasisKind::FallingFactorial:
            return {sq(x - k) + y2, 2 * (x - k) - 1, 1.0};
        case BasisKind::RisingFactorial:
            return {sq(x + k) + y2, 2 * (x + k) + 1, 1.0};
        case BasisKind::AlternatingRisingFactorial:
            return {sq(x + k) + y2, -(2 * (x + k) + 1), 1.0};
        case BasisKind::BinomialCoefficient: {
            double p = sq(x - k) + y2;
            double r = sq(x - (k + 1 - ctx.d)) + y2;
            double dd = static_cast<double>(ctx.d) * (ctx.d - 1);
            return {p, p + r - dd, r};
        }
    }
    return {0, 0, 0};
}

std::vector<std::vector<Rational>> to_power_matrix(const BasisContext& ctx) {
    const int n = ctx.d + 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i <= ctx.d; ++i) {
        auto form = detail::factor_form(ctx, i);
        // expand prod (z + c) as univariate coefficients
        std::vector<Rational> coeffs{Rational(1)};
        for (const auto& c : form.offsets) {
            std::vector<Rational> next(coeffs.size() + 1, Rational(0));
            for (std::size_t t = 0; t < coeffs.size(); ++t) {
                next[t] += coeffs[t] * c;
                next[t + 1] += coeffs[t];
            }
            coeffs = std::move(next);
        }
        Rational scale(form.sign);
        if (form.denom != 1) scale /= Rational(form.denom);
        for (std::size_t t = 0; t < coeffs.size(); ++t) m[i][t] = coeffs[t] * scale;
    }
    return m;
}

bool RealInterval::contains(double x) const {
    if (!lo_unbounded && x < to_double(lo)) return false;
    if (!hi_unbounded && x > to_double(hi)) return false;
    return true;
}

std::vector<RealInterval> real_root_locus(const BasisContext& ctx) {
    if (ctx.d < 1) return {};  // a single basis element admits no pair

    // All basis elements have known rational (in fact integer) roots.
    std::set<Rational> breakpoints;
    for (int i = 0; i <= ctx.d; ++i)
        for (const auto& c : detail::factor_form(ctx, i).offsets) breakpoints.insert(-c);
    std::vector<Rational> pts(breakpoints.begin(), breakpoints.end());

    auto mixed_signs_at = [&](const Rational& x) {
        bool pos = false, neg = false;
        for (int i = 0; i <= ctx.d; ++i) {
            Rational v = basis_eval_real_exact(ctx, i, x);
            if (v > 0) pos = true;
            else if (v < 0) neg = true;
            if (pos && neg) return true;
        }
        return false;
    };

    // Sample each open interval between consecutive breakpoints; the signs
    // are constant there.  Breakpoints themselves always belong to the
    // locus (some b_i vanishes).
    struct Piece {
        bool in;
        bool lo_inf = false, hi_inf = false;
        Rational lo, hi;
    };
    std::vector<Piece> pieces;
    if (pts.empty()) return {};  // no roots anywhere: constant signs, no locus unless mixed
    // left unbounded piece
    pieces.push_back({mixed_signs_at(pts.front() - 1), true, false, Rational(0), pts.front()});
    for (std::size_t t = 0; t + 1 < pts.size(); ++t) {
        Rational mid = (pts[t] + pts[t + 1]) / 2;
        pieces.push_back({mixed_signs_at(mid), false, false, pts[t], pts[t + 1]});
    }
    pieces.push_back({mixed_signs_at(pts.back() + 1), false, true, pts.back(), Rational(0)});

    // Assemble closed intervals: every breakpoint is in the locus; an open
    // piece contributes its closure when its interior has mixed signs.
    std::vector<RealInterval> out;
    auto push_point = [&](const Rational& x) {
        if (!out.empty() && !out.back().hi_unbounded && out.back().hi == x) return;
        out.push_back(RealInterval::bounded(x, x));
    };
    for (std::size_t t = 0; t < pieces.size(); ++t) {
        const auto& piece = pieces[t];
        if (piece.in) {
            RealInterval iv;
            iv.lo_unbounded = piece.lo_inf;
            iv.hi_unbounded = piece.hi_inf;
            iv.lo = piece.lo;
            iv.hi = piece.hi;
            if (!out.empty() && !out.back().hi_unbounded && !iv.lo_unbounded &&
                out.back().hi == iv.lo) {
                out.back().hi = iv.hi;
                out.back().hi_unbounded = iv.hi_unbounded;
            } else {
                out.push_back(iv);
            }
        } else if (!piece.lo_inf) {
            push_point(piece.lo);
        }
    }
    return out;
}

}  // namespace galeroot
