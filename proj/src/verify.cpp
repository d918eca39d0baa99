#include <galeroot/verify.hpp>

#include <galeroot/determinant.hpp>
#include <galeroot/gale_dual.hpp>
#include <galeroot/rand_study.hpp>
#include <galeroot/region_grid.hpp>
#include <galeroot/root_find.hpp>
#include <galeroot/root_locus.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace galeroot {

namespace {

struct Rng {
    std::uint64_t seed;
    std::uint64_t counter = 0;
    explicit Rng(std::uint64_t s, std::uint64_t stream = 0x5EEDu) : seed(splitmix64(s) ^ stream) {}
    double uniform01() { return rng_uniform01(rng_draw(seed, 0, counter++)); }
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }
    int uniform_int(int a, int b) {  // inclusive
        return a + static_cast<int>(rng_draw(seed, 1, counter++) % static_cast<std::uint64_t>(b - a + 1));
    }
    Rational rational(int max_num = 60, int max_den = 16) {
        int num = uniform_int(-max_num, max_num);
        int den = uniform_int(1, max_den);
        return Rational(num, den);
    }
};

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

CheckResult check(const std::string& name, bool pass, const std::string& detail) {
    return {name, pass, detail};
}

const std::vector<BasisKind> kAllKinds = {
    BasisKind::Power,
    BasisKind::FallingFactorial,
    BasisKind::RisingFactorial,
    BasisKind::BinomialCoefficient,
    BasisKind::AlternatingPower,
    BasisKind::AlternatingRisingFactorial,
};

// ---------------------------------------------------------------- 1

std::vector<CheckResult> suite_duality(const VerifyOptions& opts) {
    const int dmax = opts.d > 0 ? opts.d : 10;
    int checked = 0;
    std::string first_fail;
    for (BasisKind kind : kAllKinds) {
        for (int d = 2; d <= dmax; ++d) {
            BasisContext ctx(kind, d);
            if (!verify_duality(ctx)) {
                first_fail = std::string(basis_name(kind)) + " d=" + std::to_string(d) +
                             ": W * dual != 0";
                break;
            }
            // column syzygy: p_k R_k - q_k R_{k+1} + r_k R_{k+2} = 0, same with I
            for (int k = 0; k <= d - 2 && first_fail.empty(); ++k) {
                auto t = syzygy_triple(ctx, k);
                auto [r0, i0] = basis_realimag(ctx, k);
                auto [r1, i1] = basis_realimag(ctx, k + 1);
                auto [r2, i2] = basis_realimag(ctx, k + 2);
                if (!(t.p * r0 - t.q * r1 + t.r * r2).is_zero() ||
                    !(t.p * i0 - t.q * i1 + t.r * i2).is_zero())
                    first_fail = std::string(basis_name(kind)) + " d=" + std::to_string(d) +
                                 " k=" + std::to_string(k) + ": syzygy identity fails";
            }
            ++checked;
            if (!first_fail.empty()) break;
        }
        if (!first_fail.empty()) break;
    }
    return {check("1-duality", first_fail.empty(),
                  first_fail.empty()
                      ? "W*dual = 0 and all syzygies exact for 6 bases, d = 2.." +
                            std::to_string(dmax) + " (" + std::to_string(checked) + " contexts)"
                      : first_fail)};
}

// ---------------------------------------------------------------- 2

std::vector<CheckResult> suite_closed_form(const VerifyOptions& opts) {
    const int dmax = opts.d > 0 ? opts.d : 10;
    const long points = opts.count > 0 ? opts.count : 1000;
    Rng rng(opts.seed, 2);
    double worst = 0.0;
    long tested = 0;
    std::string first_fail;
    for (BasisKind kind : kAllKinds) {
        for (int d = 2; d <= dmax && first_fail.empty(); ++d) {
            BasisContext ctx(kind, d);
            for (int j = 0; j <= d - 1 && first_fail.empty(); ++j)
                for (int k = j + 1; k <= d && first_fail.empty(); ++k)
                    for (long t = 0; t < points; ++t) {
                        double x = rng.uniform(-d - 2.0, d + 2.0);
                        double y = rng.uniform(0.05, d + 1.0) * (rng.uniform01() < 0.5 ? -1 : 1);
                        double rec = d_eval(ctx, j, k, {x, y});
                        double closed = d_closed_eval(ctx, j, k, {x, y});
                        double err = std::abs(rec - closed);
                        double tol = 1e-9 * (1.0 + std::abs(rec));
                        worst = std::max(worst, err / (1.0 + std::abs(rec)));
                        ++tested;
                        if (err > tol) {
                            std::ostringstream msg;
                            msg << basis_name(kind) << " d=" << d << " (" << j << "," << k
                                << ") at (" << x << "," << y << "): rec=" << rec
                                << " closed=" << closed;
                            first_fail = msg.str();
                            break;
                        }
                    }
        }
    }
    return {check("2-closed-form", first_fail.empty(),
                  first_fail.empty() ? std::to_string(tested) +
                                           " points, worst rel diff " + fmt(worst)
                                     : first_fail)};
}

// ---------------------------------------------------------------- 3

std::vector<CheckResult> suite_example_n2(const VerifyOptions&) {
    BasisContext ctx(BasisKind::BinomialCoefficient, 3);
    const BivarPoly x = BivarPoly::var_x();
    const BivarPoly y = BivarPoly::var_y();
    auto sq = [](const BivarPoly& p) { return p * p; };
    const BivarPoly y2 = sq(y);

    // the quoted d = 3 values
    BivarPoly p0 = sq(x) + y2;
    BivarPoly p1 = sq(x - BivarPoly::constant(1)) + y2;
    BivarPoly q0 = sq(x + BivarPoly::constant(1)) * Rational(2) + y2 * Rational(2) -
                   BivarPoly::constant(4);
    BivarPoly q1 = sq(x) * Rational(2) + y2 * Rational(2) - BivarPoly::constant(4);
    BivarPoly r0 = sq(x + BivarPoly::constant(2)) + y2;
    BivarPoly r1 = sq(x + BivarPoly::constant(1)) + y2;

    bool table_ok = true;
    for (int k = 0; k <= 1; ++k) {
        auto t = syzygy_triple(ctx, k);
        table_ok = table_ok && t.p == (k == 0 ? p0 : p1) && t.q == (k == 0 ? q0 : q1) &&
                   t.r == (k == 0 ? r0 : r1);
    }

    bool d02 = det_deleted_poly(ctx, 0, 2) == -q0 * r1;
    bool d03 = det_deleted_poly(ctx, 0, 3) == q0 * q1 - p1 * r0;
    bool d13 = det_deleted_poly(ctx, 1, 3) == -p0 * q1;
    bool pass = table_ok && d02 && d03 && d13;
    std::string detail = pass ? "p/q/r table and all three deleted-row determinants match exactly"
                              : std::string("table=") + (table_ok ? "ok" : "BAD") +
                                    " d02=" + (d02 ? "ok" : "BAD") + " d03=" + (d03 ? "ok" : "BAD") +
                                    " d13=" + (d13 ? "ok" : "BAD");
    return {check("3-example-n2", pass, detail)};
}

// ---------------------------------------------------------------- 4

std::vector<CheckResult> suite_power_sector(const VerifyOptions& opts) {
    const int d = opts.d > 0 ? opts.d : 6;
    const long count = opts.count > 0 ? opts.count : 10000;
    SampleSpec spec{BasisContext(BasisKind::Power, d)};
    spec.bound = 1.0;
    spec.count = static_cast<int>(count);
    spec.seed = opts.seed + 4;
    auto batch = sample(spec);
    long roots_seen = 0;
    double min_arg = HUGE_VAL;
    std::string first_fail;
    const double sector = M_PI / d;
    for (std::size_t index = 0; index < batch.size() && first_fail.empty(); ++index) {
        auto result = roots_in_basis(batch[index]);
        for (auto z : result.roots) {
            ++roots_seen;
            double a = std::abs(std::atan2(z.imag(), z.real()));
            min_arg = std::min(min_arg, a);
            if (a < sector - 1e-6) {
                std::ostringstream msg;
                msg << "poly " << index << " has root " << z.real() << "+" << z.imag()
                    << "i inside the sector";
                first_fail = msg.str();
                break;
            }
        }
    }
    return {check("4-power-sector", first_fail.empty(),
                  first_fail.empty() ? std::to_string(roots_seen) + " roots, min |arg| = " +
                                           fmt(min_arg) + " >= pi/" + std::to_string(d) + " - 1e-6"
                                     : first_fail)};
}

// ---------------------------------------------------------------- 5

std::vector<CheckResult> suite_containment(const VerifyOptions& opts) {
    const int d = opts.d > 0 ? opts.d : 6;
    const long count = opts.count > 0 ? opts.count : 1000;
    BasisKind kind =
        opts.basis.empty() ? BasisKind::BinomialCoefficient : basis_from_name(opts.basis);
    BasisContext ctx(kind, d);
    SampleSpec spec{ctx};
    spec.bound = 1.0;
    spec.count = static_cast<int>(count);
    spec.seed = opts.seed + 5;
    spec.ends_nonzero = true;
    auto batch = sample(spec);
    auto roots = batch_roots(batch);

    long nonreal = 0, real = 0;
    std::string first_fail;
    if (kind == BasisKind::BinomialCoefficient) {
        for (const auto& s : roots) {
            if (first_fail.size()) break;
            if (s.is_real) {
                ++real;
                if (s.re < -d - 1e-9 || s.re > d - 1 + 1e-9)
                    first_fail = "real root " + fmt(s.re) + " outside [-d, d-1]";
            } else {
                ++nonreal;
                auto m = angle_sum(ctx, 0, d, {s.re, s.im});
                if (m.angle_sum < M_PI - 1e-6)
                    first_fail = "non-real root (" + fmt(s.re) + "," + fmt(s.im) +
                                 ") has angle sum " + fmt(m.angle_sum) + " < pi - 1e-6";
            }
        }
    } else {
        // generic soundness: computed roots are never excluded
        auto locus = real_root_locus(ctx);
        for (const auto& s : roots) {
            if (first_fail.size()) break;
            if (s.is_real) {
                ++real;
                bool in = false;
                for (const auto& iv : locus)
                    if (iv.contains(s.re + 1e-9) || iv.contains(s.re - 1e-9) || iv.contains(s.re))
                        in = true;
                if (!in) first_fail = "real root " + fmt(s.re) + " outside the real locus";
            } else {
                ++nonreal;
                if (excluded(ctx, {s.re, s.im}))
                    first_fail = "non-real root (" + fmt(s.re) + "," + fmt(s.im) + ") excluded";
            }
        }
    }
    return {check("5-containment", first_fail.empty(),
                  first_fail.empty() ? std::to_string(nonreal) + " non-real + " +
                                           std::to_string(real) + " real roots all inside bounds"
                                     : first_fail)};
}

// ---------------------------------------------------------------- 6

std::vector<CheckResult> suite_tightness(const VerifyOptions& opts) {
    const int d = opts.d > 0 ? opts.d : 6;
    const long count = opts.count > 0 ? opts.count : 500;
    BasisContext ctx(BasisKind::BinomialCoefficient, d);
    Rng rng(opts.seed, 6);

    // rough bounding box of the outermost oval (its top is near
    // 2 * sum(a_i) / pi)
    double ytop = 0;
    for (const auto& a : shifted_points(d, 0, d).a) ytop += 2.0 * to_double(a) / M_PI;

    long inside_ok = 0, outside_ok = 0;
    std::string first_fail;
    for (long t = 0; t < count && first_fail.empty(); ++t) {
        // a point safely inside the outermost oval
        double x, y, a;
        do {
            x = rng.uniform(-d - 0.7, d - 0.3);
            y = rng.uniform(0.02, ytop * 1.05);
            a = angle_sum(ctx, 0, d, {x, y}).angle_sum;
        } while (a < M_PI + 0.01);
        auto cert = certificate(ctx, {x, y});
        if (!cert) {
            first_fail = "no certificate at inside point (" + fmt(x) + "," + fmt(y) + ")";
            break;
        }
        // validate the residual contract independently
        std::complex<double> f = 0;
        double bound = 0;
        bool nonneg = true;
        for (int i = 0; i <= d; ++i) {
            if ((*cert)[i] < 0) nonneg = false;
            auto b = basis_eval(ctx, i, {x, y});
            f += (*cert)[i] * b;
            bound += (*cert)[i] * std::abs(b);
        }
        if (!nonneg || std::abs(f) > 1e-9 * bound) {
            first_fail = "certificate violates its contract at (" + fmt(x) + "," + fmt(y) + ")";
            break;
        }
        ++inside_ok;
    }
    for (long t = 0; t < count && first_fail.empty(); ++t) {
        double x, y, a;
        do {
            x = rng.uniform(-2.0 * d, 2.0 * d);
            y = rng.uniform(0.02, ytop * 1.3);
            a = angle_sum(ctx, 0, d, {x, y}).angle_sum;
        } while (a > M_PI - 0.01);
        if (certificate(ctx, {x, y})) {
            first_fail = "certificate produced at outside point (" + fmt(x) + "," + fmt(y) + ")";
            break;
        }
        if (!excluded(ctx, {x, y})) {
            first_fail = "outside point (" + fmt(x) + "," + fmt(y) + ") not excluded";
            break;
        }
        ++outside_ok;
    }
    return {check("6-tightness", first_fail.empty(),
                  first_fail.empty() ? std::to_string(inside_ok) + " inside certificates + " +
                                           std::to_string(outside_ok) + " outside exclusions"
                                     : first_fail)};
}

// ---------------------------------------------------------------- 7

std::vector<CheckResult> suite_asymptotics(const VerifyOptions& opts) {
    std::string first_fail;

    // numeric ratios at R = 1e4 for d = 8, (j,k) = (0,8)
    BasisContext ctx8(BasisKind::BinomialCoefficient, 8);
    const double big_r = 1e4;
    const int n8 = 7;
    const double expected8 = -8.0;
    double worst_ratio_err = 0;
    for (double phi : {M_PI / 6, M_PI / 3, 2 * M_PI / 3}) {
        ScaledDouble v = d_eval_scaled(ctx8, 0, 8, {big_r * std::cos(phi), big_r * std::sin(phi)});
        // divide by R^(2n) in log space
        ScaledDouble rpow = ScaledDouble::from(1.0);
        for (int t = 0; t < 2 * n8; ++t) rpow = rpow * ScaledDouble::from(big_r);
        double ratio = v.to_double() / rpow.to_double();
        worst_ratio_err = std::max(worst_ratio_err, std::abs(ratio - expected8));
        if (std::abs(ratio - expected8) > 0.01 * std::abs(expected8))
            first_fail = "ratio " + fmt(ratio) + " at phi=" + fmt(phi) + " not within 1% of -8";
    }

    // symbolic top-degree parts for all pairs, d <= 10
    const int dmax = opts.d > 0 ? opts.d : 10;
    for (int d = 2; d <= dmax && first_fail.empty(); ++d) {
        BasisContext ctx(BasisKind::BinomialCoefficient, d);
        for (int j = 0; j <= d - 1 && first_fail.empty(); ++j)
            for (int k = j + 1; k <= d && first_fail.empty(); ++k) {
                const int n = k - j - 1;
                BivarPoly expected = BivarPoly::constant(Rational((n % 2 == 0 ? 1 : -1) * (n + 1)));
                BivarPoly zz = BivarPoly::monomial(2, 0, 1) + BivarPoly::monomial(0, 2, 1);
                for (int t = 0; t < n; ++t) expected = expected * zz;
                if (!(d_poly(ctx, j, k).poly.homogeneous_part(2 * n) == expected))
                    first_fail = "top-degree part wrong for d=" + std::to_string(d) + " (" +
                                 std::to_string(j) + "," + std::to_string(k) + ")";
            }
    }
    return {check("7-asymptotics", first_fail.empty(),
                  first_fail.empty() ? "ratios within " + fmt(worst_ratio_err) +
                                           " of -8; symbolic leading parts exact for d <= " +
                                           std::to_string(dmax)
                                     : first_fail)};
}

// ---------------------------------------------------------------- 8

std::vector<CheckResult> suite_circles(const VerifyOptions& opts) {
    const int d = opts.d > 0 ? opts.d : 200;
    BasisContext ctx(BasisKind::BinomialCoefficient, d);
    auto circles = limiting_circles(d, 0, 4);
    std::string first_fail;
    double worst = 0;
    for (std::size_t l = 0; l < circles.size() && first_fail.empty(); ++l) {
        const auto& c = circles[l];
        for (int ray = 0; ray < 16 && first_fail.empty(); ++ray) {
            const double theta = 2 * M_PI * (ray + 0.5) / 16.0;
            auto at = [&](double s) {
                return d_eval(ctx, 0, 4,
                              {c.center.real() + s * std::cos(theta),
                               c.center.imag() + s * std::sin(theta)});
            };
            // bracket the zero inside the +-10% annulus
            const int steps = 400;
            double lo = 0.9 * c.radius, hi = 1.1 * c.radius;
            double best = -1;
            double prev_s = lo, prev_v = at(lo);
            for (int t = 1; t <= steps; ++t) {
                double s = lo + (hi - lo) * t / steps;
                double v = at(s);
                if (prev_v == 0.0) best = prev_s;
                else if (v == 0.0) best = s;
                else if ((prev_v < 0) != (v < 0)) {
                    double a = prev_s, b = s;
                    for (int it = 0; it < 100; ++it) {
                        double mid = (a + b) / 2, vm = at(mid);
                        if (vm == 0) {
                            a = b = mid;
                            break;
                        }
                        if ((vm < 0) == (prev_v < 0)) a = mid;
                        else b = mid;
                    }
                    double found = (a + b) / 2;
                    if (best < 0 || std::abs(found - c.radius) < std::abs(best - c.radius))
                        best = found;
                }
                prev_s = s;
                prev_v = v;
            }
            if (best < 0) {
                first_fail = "no zero bracketed on circle " + std::to_string(l + 1) + " ray " +
                             std::to_string(ray);
                break;
            }
            double rel = std::abs(best - c.radius) / c.radius;
            worst = std::max(worst, rel);
            if (rel > 0.01)
                first_fail = "zero at relative offset " + fmt(rel) + " on circle " +
                             std::to_string(l + 1) + " ray " + std::to_string(ray);
        }
    }
    return {check("8-circles", first_fail.empty(),
                  first_fail.empty()
                      ? "48 ray zeros within " + fmt(worst) + " of the predicted circles"
                      : first_fail)};
}

// ---------------------------------------------------------------- 9

std::vector<CheckResult> suite_ovals(const VerifyOptions& opts) {
    const int d = opts.d > 0 ? opts.d : 10;
    const int res = opts.grid > 0 ? opts.grid : 800;
    BasisContext ctx(BasisKind::BinomialCoefficient, d);
    Window window = auto_window(d, 0, d);
    auto grid = sample_grid(window, res, res, FieldKind::DValue,
                            [&](double x, double y) { return d_eval(ctx, 0, d, {x, y}); });
    auto contours = extract_contours(grid);
    int closed = 0, open = 0;
    for (const auto& c : contours) (c.closed ? closed : open)++;
    bool count_ok = closed == d - 1 && open == 0;

    // exact interlacing on the real axis: sign changes in +-(a_i, a_{i+1})
    auto restricted = d_poly(ctx, 0, d).poly.restrict_y0();
    auto eval1 = [&](const Rational& x) {
        Rational acc = 0, xp = 1;
        int last = 0;
        for (const auto& [deg, c] : restricted) {
            for (; last < deg; ++last) xp *= x;
            acc += c * xp;
        }
        return acc;
    };
    auto pts = shifted_points(d, 0, d);
    bool interlace_ok = true;
    for (int i = 1; i <= d - 1 && interlace_ok; ++i) {
        // i-th interval (a_i, a_{i+1}) and its mirror, back in original coordinates
        Rational lo = pts.a[i - 1] + pts.shift, hi = pts.a[i] + pts.shift;
        if (!(eval1(lo) * eval1(hi) < 0)) interlace_ok = false;
        Rational mlo = -pts.a[i] + pts.shift, mhi = -pts.a[i - 1] + pts.shift;
        if (!(eval1(mlo) * eval1(mhi) < 0)) interlace_ok = false;
    }

    std::string detail = std::to_string(closed) + " closed / " + std::to_string(open) +
                         " open contours at " + std::to_string(res) + "^2; interlacing " +
                         (interlace_ok ? "exact" : "FAILED");
    return {check("9-ovals", count_ok && interlace_ok, detail)};
}

// ---------------------------------------------------------------- 10

std::vector<CheckResult> suite_ehrhart(const VerifyOptions& opts) {
    const int d = opts.d > 0 ? opts.d : 10;
    const long count = opts.count > 0 ? opts.count : 10000;
    BasisContext ctx(BasisKind::BinomialCoefficient, d);
    auto constraint = ehrhart_s0_constraint(d);
    auto ext = extend_with_inequality(build_gale_dual(ctx), constraint);

    // (a) soundness on rejection-sampled roots
    SampleSpec spec{ctx};
    spec.bound = 1.0;
    spec.count = static_cast<int>(count);
    spec.seed = opts.seed + 10;
    spec.constraint = constraint;
    auto batch = sample(spec);
    auto roots = batch_roots(batch);
    long tested = 0;
    std::string first_fail;
    for (const auto& s : roots) {
        if (s.is_real) continue;
        ++tested;
        if (excluded_with_constraints(ext, {s.re, s.im})) {
            first_fail = "sampled root (" + fmt(s.re) + "," + fmt(s.im) +
                         ") lands in the constrained exclusion region";
            break;
        }
    }
    CheckResult part_a = check("10a-ehrhart-soundness", first_fail.empty(),
                               first_fail.empty() ? std::to_string(tested) +
                                                        " non-real roots, none excluded"
                                                  : first_fail);

    // (b) the refinement is strict at some probe just inside the outermost oval
    std::string fail_b;
    const double shift = to_double(shifted_points(d, 0, d).shift);
    int strict = 0, probes = 0, wrong = 0;
    for (int t = 0; t < 50; ++t) {
        double theta = (0.05 + 0.95 * (t % 25) / 24.0) * (t < 25 ? 1.0 : -1.0);
        // bisect the angle sum to pi + 0.03 along the ray
        double lo = 0.5, hi = 4.0 * d;
        auto angle_at = [&](double rr) {
            return angle_sum(ctx, 0, d,
                             {rr * std::cos(theta) + shift, rr * std::sin(theta)})
                .angle_sum;
        };
        for (int it = 0; it < 80; ++it) {
            double mid = (lo + hi) / 2;
            (angle_at(mid) > M_PI + 0.03 ? lo : hi) = mid;
        }
        double rr = (lo + hi) / 2;
        ComplexPoint z{rr * std::cos(theta) + shift, rr * std::sin(theta)};
        double a = angle_sum(ctx, 0, d, z).angle_sum;
        if (!(a >= M_PI && a <= M_PI + 0.05) || z.x <= 0) continue;
        ++probes;
        bool unconstrained = excluded(ctx, z);
        bool constrained = excluded_with_constraints(ext, z);
        if (unconstrained) ++wrong;  // tightness says the inside is never excluded
        if (constrained && !unconstrained) ++strict;
    }
    if (probes < 25) fail_b = "too few valid probes (" + std::to_string(probes) + ")";
    else if (wrong > 0) fail_b = "unconstrained exclusion fired inside the oval";
    else if (strict < 1) fail_b = "no probe shows a strictly larger constrained exclusion";
    CheckResult part_b =
        check("10b-ehrhart-refinement", fail_b.empty(),
              fail_b.empty() ? std::to_string(strict) + " of " + std::to_string(probes) +
                                   " probes strictly refined"
                             : fail_b);
    return {part_a, part_b};
}

// ---------------------------------------------------------------- 11

std::vector<CheckResult> suite_chromatic_altpower(const VerifyOptions& opts) {
    const int d = opts.d > 0 ? opts.d : 6;
    const int kappa = 1, m = 7;
    BasisContext ctx(BasisKind::AlternatingPower, d);
    auto ext = alt_power_equation_dual(ctx, kappa, m);
    const int e = ext.eff_degree;
    BasisContext eff_ctx(BasisKind::AlternatingPower, e);

    long agree = 0, disagree = 0, zero_sets = 0, nonzero_sets = 0;
    const int nx = 40, ny = 25;
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            ComplexPoint z{-6.0 + 12.4 * (ix + 0.371) / nx, 0.07 + 5.9 * (iy + 0.629) / ny};
            bool eu = excluded(eff_ctx, z);
            bool ec = excluded_with_constraints(ext, z);
            (eu == ec ? agree : disagree)++;
            for (int i = 0; i <= e - 4; ++i)
                for (int j = i + 1; j <= e - 3; ++j)
                    for (int k = j + 1; k <= e - 2; ++k) {
                        auto s = sigma_quad(ext, {i, j, k, e - 1}, z);
                        (s.has_zero ? zero_sets : nonzero_sets)++;
                    }
        }
    bool pass = disagree == 0 && nonzero_sets == 0;
    std::string detail = "agreement " + std::to_string(agree) + "/" +
                         std::to_string(agree + disagree) + "; sigma(i,j,k,d'-1) with 0: " +
                         std::to_string(zero_sets) + "/" +
                         std::to_string(zero_sets + nonzero_sets);
    return {check("11-chromatic-altpower", pass, detail)};
}

// ---------------------------------------------------------------- 12

std::vector<CheckResult> suite_chromatic_binomial(const VerifyOptions& opts) {
    const int d = 4, chi = 0;
    const Rational eps(1, 2);
    BasisContext ctx(BasisKind::BinomialCoefficient, d);
    auto ext = chromatic_equation_dual(ctx, chi, eps);
    const int e = ext.eff_degree;

    struct Key {
        int i, j, k;
    };
    std::vector<Key> all_k;
    for (int i = 0; i <= e - 2; ++i)
        for (int j = i + 1; j <= e - 1; ++j)
            for (int k = j + 1; k <= e; ++k) all_k.push_back({i, j, k});

    auto is_empty_k = [](const Key& key) {
        return (key.i == 0 && key.j == 1 && key.k == 2) ||
               (key.i == 1 && key.j == 2 && key.k == 3);
    };

    // zero loci over the figure window, off the real axis
    Window window{-8.0, 3.0, -3.0, 3.0};
    std::string first_fail;
    for (const auto& key : all_k) {
        auto poly = chromatic_det_poly(ctx, chi, eps, key.i, key.j, key.k);
        auto grid = sample_grid(window, 301, 200, FieldKind::CustomDet,
                                [&](double x, double y) { return poly.eval_f(x, y); });
        auto contours = extract_contours(grid);
        std::size_t pieces = contours.size();
        if (is_empty_k(key) && pieces != 0) {
            first_fail = "K={" + std::to_string(key.i) + "," + std::to_string(key.j) + "," +
                         std::to_string(key.k) + "} should have an empty locus";
            break;
        }
        if (!is_empty_k(key) && pieces == 0) {
            first_fail = "K={" + std::to_string(key.i) + "," + std::to_string(key.j) + "," +
                         std::to_string(key.k) + "} should have a nonempty locus";
            break;
        }
    }

    // exact agreement with the dense determinant oracle at 200 rational points
    Rng rng(opts.seed, 12);
    long agreements = 0;
    for (int t = 0; t < 200 && first_fail.empty(); ++t) {
        Rational x = rng.rational(40, 8);
        Rational y = rng.rational(40, 8);
        if (y == 0) y = Rational(1, 3);
        for (const auto& key : all_k) {
            Rational fast = chromatic_det_exact(ctx, chi, eps, key.i, key.j, key.k, x, y);
            // literal 2x2 submatrix of the column-combined dual
            std::vector<std::vector<Rational>> sub;
            for (int row = 0; row <= e; ++row) {
                if (row == key.i || row == key.j || row == key.k) continue;
                std::vector<Rational> vals;
                for (int col = 0; col < ext.n_cols; ++col)
                    vals.push_back(ext.matrix[row][col].eval(x, y));
                sub.push_back(std::move(vals));
            }
            Rational dense = sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0];
            if (fast != dense) {
                first_fail = "chromatic det disagrees with the dense oracle at a rational point";
                break;
            }
            ++agreements;
        }
    }
    return {check("12-chromatic-binomial", first_fail.empty(),
                  first_fail.empty()
                      ? "2 empty + 8 nonempty loci; " + std::to_string(agreements) +
                            " exact oracle agreements"
                      : first_fail)};
}

// ---------------------------------------------------------------- 13

std::vector<CheckResult> suite_barycenter(const VerifyOptions& opts) {
    Rng rng(opts.seed, 13);
    std::string first_fail;
    double worst = 0;
    for (int d : {4, 6, 10}) {
        BasisContext ctx(BasisKind::BinomialCoefficient, d);
        for (int t = 0; t < 1000 && first_fail.empty(); ++t) {
            std::complex<long double> z(rng.uniform(-d - 2.0, d + 2.0),
                                        rng.uniform(-d / 2.0 - 2.0, d / 2.0 + 2.0));
            // C(z+d+1, d+1) - C(z, d+1)
            std::complex<long double> top = 1, bottom = 1;
            for (int i = 0; i <= d; ++i) {
                top *= z + static_cast<long double>(d + 1 - i);
                bottom *= z - static_cast<long double>(i);
            }
            long double fact = 1;
            for (int i = 2; i <= d + 1; ++i) fact *= i;
            std::complex<long double> closed = (top - bottom) / fact;
            auto beta = barycenter(ctx, {static_cast<double>(z.real()),
                                         static_cast<double>(z.imag())});
            double err = std::abs(beta - std::complex<double>(static_cast<double>(closed.real()),
                                                              static_cast<double>(closed.imag())));
            double rel = err / (1.0 + std::abs(beta));
            worst = std::max(worst, rel);
            if (rel > 1e-10)
                first_fail = "barycenter identity off by " + fmt(rel) + " at d=" +
                             std::to_string(d);
        }
    }
    CheckResult identity = check("13a-barycenter-identity", first_fail.empty(),
                                 first_fail.empty() ? "worst rel err " + fmt(worst) : first_fail);

    // clustering proxy: median |beta| over root locations vs over uniform
    // points of the permitted region
    const int d = 6;
    BasisContext ctx(BasisKind::BinomialCoefficient, d);
    SampleSpec spec{ctx};
    spec.bound = 720.0;
    spec.count = 500;
    spec.seed = opts.seed + 13;
    spec.ends_nonzero = true;
    auto roots = batch_roots(sample(spec));
    std::vector<double> at_roots;
    for (const auto& s : roots)
        if (!s.is_real) at_roots.push_back(std::abs(barycenter(ctx, {s.re, s.im})));
    double ytop = 0;
    for (const auto& a : shifted_points(d, 0, d).a) ytop += 2.0 * to_double(a) / M_PI;
    std::vector<double> at_uniform;
    while (at_uniform.size() < 500) {
        double x = rng.uniform(-d - 0.7, d - 0.3);
        double y = rng.uniform(0.02, ytop * 1.05);
        if (angle_sum(ctx, 0, d, {x, y}).angle_sum >= M_PI)
            at_uniform.push_back(std::abs(barycenter(ctx, {x, y})));
    }
    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
    };
    double med_roots = median(at_roots), med_uniform = median(at_uniform);
    CheckResult proxy = check("13b-clustering-proxy", med_roots < med_uniform,
                              "median |beta| at roots " + fmt(med_roots) + " vs uniform " +
                                  fmt(med_uniform));
    return {identity, proxy};
}

using SuiteFn = std::vector<CheckResult> (*)(const VerifyOptions&);

struct Suite {
    const char* name;
    const char* alias;
    SuiteFn fn;
};

const Suite kSuites[] = {
    {"1-duality", "duality", suite_duality},
    {"2-closed-form", "closedform", suite_closed_form},
    {"3-example-n2", "example-n2", suite_example_n2},
    {"4-power-sector", "sector", suite_power_sector},
    {"5-containment", "containment", suite_containment},
    {"6-tightness", "tightness", suite_tightness},
    {"7-asymptotics", "asymptotics", suite_asymptotics},
    {"8-circles", "circles", suite_circles},
    {"9-ovals", "ovals", suite_ovals},
    {"10-ehrhart", "ehrhart", suite_ehrhart},
    {"11-chromatic-altpower", "chromatic-altpower", suite_chromatic_altpower},
    {"12-chromatic-binomial", "chromatic-binomial", suite_chromatic_binomial},
    {"13-barycenter", "barycenter", suite_barycenter},
};

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : kSuites) out.push_back(s.name);
        out.push_back("acceptance");
        return out;
    }();
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts) {
    if (name == "all" || name == "acceptance") {
        std::vector<CheckResult> out;
        for (const auto& s : kSuites) {
            auto r = s.fn(opts);
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }
    for (const auto& s : kSuites)
        if (name == s.name || name == s.alias) return s.fn(opts);
    throw std::invalid_argument("unknown verify suite: " + name);
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace galeroot
