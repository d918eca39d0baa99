#include <galeroot/root_find.hpp>

#include <cmath>
#include <stdexcept>

namespace galeroot {

std::vector<Rational> to_power_exact(const PolynomialInBasis& p) {
    auto m = to_power_matrix(p.ctx);
    std::vector<Rational> out(p.ctx.d + 1, Rational(0));
    for (int i = 0; i <= p.ctx.d; ++i) {
        if (p.coeffs[i] == 0) continue;
        for (int t = 0; t <= p.ctx.d; ++t) out[t] += p.coeffs[i] * m[i][t];
    }
    return out;
}

std::vector<double> to_power(const PolynomialInBasis& p) {
    auto exact = to_power_exact(p);
    std::vector<double> out(exact.size());
    for (std::size_t t = 0; t < exact.size(); ++t) out[t] = to_double(exact[t]);
    return out;
}

std::pair<double, double> power_residual(const std::vector<double>& coeffs,
                                         std::complex<double> z) {
    std::complex<double> v = 0.0;
    double bound = 0.0, az = std::abs(z), zp = 1.0;
    std::complex<double> pw = 1.0;
    for (double c : coeffs) {
        v += c * pw;
        bound += std::abs(c) * zp;
        pw *= z;
        zp *= az;
    }
    return {std::abs(v), bound};
}

namespace {

/// Horner evaluation of p and p'.
std::pair<std::complex<double>, std::complex<double>> horner(const std::vector<double>& c,
                                                             std::complex<double> z) {
    std::complex<double> v = 0.0, dv = 0.0;
    for (std::size_t t = c.size(); t-- > 0;) {
        dv = dv * z + v;
        v = v * z + c[t];
    }
    return {v, dv};
}

constexpr int kMaxIterations = 200;
constexpr double kStepTol = 1e-14;

}  // namespace

RootFindResult find_roots(const std::vector<double>& coeffs) {
    int hi = static_cast<int>(coeffs.size()) - 1;
    while (hi >= 0 && coeffs[hi] == 0.0) --hi;
    if (hi < 0) throw std::invalid_argument("zero polynomial has no defined root set");
    int lo = 0;
    while (lo < hi && coeffs[lo] == 0.0) ++lo;

    RootFindResult result;
    for (int t = 0; t < lo; ++t) result.roots.push_back(0.0);  // explicit zero roots
    const int n = hi - lo;
    if (n == 0) return result;

    std::vector<double> c(coeffs.begin() + lo, coeffs.begin() + hi + 1);

    // Cauchy bound for the root moduli
    double bound = 0.0;
    for (int t = 0; t < n; ++t) bound = std::max(bound, std::abs(c[t] / c[n]));
    const double radius = 1.0 + bound;

    // initial guesses on a circle, rotated by an irrational angle so no
    // guess starts on the real axis
    std::vector<std::complex<double>> z(n);
    const double golden = 2.0 * M_PI * 0.6180339887498949;
    for (int t = 0; t < n; ++t) {
        double phi = 2.0 * M_PI * t / n + golden / n;
        z[t] = std::polar(radius, phi);
    }

    std::vector<bool> locked(n, false);
    int iter = 0;
    for (; iter < kMaxIterations; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < n; ++i) {
            if (locked[i]) continue;
            auto [v, dv] = horner(c, z[i]);
            if (v == 0.0) {
                locked[i] = true;
                continue;
            }
            std::complex<double> newton;
            if (dv == 0.0) {
                // flat spot: nudge off it
                newton = std::complex<double>(1e-8, 1e-8);
            } else {
                newton = v / dv;
            }
            std::complex<double> s = 0.0;
            for (int t = 0; t < n; ++t)
                if (t != i) s += 1.0 / (z[i] - z[t]);
            std::complex<double> denom = 1.0 - newton * s;
            std::complex<double> w = denom == 0.0 ? newton : newton / denom;
            z[i] -= w;
            double step = std::abs(w);
            max_step = std::max(max_step, step / (1.0 + std::abs(z[i])));
            if (step <= kStepTol * (1.0 + std::abs(z[i]))) locked[i] = true;
        }
        if (max_step <= kStepTol) break;
    }
    result.converged = iter < kMaxIterations;
    result.iterations = std::min(iter + 1, kMaxIterations);
    for (auto root : z) result.roots.push_back(root);
    return result;
}

std::pair<std::complex<double>, std::complex<double>> basis_form_eval(const PolynomialInBasis& p,
                                                                      std::complex<double> z) {
    std::complex<double> v = 0.0, dv = 0.0;
    for (int i = 0; i <= p.ctx.d; ++i) {
        if (p.coeffs[i] == 0) continue;
        double a = to_double(p.coeffs[i]);
        auto [b, db] = basis_eval_deriv(p.ctx, i, z);
        v += a * b;
        dv += a * db;
    }
    return {v, dv};
}

RootFindResult roots_in_basis(const PolynomialInBasis& p) {
    auto result = find_roots(to_power(p));
    // guarded Newton polish on the basis form: never accept a step that
    // increases |f|
    for (auto& root : result.roots) {
        for (int step = 0; step < 3; ++step) {
            auto [v, dv] = basis_form_eval(p, root);
            double before = std::abs(v);
            if (before == 0.0 || dv == 0.0) break;
            std::complex<double> candidate = root - v / dv;
            double after = std::abs(basis_form_eval(p, candidate).first);
            int halvings = 0;
            std::complex<double> delta = v / dv;
            while (after > before && halvings < 4) {
                delta *= 0.5;
                candidate = root - delta;
                after = std::abs(basis_form_eval(p, candidate).first);
                ++halvings;
            }
            if (after > before) break;
            root = candidate;
        }
    }
    return result;
}

}  // namespace galeroot
