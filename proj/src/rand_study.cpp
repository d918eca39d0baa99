#include <galeroot/rand_study.hpp>

#include <cmath>

namespace galeroot {

std::vector<PolynomialInBasis> sample(const SampleSpec& spec) {
    if (spec.count < 1) throw std::invalid_argument("sample count must be >= 1");
    if (spec.bound <= 0) throw std::invalid_argument("coefficient bound must be positive");
    const int d = spec.ctx.d;
    if (spec.zero_prefix < 0 || spec.zero_prefix > d)
        throw std::invalid_argument("zero prefix out of range");
    if (spec.zero_prefix > 0 && spec.ends_nonzero)
        throw std::invalid_argument("zero prefix conflicts with ends_nonzero");

    int project_index = -1;
    if (spec.constraint && spec.constraint->kind == LinearConstraint::Kind::Equation) {
        spec.constraint->validate(d);
        for (int i = d; i >= spec.zero_prefix; --i)
            if (spec.constraint->lambda[i] != 0) {
                project_index = i;
                break;
            }
        if (project_index < 0) throw std::invalid_argument("equation touches only zeroed coefficients");
    }

    std::vector<PolynomialInBasis> out;
    out.reserve(spec.count);
    for (int index = 0; index < spec.count; ++index) {
        std::uint64_t counter = 0;
        auto draw = [&]() {
            return spec.bound * rng_uniform01(rng_draw(spec.seed, index, counter++));
        };

        std::vector<double> a(d + 1);
        long rejections = 0;
        while (true) {
            for (int i = 0; i <= d; ++i) a[i] = i < spec.zero_prefix ? 0.0 : draw();
            if (spec.ends_nonzero) {
                while (a[0] == 0.0) a[0] = draw();
                while (a[d] == 0.0) a[d] = draw();
            }
            if (!spec.constraint) break;
            const auto& c = *spec.constraint;
            if (c.kind == LinearConstraint::Kind::Equation) {
                double rest = 0;
                for (int i = 0; i <= d; ++i)
                    if (i != project_index) rest += to_double(c.lambda[i]) * a[i];
                double solved = -rest / to_double(c.lambda[project_index]);
                if (solved >= 0.0 && (!spec.ends_nonzero || project_index != d || solved > 0.0)) {
                    a[project_index] = solved;
                    break;
                }
            } else {
                double s = 0;
                for (int i = 0; i <= d; ++i) s += to_double(c.lambda[i]) * a[i];
                bool ok = c.is_strict() ? s < 0.0 : s <= 0.0;
                if (ok) break;
            }
            if (++rejections > 1000000)
                throw sampling_error("constraint rejection rate too high (> 1e6 rejections)");
        }

        std::vector<Rational> coeffs(d + 1);
        for (int i = 0; i <= d; ++i) coeffs[i] = Rational(a[i]);  // dyadic, exact
        out.emplace_back(spec.ctx, std::move(coeffs));
    }
    return out;
}

std::complex<double> barycenter(const BasisContext& ctx, std::complex<double> z) {
    // extended-precision accumulation: the individual b_i can dwarf the sum
    std::complex<long double> acc = 0.0L;
    const std::complex<long double> zl(z.real(), z.imag());
    for (int i = 0; i <= ctx.d; ++i) {
        auto form = detail::factor_form(ctx, i);
        std::complex<long double> v = static_cast<long double>(form.sign);
        for (const auto& c : form.offsets) v *= zl + to_long_double(c);
        if (form.denom != 1) v /= form.denom.convert_to<long double>();
        acc += v;
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::vector<RootSample> batch_roots(const std::vector<PolynomialInBasis>& batch) {
    std::vector<RootSample> out;
    for (std::size_t index = 0; index < batch.size(); ++index) {
        const auto& p = batch[index];
        auto power = to_power(p);
        auto result = roots_in_basis(p);
        for (auto z : result.roots) {
            auto [res, bound] = power_residual(power, z);
            RootSample s;
            s.poly_index = static_cast<int>(index);
            s.re = z.real();
            s.im = z.imag();
            s.is_real = std::abs(z.imag()) <= 1e-8 * (1.0 + std::abs(z));
            s.residual = bound > 0 ? res / bound : res;
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace galeroot
