// Random polynomial sampling and the barycenter clustering study.
//
// The sampler draws coefficient vectors uniformly from [0, N]^{d+1} with a
// counter-based PRNG (the SplitMix64 finalizer keyed on seed, polynomial
// index and draw counter), so batches are reproducible regardless of
// parallel scheduling.  The barycenter beta(z) = sum b_i(z) predicts where
// roots of such random polynomials clump: small |beta| means the expected
// value of a random polynomial is small there.

#pragma once

#include <galeroot/gale_dual.hpp>
#include <galeroot/root_find.hpp>

#include <cstdint>
#include <optional>

namespace galeroot {

/// SplitMix64 finalizer; the draw stream is value(seed, index, counter).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t rng_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    return splitmix64(splitmix64(seed ^ splitmix64(stream)) + counter);
}

inline double rng_uniform01(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

struct SampleSpec {
    BasisContext ctx;
    double bound = 1.0;  // N: coefficients are uniform in [0, N]
    int count = 0;
    std::uint64_t seed = 0;
    bool ends_nonzero = false;
    int zero_prefix = 0;  // force a_0 = ... = a_{zero_prefix-1} = 0
    std::optional<LinearConstraint> constraint;  // rejection (inequalities) or
                                                 // projection (equations)
};

class sampling_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Deterministic for a fixed seed; inequality constraints are handled by
/// rejection (capped at 1e6 rejections per polynomial), equations by
/// projecting the last constrained coefficient when that keeps it
/// nonnegative, rejecting otherwise.
std::vector<PolynomialInBasis> sample(const SampleSpec& spec);

/// beta(z) = sum_i b_i(z).
std::complex<double> barycenter(const BasisContext& ctx, std::complex<double> z);

struct RootSample {
    int poly_index;
    double re, im;
    bool is_real;
    double residual;  // |f(root)| relative to sum |c_j||root|^j
};

/// Roots of a sampled batch with residuals; real/non-real classification at
/// |Im| <= 1e-8 (1 + |z|).
std::vector<RootSample> batch_roots(const std::vector<PolynomialInBasis>& batch);

}  // namespace galeroot
