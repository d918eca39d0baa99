// Tridiagonal determinants D_{j,k} of the banded Gale dual, their closed
// forms, deleted-row determinants and constraint minors.
//
// D_{j,k} is the determinant of the tridiagonal block of the dual between
// rows j and k, with boundary values D_{j,j+1} = 1, D_{j,j+2} = -q_j and
// the three-term step D <- (-q_t) D_prev - p_t r_{t-1} D_prevprev.  Zero
// loci of these polynomials are where two primal vectors w_j, w_k become
// collinear, which is what the whole root-exclusion analysis runs on.
//
// The numeric path evaluates scalar p/q/r first and runs the recursion per
// point; values are kept as sign + scaled magnitude so grid scans survive
// the astronomically large values that show up for big |z| or big d.

#pragma once

#include <galeroot/basis.hpp>

#include <cmath>
#include <vector>

namespace galeroot {

/// value = mant * 2^exp2, renormalized so |mant| stays inside a wide band
/// around 1.  Arithmetic keeps signs and log-magnitudes exact even when
/// the represented value overflows double.
struct ScaledDouble {
    double mant = 0.0;
    long exp2 = 0;

    static ScaledDouble from(double v) {
        ScaledDouble s{v, 0};
        s.normalize();
        return s;
    }
    void normalize() {
        if (mant == 0.0 || !std::isfinite(mant)) {
            exp2 = 0;
            return;
        }
        if (std::abs(mant) > 0x1p+400 || std::abs(mant) < 0x1p-400) {
            int e = 0;
            mant = std::frexp(mant, &e);
            exp2 += e;
        }
    }
    ScaledDouble operator*(const ScaledDouble& o) const {
        ScaledDouble s{mant * o.mant, exp2 + o.exp2};
        s.normalize();
        return s;
    }
    ScaledDouble operator*(double v) const { return *this * from(v); }
    ScaledDouble operator+(const ScaledDouble& o) const {
        if (mant == 0.0) return o;
        if (o.mant == 0.0) return *this;
        long e = std::max(exp2, o.exp2);
        long da = exp2 - e, db = o.exp2 - e;
        double a = da < -1060 ? 0.0 : std::ldexp(mant, static_cast<int>(da));
        double b = db < -1060 ? 0.0 : std::ldexp(o.mant, static_cast<int>(db));
        ScaledDouble s{a + b, e};
        s.normalize();
        return s;
    }
    ScaledDouble operator-(const ScaledDouble& o) const {
        ScaledDouble n{-o.mant, o.exp2};
        return *this + n;
    }
    ScaledDouble abs() const { return {std::abs(mant), exp2}; }
    int sign() const { return mant > 0 ? 1 : (mant < 0 ? -1 : 0); }
    double to_double() const { return std::ldexp(mant, static_cast<int>(std::min<long>(exp2, 9000))); }
    double log10_magnitude() const {
        if (mant == 0.0) return -HUGE_VAL;
        return std::log10(std::abs(mant)) + static_cast<double>(exp2) * 0.30102999566398120;
    }
    /// *this <= o, comparing magnitudes of nonnegative values.
    bool magnitude_le(const ScaledDouble& o) const {
        if (mant == 0.0) return true;
        if (o.mant == 0.0) return false;
        if (exp2 != o.exp2) {
            long diff = exp2 - o.exp2;
            if (diff > 1060) return false;
            if (diff < -1060) return true;
            return std::ldexp(std::abs(mant), static_cast<int>(diff)) <= std::abs(o.mant);
        }
        return std::abs(mant) <= std::abs(o.mant);
    }
};

/// Symbolic D_{j,k} plus its bookkeeping.
struct DPoly {
    BasisContext ctx;
    int j, k;
    BivarPoly poly;
};

/// The centro-symmetric presentation of the binomial D_{j,k}: points
/// a_i = i + Delta/2 with Delta = d-1-k+j, after the shift
/// z -> z - (k+j-d-1)/2.
struct ShiftedPoints {
    int d, j, k;
    std::vector<Rational> a;  // a_1..a_{k-j}, stored from index 0
    Rational shift;           // (k+j-d-1)/2
};
ShiftedPoints shifted_points(int d, int j, int k);

/// Per-point evaluation cache: scalar p/q/r, all D_{j,k} with running
/// magnitude estimates, and the prefix/suffix products entering the
/// deleted-row determinants.  `eff` truncates the band to rows 0..eff
/// (used by the chromatic translation); by default eff = ctx.d.
class DTable {
public:
    DTable(const BasisContext& ctx, double x, double y);
    DTable(const BasisContext& ctx, int eff, double x, double y);

    const BasisContext& ctx() const { return ctx_; }
    int eff() const { return eff_; }
    double x() const { return x_; }
    double y() const { return y_; }

    double p(int t) const { return p_[t]; }
    double q(int t) const { return q_[t]; }
    double r(int t) const { return r_[t]; }

    ScaledDouble d_value(int j, int k) const;  // D_{j,k}; 0 for j >= k
    ScaledDouble d_scale(int j, int k) const;  // running magnitude of the recursion

    ScaledDouble p_prefix(int j) const;  // p_0 ... p_{j-1}
    ScaledDouble r_suffix(int k) const;  // r_{k-1} ... r_{eff-2}
    ScaledDouble r_range(int a, int b) const;  // r_a ... r_b (1 if a > b)
    ScaledDouble p_range(int a, int b) const;  // p_a ... p_b (1 if a > b)

    ScaledDouble det_deleted(int j, int k) const;
    ScaledDouble minor(int j, int k, int l, int c) const;
    /// Scale estimate matching minor() (for tolerance-aware signs).
    ScaledDouble minor_scale(int j, int k, int l, int c) const;

private:
    void build();
    int idx(int j, int k) const { return j * (eff_ + 1) + k; }

    BasisContext ctx_;
    int eff_;
    double x_, y_;
    std::vector<double> p_, q_, r_;
    std::vector<ScaledDouble> d_, scale_;
    std::vector<ScaledDouble> pfx_p_, sfx_r_;
};

/// Symbolic tridiagonal determinant via the three-term recursion.
DPoly d_poly(const BasisContext& ctx, int j, int k);

/// Numeric recursion value (valid everywhere, including the real axis).
double d_eval(const BasisContext& ctx, int j, int k, ComplexPoint z);
ScaledDouble d_eval_scaled(const BasisContext& ctx, int j, int k, ComplexPoint z);

/// Closed-form evaluation via the f_{j,k} product table; refuses points
/// with |y| < 1e-8 (1 + |x|) where the division by z - conj(z) is hostile.
double d_closed_eval(const BasisContext& ctx, int j, int k, ComplexPoint z);

/// det of the dual with rows j and k deleted:
/// p_0...p_{j-1} D_{j,k} r_{k-1}...r_{d-2}.
double det_deleted(const BasisContext& ctx, int j, int k, ComplexPoint z);

/// Minor of the dual deleting rows {j,k,l} and column c (Lemma-style
/// two-case product formula).
double minor_eval(const BasisContext& ctx, int j, int k, int l, int c, ComplexPoint z);

/// det of the inequality-extended dual minus rows {j,k,l}:
/// (-1)^d sum_c (-1)^c omega_c * minor(j,k,l;c).
double det_extended(const BasisContext& ctx, int j, int k, int l,
                    const std::vector<Rational>& lambda, ComplexPoint z);
ScaledDouble det_extended_scaled(const BasisContext& ctx, const DTable& table, int j, int k, int l,
                                 const std::vector<double>& omega_values,
                                 ScaledDouble* scale_out = nullptr);

/// Scalar omega values at the table's point.
std::vector<double> omega_values(const BasisContext& ctx, const std::vector<Rational>& lambda,
                                 double x, double y);

/// Leading coefficient of the binomial D_{j,k}: its top-degree part is
/// this integer times (x^2+y^2)^(k-j-1).
long leading_asymptote(const BasisContext& ctx, int j, int k);

/// Chromatic-binomial determinant [W~]_K for K = {i,j,k} row deletions of
/// the column-combined dual at effective degree d' = d - chi:
/// lambda sum_{c=0}^{d'-3} (-1)^c [W]_{K;c} + (-1)^{d'-2} mu [W]_{K;d'-2},
/// with lambda = eps d(d-1) and mu = lambda - r_{d'-2}.
double chromatic_det(const BasisContext& ctx, int chi, const Rational& eps,
                     int i, int j, int k, ComplexPoint z);
Rational chromatic_det_exact(const BasisContext& ctx, int chi, const Rational& eps,
                             int i, int j, int k, const Rational& x, const Rational& y);

// ---- symbolic variants (identity tests, exact oracles) ----

BivarPoly det_deleted_poly(const BasisContext& ctx, int j, int k);
BivarPoly minor_poly(const BasisContext& ctx, int eff, int j, int k, int l, int c);
BivarPoly det_extended_poly(const BasisContext& ctx, const std::vector<Rational>& lambda,
                            int j, int k, int l);
BivarPoly chromatic_det_poly(const BasisContext& ctx, int chi, const Rational& eps,
                             int i, int j, int k);

/// Exact rational p/q/r at a rational point.
struct SyzygyValuesExact {
    Rational p, q, r;
};
SyzygyValuesExact syzygy_values_exact(const BasisContext& ctx, int k, const Rational& x,
                                      const Rational& y);

/// Exact D_{j,k}(x, y) by the rational recursion.
Rational d_value_exact(const BasisContext& ctx, int j, int k, const Rational& x, const Rational& y);

}  // namespace galeroot
