// Sign-set membership tests for the root exclusion regions.
//
// A non-real z can be a root of some nonnegative-coefficient polynomial
// only if some triple of primal vectors w_i, w_j, w_k forms a nonnegative
// circuit; dually, the sign set sigma_{i,j,k}(z) built from three
// tridiagonal determinants must avoid containing both +1 and -1.  A point
// where EVERY triple produces both signs is provably root-free.  Signs are
// derived through an explicit tolerance layer: a value too close to zero
// relative to the running magnitude of its recursion counts as 0, which
// can only ever make the exclusion test more conservative.
//
// Constraint-aware variants run the same game on inequality-extended or
// column-combined duals.  The binomial basis additionally gets the
// viewing-angle formulation: z lies inside the l-th oval of D_{j,k} iff
// the total angle under which z sees the segments [-a_i, a_i] exceeds
// l*pi; that form is far better conditioned near the outermost oval than
// the determinant signs.

#pragma once

#include <galeroot/determinant.hpp>
#include <galeroot/gale_dual.hpp>

#include <optional>
#include <vector>

namespace galeroot {

inline constexpr double kSignTolAbs = 1e-12;
inline constexpr double kSignTolRel = 1e-9;

/// -1, 0, +1 with the tolerance policy: |v| <= tol_abs + tol_rel * scale
/// collapses to 0.
int sign_with_tolerance(const ScaledDouble& value, const ScaledDouble& scale);

struct SignSet {
    bool has_neg = false, has_zero = false, has_pos = false;

    void insert(int s) {
        if (s < 0) has_neg = true;
        else if (s > 0) has_pos = true;
        else has_zero = true;
    }
    bool contains_plus_minus() const { return has_neg && has_pos; }
    bool empty() const { return !(has_neg || has_zero || has_pos); }
    bool operator==(const SignSet&) const = default;
};

struct OvalMembership {
    double angle_sum = 0.0;  // radians, in [0, (k-j) pi]
    int oval_index = 0;      // 0 = outside all ovals
};

struct Circle {
    std::complex<double> center;
    double radius;
};

/// sigma_{i,j,k}(z) from Prop-style signs of the three determinants.
SignSet sigma_triple(const BasisContext& ctx, int i, int j, int k, ComplexPoint z);
SignSet sigma_triple(const DTable& table, int i, int j, int k);

/// z may be witnessed as a root by the triple (i,j,k).
bool in_S_ijk(const BasisContext& ctx, int i, int j, int k, ComplexPoint z);

/// Scan-order hint: remembers the last witnessing triple of a row scan.
struct ExclusionHint {
    int i = -1, j = -1, k = -1;
    bool valid() const { return i >= 0; }
};

/// True certifies that no nonnegative-coefficient polynomial in this basis
/// vanishes at z (all triples produce both signs).
bool excluded(const BasisContext& ctx, ComplexPoint z, ExclusionHint* hint = nullptr);

/// Constructive converse: a nonnegative, nonzero coefficient vector with
/// sum a_i b_i(z) ~ 0 (relative residual <= 1e-9), from a pair or triple
/// circuit; nullopt iff the point is excluded (up to tolerance).
std::optional<std::vector<double>> certificate(const BasisContext& ctx, ComplexPoint z);

/// Viewing-angle sum for the binomial basis in centro-symmetric
/// coordinates; conjugates z into the upper half plane first.
OvalMembership angle_sum(const BasisContext& ctx, int j, int k, ComplexPoint z);

/// angle_sum(0, d, z) >= pi - tol.
bool in_outermost_closure(const BasisContext& ctx, ComplexPoint z, double tol = 1e-9);

/// The k-j-1 limiting circles of D_{j,k} for d large with respect to k-j.
std::vector<Circle> limiting_circles(int d, int j, int k);

/// Sign set for an extended dual and an admissible index set J (sorted).
SignSet sigma_quad(const ExtendedDual& dual, const std::vector<int>& J, ComplexPoint z);

struct ConstraintOptions {
    /// Weak inequalities also admit hyperplanes through the new rows
    /// (m = 1 only); the default is the strict reading.
    bool weak_inequalities = false;
};

/// Exclusion with constraints: every admissible J must produce both signs.
bool excluded_with_constraints(const ExtendedDual& dual, ComplexPoint z,
                               const ConstraintOptions& opts = {});

/// Per-point evaluator shared by sigma_quad / excluded_with_constraints;
/// build once per point when testing many index sets.
class ConstraintEvaluator {
public:
    ConstraintEvaluator(const ExtendedDual& dual, ComplexPoint z);

    SignSet sigma(const std::vector<int>& J) const;
    bool excluded(const ConstraintOptions& opts = {}) const;
    const DTable& table() const { return table_; }

private:
    SignSet sigma_band_rows(const std::vector<int>& J) const;
    SignSet sigma_dense(const std::vector<int>& J) const;
    std::pair<ScaledDouble, ScaledDouble> dense_det_without(const std::vector<int>& deleted) const;

    const ExtendedDual& dual_;
    ComplexPoint z_;
    DTable table_;
    std::vector<std::vector<double>> omega_;        // per inequality row
    std::vector<std::vector<double>> dense_rows_;   // materialized matrix values
};

/// Open-sector test for the power basis: no roots with |arg z| < pi/d.
bool power_sector_excluded(int d, ComplexPoint z);

/// Alternating-power counterpart: the excluded cone is |arg z| above
/// (1 - 1/(d-kappa)) pi.
bool alt_power_sector(int d, int kappa, ComplexPoint z);

/// Outside the outermost oval the primal vectors span a pointed cone with
/// facets w_0, w_d and the rest in cyclic order between them.
bool cone_order_check(const BasisContext& ctx, ComplexPoint z);

/// w_j(z) . w_k(z) as real vectors (orientation checks on the ovals).
double primal_dot(const BasisContext& ctx, int j, int k, ComplexPoint z);

}  // namespace galeroot
