// Sparse bivariate polynomials over the rationals.
//
// The term map is keyed by (deg_x, deg_y) and never stores zero
// coefficients, so equality of polynomials is equality of maps.  These
// polynomials carry all the symbolic objects of the library: the
// real/imaginary parts of basis elements, the syzygy triples, and the
// tridiagonal determinants built from them.

#pragma once

#include <galeroot/rational.hpp>

#include <map>
#include <string>
#include <utility>

namespace galeroot {

class BivarPoly {
public:
    using Key = std::pair<int, int>;  // (deg_x, deg_y)
    using TermMap = std::map<Key, Rational>;

    BivarPoly() = default;

    static BivarPoly constant(Rational c);
    static BivarPoly var_x();
    static BivarPoly var_y();
    static BivarPoly monomial(int deg_x, int deg_y, Rational c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of x^a y^b (zero if absent).
    Rational coeff(int deg_x, int deg_y) const;

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;

    BivarPoly operator-() const;
    BivarPoly operator+(const BivarPoly& rhs) const;
    BivarPoly operator-(const BivarPoly& rhs) const;
    BivarPoly operator*(const BivarPoly& rhs) const;
    BivarPoly operator*(const Rational& c) const;
    BivarPoly operator/(const Rational& c) const;
    BivarPoly& operator+=(const BivarPoly& rhs);
    BivarPoly& operator-=(const BivarPoly& rhs);

    bool operator==(const BivarPoly& rhs) const { return terms_ == rhs.terms_; }

    /// result(x, y) = (*this)(x + c, y)
    BivarPoly shift_x(const Rational& c) const;

    Rational eval(const Rational& x, const Rational& y) const;

    /// Float evaluation; accumulates in long double so downstream sign
    /// decisions see at most a few ulps of noise per term.
    double eval_f(double x, double y) const;

    /// Terms of exact total degree deg, as a new polynomial.
    BivarPoly homogeneous_part(int deg) const;

    /// Substitutes y = 0, returning coefficients of x^0..x^n.
    std::map<int, Rational> restrict_y0() const;

    /// Every term has even degree in y.
    bool even_in_y() const;

    std::string to_string() const;

private:
    void insert_term(const Key& key, const Rational& c);

    TermMap terms_;
};

inline BivarPoly operator*(const Rational& c, const BivarPoly& p) { return p * c; }

}  // namespace galeroot
