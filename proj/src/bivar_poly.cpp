#include <galeroot/bivar_poly.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace galeroot {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    BigInt den = 1;
    for (std::size_t t = 0; t < frac_len; ++t) den *= 10;
    return Rational(BigInt(digits), den);
}

std::string rational_to_string(const Rational& q) {
    std::ostringstream out;
    out << q;
    return out.str();
}

BivarPoly BivarPoly::constant(Rational c) { return monomial(0, 0, std::move(c)); }
BivarPoly BivarPoly::var_x() { return monomial(1, 0, 1); }
BivarPoly BivarPoly::var_y() { return monomial(0, 1, 1); }

BivarPoly BivarPoly::monomial(int deg_x, int deg_y, Rational c) {
    BivarPoly p;
    if (c != 0) p.terms_.emplace(Key{deg_x, deg_y}, std::move(c));
    return p;
}

Rational BivarPoly::coeff(int deg_x, int deg_y) const {
    auto it = terms_.find({deg_x, deg_y});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BivarPoly::total_degree() const {
    int deg = -1;
    for (const auto& [key, c] : terms_) deg = std::max(deg, key.first + key.second);
    return deg;
}

void BivarPoly::insert_term(const Key& key, const Rational& c) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly out;
    for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
    return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) insert_term(key, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
    for (const auto& [key, c] : rhs.terms_) insert_term(key, -c);
    return *this;
}

BivarPoly BivarPoly::operator+(const BivarPoly& rhs) const {
    BivarPoly out = *this;
    out += rhs;
    return out;
}

BivarPoly BivarPoly::operator-(const BivarPoly& rhs) const {
    BivarPoly out = *this;
    out -= rhs;
    return out;
}

BivarPoly BivarPoly::operator*(const BivarPoly& rhs) const {
    BivarPoly out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : rhs.terms_)
            out.insert_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
}

BivarPoly BivarPoly::operator*(const Rational& c) const {
    BivarPoly out;
    if (c == 0) return out;
    for (const auto& [key, t] : terms_) out.terms_.emplace(key, t * c);
    return out;
}

BivarPoly BivarPoly::operator/(const Rational& c) const {
    if (c == 0) throw std::invalid_argument("division by zero rational");
    BivarPoly out;
    for (const auto& [key, t] : terms_) out.terms_.emplace(key, t / c);
    return out;
}

BivarPoly BivarPoly::shift_x(const Rational& c) const {
    if (c == 0) return *this;
    BivarPoly out;
    for (const auto& [key, coef] : terms_) {
        const int a = key.first;
        // (x + c)^a expanded with binomial coefficients
        Rational cpow = 1;  // c^(a - t) built from the top down
        std::vector<Rational> cpowers(a + 1);
        for (int t = a; t >= 0; --t) {
            cpowers[t] = cpow;
            cpow *= c;
        }
        for (int t = 0; t <= a; ++t) {
            Rational term = coef * Rational(binomial_int(a, t)) * cpowers[t];
            out.insert_term({t, key.second}, term);
        }
    }
    return out;
}

Rational BivarPoly::eval(const Rational& x, const Rational& y) const {
    int max_x = 0, max_y = 0;
    for (const auto& [key, c] : terms_) {
        max_x = std::max(max_x, key.first);
        max_y = std::max(max_y, key.second);
    }
    std::vector<Rational> xp(max_x + 1), yp(max_y + 1);
    xp[0] = 1;
    for (int t = 1; t <= max_x; ++t) xp[t] = xp[t - 1] * x;
    yp[0] = 1;
    for (int t = 1; t <= max_y; ++t) yp[t] = yp[t - 1] * y;
    Rational acc = 0;
    for (const auto& [key, c] : terms_) acc += c * xp[key.first] * yp[key.second];
    return acc;
}

double BivarPoly::eval_f(double x, double y) const {
    int max_x = 0, max_y = 0;
    for (const auto& [key, c] : terms_) {
        max_x = std::max(max_x, key.first);
        max_y = std::max(max_y, key.second);
    }
    std::vector<long double> xp(max_x + 1), yp(max_y + 1);
    xp[0] = 1.0L;
    for (int t = 1; t <= max_x; ++t) xp[t] = xp[t - 1] * x;
    yp[0] = 1.0L;
    for (int t = 1; t <= max_y; ++t) yp[t] = yp[t - 1] * y;
    long double acc = 0.0L;
    for (const auto& [key, c] : terms_) acc += to_long_double(c) * xp[key.first] * yp[key.second];
    return static_cast<double>(acc);
}

BivarPoly BivarPoly::homogeneous_part(int deg) const {
    BivarPoly out;
    for (const auto& [key, c] : terms_)
        if (key.first + key.second == deg) out.terms_.emplace(key, c);
    return out;
}

std::map<int, Rational> BivarPoly::restrict_y0() const {
    std::map<int, Rational> out;
    for (const auto& [key, c] : terms_)
        if (key.second == 0) out[key.first] = c;
    return out;
}

bool BivarPoly::even_in_y() const {
    for (const auto& [key, c] : terms_)
        if (key.second % 2 != 0) return false;
    return true;
}

std::string BivarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest total degree first, for readability
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, c] = *it;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        Rational a = abs(c);
        bool has_vars = key.first > 0 || key.second > 0;
        if (a != 1 || !has_vars) out << a;
        if (key.first > 0) {
            out << "x";
            if (key.first > 1) out << "^" << key.first;
        }
        if (key.second > 0) {
            out << "y";
            if (key.second > 1) out << "^" << key.second;
        }
    }
    return out.str();
}

}  // namespace galeroot
