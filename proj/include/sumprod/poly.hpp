#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumprod/rational.hpp"

namespace sumprod {

/// Dense univariate polynomial over Q; coeffs()[i] multiplies x^i.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and its degree() is std::nullopt (standing in for -infinity).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, std::size_t degree);
    static Poly identity();
    /// slope * x + intercept
    static Poly linear(const Rational& slope, const Rational& intercept);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    std::optional<std::size_t> degree() const;
    const Rational& leading() const;
    Rational coeff(std::size_t i) const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    Rational operator()(const Rational& x) const;

    Poly monic() const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly lhs, const Rational& s) { return lhs *= s; }
    friend Poly operator*(const Rational& s, Poly rhs) { return rhs *= s; }
    friend Poly operator-(Poly p);
    friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// Euclidean division; throws DomainError on a zero divisor.
DivMod divmod(const Poly& dividend, const Poly& divisor);
/// Division that must leave no remainder (InvariantError otherwise).
Poly exact_div(const Poly& dividend, const Poly& divisor);

Poly pow(const Poly& base, unsigned exp);
Poly compose(const Poly& outer, const Poly& inner);
Poly derivative(const Poly& p);
/// p(lambda * x + nu)
Poly affine_substitute(const Poly& p, const Rational& lambda, const Rational& nu);

/// Monic gcd. gcd(p, 0) = monic(p); both zero is a DomainError.
Poly gcd(const Poly& p, const Poly& q);

/// Positive rational multiple with coprime integer coefficients and the same
/// sign pattern as p (the scale factor is always positive).
Poly primitive_part(const Poly& p);
/// Integer coefficients of primitive_part(p), low degree first.
std::vector<Integer> primitive_integer_coeffs(const Poly& p);

/// Interchange format: low-degree-first canonical rationals.
std::vector<std::string> to_interchange(const Poly& p);
Poly from_interchange(std::span<const std::string> coeffs);
/// "c0,c1,...,cn" as accepted on the command line.
Poly parse_poly_csv(std::string_view csv);

/// Human readable, descending powers, e.g. "2*x^4 - x^2".
std::string to_pretty(const Poly& p);

}  // namespace sumprod
