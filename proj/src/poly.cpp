#include "sumprod/poly.hpp"

#include <algorithm>
#include <utility>

#include "sumprod/error.hpp"

namespace sumprod {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::identity() { return monomial(1, 1); }

Poly Poly::linear(const Rational& slope, const Rational& intercept) {
    return Poly(std::vector<Rational>{intercept, slope});
}

std::optional<std::size_t> Poly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

const Rational& Poly::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly out = *this;
    Rational inv = 1 / leading();
    for (auto& c : out.coeffs_) c *= inv;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Poly operator-(Poly p) {
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

DivMod divmod(const Poly& dividend, const Poly& divisor) {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    auto rem = std::vector<Rational>(dividend.coeffs().begin(), dividend.coeffs().end());
    const std::size_t dn = divisor.coeffs().size();
    if (rem.size() < dn) return {Poly(), dividend};
    std::vector<Rational> quot(rem.size() - dn + 1);
    const Rational inv_lead = 1 / divisor.leading();
    for (std::size_t i = rem.size(); i-- >= dn;) {
        Rational factor = rem[i] * inv_lead;
        if (factor == 0) continue;
        const std::size_t shift = i - (dn - 1);
        quot[shift] = factor;
        for (std::size_t j = 0; j < dn; ++j) rem[shift + j] -= factor * divisor.coeffs()[j];
    }
    rem.resize(dn - 1);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& dividend, const Poly& divisor) {
    auto [q, r] = divmod(dividend, divisor);
    if (!r.is_zero()) throw InvariantError("inexact polynomial division");
    return q;
}

Poly pow(const Poly& base, unsigned exp) {
    Poly result = Poly::constant(1);
    Poly sq = base;
    while (exp != 0) {
        if (exp & 1U) result *= sq;
        exp >>= 1U;
        if (exp != 0) sq *= sq;
    }
    return result;
}

Poly compose(const Poly& outer, const Poly& inner) {
    Poly acc;
    auto c = outer.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= inner;
        acc += Poly::constant(*it);
    }
    return acc;
}

Poly derivative(const Poly& p) {
    auto c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Rational> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
    return Poly(std::move(out));
}

Poly affine_substitute(const Poly& p, const Rational& lambda, const Rational& nu) {
    return compose(p, Poly::linear(lambda, nu));
}

Poly gcd(const Poly& p, const Poly& q) {
    if (p.is_zero() && q.is_zero()) throw DomainError("gcd of two zero polynomials");
    Poly a = p.monic();
    Poly b = q.monic();
    while (!b.is_zero()) {
        Poly r = divmod(a, b).remainder.monic();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<Integer> primitive_integer_coeffs(const Poly& p) {
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    out.reserve(p.coeffs().size());
    Integer content = 0;
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (den_lcm / c.get_den());
        content = gcd(content, v);
        out.push_back(std::move(v));
    }
    if (content > 1)
        for (auto& v : out) v /= content;
    return out;
}

Poly primitive_part(const Poly& p) {
    auto ints = primitive_integer_coeffs(p);
    std::vector<Rational> out(ints.begin(), ints.end());
    return Poly(std::move(out));
}

std::vector<std::string> to_interchange(const Poly& p) {
    std::vector<std::string> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(to_string(c));
    return out;
}

Poly from_interchange(std::span<const std::string> coeffs) {
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& s : coeffs) v.push_back(parse_rational(s));
    return Poly(std::move(v));
}

Poly parse_poly_csv(std::string_view csv) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto comma = csv.find(',', start);
        auto piece = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        parts.emplace_back(piece);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return from_interchange(parts);
}

std::string to_pretty(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    auto c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        const Rational& coef = c[i];
        if (coef == 0) continue;
        Rational mag = abs(coef);
        if (out.empty()) {
            if (coef < 0) out += "-";
        } else {
            out += coef < 0 ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (!unit || i == 0) {
            out += to_string(mag);
            if (i > 0) out += "*";
        }
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace sumprod
