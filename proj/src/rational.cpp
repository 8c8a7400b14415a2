#include "sumprod/rational.hpp"

#include <cctype>

#include "sumprod/error.hpp"

namespace sumprod {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!all_digits(digits)) throw DomainError("malformed integer '" + std::string(text) + "'");
    return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    auto den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw DomainError("malformed rational '" + std::string(text) + "'");
    return make_rational(parse_integer(text.substr(0, slash)), Integer(std::string(den_text), 10));
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

int sign(const Rational& r) { return sgn(r); }
int sign(const Integer& n) { return sgn(n); }

Integer pow(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational pow(const Rational& base, long exp) {
    if (exp >= 0) {
        return make_rational(pow(base.get_num(), static_cast<unsigned long>(exp)),
                             pow(base.get_den(), static_cast<unsigned long>(exp)));
    }
    if (base == 0) throw DomainError("zero raised to a negative power");
    auto e = static_cast<unsigned long>(-exp);
    return make_rational(pow(base.get_den(), e), pow(base.get_num(), e));
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw DomainError("isqrt of a negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::optional<Integer> exact_root(const Integer& n, unsigned long k) {
    if (k == 0) throw DomainError("zeroth root");
    if (n < 0 && k % 2 == 0) return std::nullopt;
    Integer r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0) return std::nullopt;
    return r;
}

std::optional<Rational> exact_root(const Rational& r, unsigned long k) {
    auto num = exact_root(r.get_num(), k);
    if (!num) return std::nullopt;
    auto den = exact_root(r.get_den(), k);
    if (!den) return std::nullopt;
    return make_rational(*num, *den);
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace sumprod
