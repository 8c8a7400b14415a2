#include "sumprod/families.hpp"

#include <mutex>
#include <numeric>
#include <vector>

#include "sumprod/error.hpp"

namespace sumprod {

ProgressionSumSpec::ProgressionSumSpec(std::int64_t a_, std::int64_t b_, unsigned k_)
    : a(a_), b(b_), k(k_), coprime(std::gcd(a_, b_) == 1) {
    if (a == 0) throw DomainError("power sum needs a != 0");
    if (k == 0) throw DomainError("power sum needs k >= 1");
}

ProductSpec::ProductSpec(std::int64_t c_, unsigned ell_) : c(c_), ell(ell_) {
    if (ell < 2) throw DomainError("product polynomial needs ell >= 2");
}

Rational bernoulli_number(unsigned n) {
    static std::mutex mutex;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mutex);
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    while (table.size() <= n) {
        const unsigned long m = table.size();
        Rational acc = 0;
        for (unsigned long j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * table[j];
        table.push_back(-acc / Rational(static_cast<unsigned long>(m + 1)));
    }
    return table[n];
}

Poly bernoulli_poly(unsigned n) {
    std::vector<Rational> c(n + 1);
    for (unsigned j = 0; j <= n; ++j) c[n - j] = Rational(binomial(n, j)) * bernoulli_number(j);
    return Poly(std::move(c));
}

Poly power_sum_poly(const ProgressionSumSpec& spec) {
    const Rational ratio = make_rational(to_integer(spec.b), to_integer(spec.a));
    const Poly bern = bernoulli_poly(spec.k + 1);
    Poly shifted = affine_substitute(bern, 1, ratio) - Poly::constant(bern(ratio));
    const Rational scale = Rational(pow(to_integer(spec.a), spec.k)) / Rational(static_cast<unsigned long>(spec.k + 1));
    return shifted * scale;
}

Poly power_sum_poly(std::int64_t a, std::int64_t b, unsigned k) { return power_sum_poly(ProgressionSumSpec(a, b, k)); }

Poly product_poly(const ProductSpec& spec) {
    Poly out = Poly::constant(1);
    const Integer c = to_integer(spec.c);
    for (unsigned j = 0; j < spec.ell; ++j) out *= Poly::linear(1, Rational(c * j));
    return out;
}

Poly product_poly(std::int64_t c, unsigned ell) { return product_poly(ProductSpec(c, ell)); }

Poly product_hat_poly(std::int64_t c, unsigned m) {
    if (m == 0) throw DomainError("hat product needs m >= 1");
    Poly out = Poly::constant(1);
    const Integer cc = to_integer(c);
    for (unsigned j = 1; j <= m; ++j) {
        Integer odd = cc * (2 * j - 1);
        out *= Poly::linear(1, -make_rational(odd * odd, 4));
    }
    return out;
}

Poly power_sum_hat_poly(std::int64_t a, std::int64_t b, unsigned v) {
    if (v == 0) throw DomainError("hat power sum needs v >= 1");
    const Poly s = power_sum_poly(a, b, 2 * v - 1);
    const Rational shift = Rational(1, 2) - make_rational(to_integer(b), to_integer(a));
    const Poly even = affine_substitute(s, 1, shift);
    std::vector<Rational> hat(v + 1);
    auto c = even.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i % 2 == 1) {
            if (c[i] != 0) throw InvariantError("shifted odd power sum is not an even polynomial");
        } else {
            hat[i / 2] = c[i];
        }
    }
    return Poly(std::move(hat));
}

Poly dickson_poly(unsigned mu, const Rational& delta) {
    if (mu == 0) throw DomainError("Dickson polynomial needs mu >= 1");
    std::vector<Rational> c(mu + 1);
    for (unsigned i = 0; 2 * i <= mu; ++i) {
        Rational d = make_rational(Integer(mu) * binomial(mu - i, i), Integer(mu - i));
        c[mu - 2 * i] = d * pow(Rational(-delta), static_cast<long>(i));
    }
    return Poly(std::move(c));
}

Poly falling_product_plus_q(unsigned ell, const Rational& q) {
    if (ell == 0) throw DomainError("falling product needs ell >= 1");
    Poly out = Poly::constant(1);
    for (unsigned j = 0; j < ell; ++j) out *= Poly::linear(1, static_cast<unsigned long>(j));
    return out + Poly::constant(q);
}

}  // namespace sumprod
