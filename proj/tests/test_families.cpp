#include <numeric>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "sumprod/error.hpp"
#include "sumprod/families.hpp"

using namespace sumprod;

namespace {
Poly P(std::vector<Rational> c) { return Poly(std::move(c)); }
Rational Q(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == Q(-1, 2));
    CHECK(bernoulli_number(4) == Q(-1, 30));
    CHECK(bernoulli_number(6) == Q(1, 42));
    const auto ref = oracle::akiyama_tanigawa(40);
    for (unsigned n = 0; n <= 40; ++n) CHECK(bernoulli_number(n) == ref[n]);
}

TEST_CASE("bernoulli table is safe under concurrent first use") {
    std::vector<std::thread> pool;
    std::vector<Rational> got(8);
    for (unsigned i = 0; i < 8; ++i) pool.emplace_back([&, i] { got[i] = bernoulli_number(50 + i % 2); });
    for (auto& t : pool) t.join();
    for (unsigned i = 0; i < 8; ++i) CHECK(got[i] == bernoulli_number(50 + i % 2));
}

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_poly(1) == P({Q(-1, 2), 1}));
    CHECK(bernoulli_poly(2) == P({Q(1, 6), -1, 1}));
    CHECK(bernoulli_poly(4) == P({Q(-1, 30), 0, 1, -2, 1}));
    const Poly one = Poly::linear(1, 1);
    for (unsigned n = 1; n <= 20; ++n) {
        const Poly bn = bernoulli_poly(n);
        CHECK(compose(bn, one) - bn == Poly::monomial(n, n - 1));
        CHECK(derivative(bn) == bernoulli_poly(n - 1) * Rational(n));
    }
    const Poly reflect = Poly::linear(-1, 1);
    for (unsigned l = 1; l <= 10; ++l) CHECK(compose(bernoulli_poly(2 * l), reflect) == bernoulli_poly(2 * l));
}

TEST_CASE("power sums: closed forms") {
    CHECK(power_sum_poly(2, 1, 3) == P({0, 0, -1, 0, 2}));
    const Poly s5 = P({0, 0, 7, 0, -20, 0, 16}) * Q(1, 3);
    CHECK(power_sum_poly(2, 1, 5) == s5);
    CHECK(power_sum_poly(1, 2, 1) == P({0, 3, 1}) * Q(1, 2));
    for (long a = 1; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b) {
            const Rational A(a), B(b);
            CHECK(power_sum_poly(a, b, 1) == P({0, 2 * B - A, A}) * Q(1, 2));
            CHECK(power_sum_poly(a, b, 2) == P({0, A * A / 6 - A * B + B * B, A * (2 * B - A) / 2, A * A / 3}));
        }
    CHECK_THROWS_AS(power_sum_poly(0, 1, 2), DomainError);
    CHECK_THROWS_AS(ProgressionSumSpec(1, 1, 0), DomainError);
    CHECK(ProgressionSumSpec(4, 6, 2).coprime == false);
    CHECK(ProgressionSumSpec(4, 5, 2).coprime == true);
}

TEST_CASE("power sums agree with direct summation") {
    for (unsigned k = 1; k <= 10; ++k)
        for (long a = 1; a <= 5; ++a)
            for (long b = 1; b <= 5; ++b) {
                if (std::gcd(a, b) != 1) continue;
                const Poly s = power_sum_poly(a, b, k);
                CHECK(s.coeff(0) == 0);
                CHECK(*s.degree() == k + 1);
                for (long x = 0; x <= 50; ++x) REQUIRE(s(Rational(x)) == Rational(oracle::direct_power_sum(a, b, k, x)));
                const Poly step = compose(s, Poly::linear(1, 1)) - s;
                CHECK(step == pow(Poly::linear(a, b), k));
            }
}

TEST_CASE("leading expansion of S_{2,1}^k for odd k") {
    // Three top nonzero coefficients: 2^k/(k+1) times 1, -(k+1)k/24 and
    // 7(k+1)k(k-1)(k-2)/5760 (the x^{k-3} term comes from B_4(1/2) = 7/240).
    for (unsigned k : {5u, 7u, 9u, 11u}) {
        const Poly s = power_sum_poly(2, 1, k);
        const Rational lead = Rational(pow(Integer(2), k)) / (k + 1);
        const Rational K(k);
        CHECK(s.coeff(k + 1) == lead);
        CHECK(s.coeff(k) == 0);
        CHECK(s.coeff(k - 1) == lead * -(K + 1) * K / 24);
        CHECK(s.coeff(k - 2) == 0);
        const Rational third = (K + 1) * K * (K - 1) * (K - 2);
        CHECK(s.coeff(k - 3) == lead * 7 * third / 5760);
        CHECK(s.coeff(k - 3) != lead * third / 384);
    }
}

TEST_CASE("product polynomials") {
    CHECK(product_poly(1, 4) == P({0, 6, 11, 6, 1}));
    CHECK(product_poly(2, 2) == P({0, 2, 1}));
    CHECK(product_poly(0, 5) == Poly::monomial(1, 5));
    CHECK_THROWS_AS(product_poly(1, 1), DomainError);
    for (long c : {-3L, -2L, -1L, 1L, 2L, 3L})
        for (unsigned l = 2; l <= 8; ++l) {
            const Poly r = product_poly(c, l);
            CHECK(r.leading() == 1);
            for (unsigned j = 0; j < l; ++j) CHECK(r(Rational(-static_cast<long>(j) * c)) == 0);
            CHECK(r == affine_substitute(product_poly(1, l), Q(1, c), 0) * Rational(pow(Integer(c), l)));
        }
}

TEST_CASE("hat polynomials") {
    CHECK(product_hat_poly(1, 2) == P({Q(-1, 4), 1}) * P({Q(-9, 4), 1}));
    CHECK(product_hat_poly(2, 1) == P({-1, 1}));
    for (long c : {-2L, -1L, 1L, 2L, 3L})
        for (unsigned m = 1; m <= 4; ++m) {
            const Poly square = pow(Poly::linear(1, Q((2 * m - 1) * c, 2)), 2);
            CHECK(compose(product_hat_poly(c, m), square) == product_poly(c, 2 * m));
        }
    CHECK(power_sum_hat_poly(2, 1, 2) == P({0, -1, 2}));
    CHECK(power_sum_hat_poly(1, 0, 1) == P({Q(-1, 8), Q(1, 2)}));
    for (long a = 1; a <= 5; ++a)
        for (long b = 1; b <= 5; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const Poly square = pow(Poly::linear(1, Q(b, a) - Q(1, 2)), 2);
            for (unsigned v = 1; v <= 5; ++v) {
                const Poly hat = power_sum_hat_poly(a, b, v);
                CHECK(compose(hat, square) == power_sum_poly(a, b, 2 * v - 1));
                const Rational root = Q(1, 2) - Q(b, a);
                CHECK(hat(root * root) == 0);
            }
        }
}

TEST_CASE("dickson polynomials") {
    const Rational d = Q(5, 7);
    CHECK(dickson_poly(2, d) == P({-2 * d, 0, 1}));
    CHECK(dickson_poly(3, 1) == P({0, -3, 0, 1}));
    CHECK(dickson_poly(3, 3)(Q(2) + Q(3, 2)) == Q(91, 8));
    CHECK(dickson_poly(1, 4) == Poly::identity());
    CHECK_THROWS_AS(dickson_poly(0, 1), DomainError);
    // Recurrence D_n = x D_{n-1} - delta D_{n-2}.
    for (unsigned n = 3; n <= 10; ++n)
        CHECK(dickson_poly(n, d) == Poly::identity() * dickson_poly(n - 1, d) - dickson_poly(n - 2, d) * d);
}

TEST_CASE("falling product plus q") {
    CHECK(falling_product_plus_q(4, 1) == P({1, 6, 11, 6, 1}));
    CHECK(falling_product_plus_q(4, Q(-9, 16)) == P({Q(-9, 16), 6, 11, 6, 1}));
    CHECK(falling_product_plus_q(2, 0) == P({0, 1, 1}));
    CHECK(falling_product_plus_q(1, 3) == P({3, 1}));
}
