#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sumprod/error.hpp"
#include "sumprod/families.hpp"
#include "sumprod/zeros.hpp"

using namespace sumprod;

namespace {
Poly P(std::vector<Rational> c) { return Poly(std::move(c)); }
Rational Q(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("zero reports") {
    const auto r1 = zero_report(bernoulli_poly(4) + Poly::constant(Q(1, 30)));
    CHECK(r1.simple_zero_count == 0);
    CHECK(bernoulli_poly(4) + Poly::constant(Q(1, 30)) == pow(P({0, -1, 1}), 2));
    const Poly b4m = bernoulli_poly(4) - Poly::constant(Q(7, 240));
    CHECK(zero_report(b4m).simple_zero_count == 2);
    CHECK(b4m == P({Q(-1, 4), -1, 1}) * pow(P({Q(-1, 2), 1}), 2));
    CHECK(zero_report(bernoulli_poly(6)).has_nonreal_zero);
    CHECK(zero_report(falling_product_plus_q(4, 1)).simple_zero_count == 0);
    CHECK_THROWS_AS(zero_report(Poly::constant(2)), DomainError);
}

TEST_CASE("exception tables violate the three-simple-zeros bound") {
    // Regression values from the square-free decomposition.
    const std::vector<std::size_t> bern_counts{0, 2, 2, 2};
    REQUIRE(bernoulli_shift_exceptions().size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& e = bernoulli_shift_exceptions()[i];
        const auto check = bernoulli_shift_simple_zeros(e.k, e.d);
        CHECK(check.exceptional);
        CHECK(check.count == bern_counts[i]);
        CHECK(check.count < 3);
        CHECK(check.meets_lemma);
    }
    const std::vector<std::size_t> fall_counts{0, 2};
    REQUIRE(falling_product_exceptions().size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        const auto& e = falling_product_exceptions()[i];
        const auto check = falling_product_simple_zeros(e.ell, e.q);
        CHECK(check.exceptional);
        CHECK(check.count == fall_counts[i]);
        CHECK(check.meets_lemma);
    }
    // B_6 - 1/42 = x^2 (x-1)^2 (2x^2 - 2x - 1) / 2.
    CHECK(bernoulli_poly(6) - Poly::constant(Q(1, 42)) ==
          pow(P({0, -1, 1}), 2) * P({-1, -2, 2}) * Q(1, 2));
    CHECK(falling_product_plus_q(4, Q(-9, 16)) == P({Q(-1, 4), 3, 1}) * pow(P({Q(3, 2), 1}), 2));
}

TEST_CASE("simple zero checks") {
    CHECK(bernoulli_shift_simple_zeros(5, 0).count >= 3);
    CHECK(bernoulli_shift_simple_zeros(5, 0).meets_lemma);
    CHECK_FALSE(bernoulli_shift_simple_zeros(5, 0).exceptional);
    CHECK(falling_product_simple_zeros(3, 0).count == 3);
    CHECK_THROWS_AS(bernoulli_shift_simple_zeros(2, 0), DomainError);
    CHECK_THROWS_AS(falling_product_simple_zeros(2, 0), DomainError);
}

TEST_CASE("all zeros simple") {
    for (unsigned k = 1; k <= 20; ++k) CHECK(all_zeros_simple(bernoulli_poly(k)));
    CHECK_FALSE(all_zeros_simple(P({0, 0, -1, 1})));
    CHECK(all_zeros_simple(oracle::from_roots({Q(1), Q(-2), Q(3, 4), Q(5)})));
}

TEST_CASE("falsification grid") {
    const auto grid = falsification_grid(500);
    CHECK(grid.size() == 500);
    std::set<Rational> distinct(grid.begin(), grid.end());
    CHECK(distinct.size() == 500);
    CHECK(grid == falsification_grid(500));
    CHECK(std::find(grid.begin(), grid.end(), Q(-7, 3)) != grid.end());
}

TEST_CASE("falsification sweeps find no counterexample") {
    auto grid = falsification_grid(500);
    for (const auto& e : bernoulli_shift_exceptions()) grid.push_back(e.d);
    for (const auto& e : falling_product_exceptions()) grid.push_back(e.q);
    for (unsigned k = 3; k <= 10; ++k)
        for (const auto& d : grid) REQUIRE(bernoulli_shift_simple_zeros(k, d).meets_lemma);
    for (unsigned k = 7; k <= 14; ++k)
        for (const auto& d : grid) REQUIRE(zero_report(bernoulli_poly(k) + Poly::constant(d)).has_nonreal_zero);
    for (unsigned l = 3; l <= 8; ++l)
        for (const auto& q : grid) REQUIRE(falling_product_simple_zeros(l, q).meets_lemma);
}

TEST_CASE("zero report consistency") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 100; ++t) {
        const Poly p = oracle::random_poly(rng, 1 + t % 7, 5, 3) * pow(Poly::linear(1, t % 3), t % 2 + 1);
        const auto r = zero_report(p);
        const std::size_t distinct = r.profile.distinct_root_count();
        CHECK(r.distinct_real_roots <= distinct);
        CHECK((r.distinct_real_roots == distinct) == !r.has_nonreal_zero);
        CHECK(r.simple_zero_count == r.profile.simple_zero_count());
    }
}
