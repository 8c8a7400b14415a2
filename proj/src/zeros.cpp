#include "sumprod/zeros.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

#include "sumprod/error.hpp"
#include "sumprod/families.hpp"

namespace sumprod {

namespace {

const std::array<BernoulliException, 4>& bernoulli_table() {
    static const std::array<BernoulliException, 4> table{{
        {4, Rational(1, 30)},
        {4, Rational(-7, 240)},
        {6, Rational(-1, 42)},
        {6, Rational(-1, 189)},
    }};
    return table;
}

const std::array<FallingException, 2>& falling_table() {
    static const std::array<FallingException, 2> table{{
        {4, Rational(1)},
        {4, Rational(-9, 16)},
    }};
    return table;
}

SimpleZeroCheck judge(std::size_t count, bool exceptional) {
    return {count, exceptional, exceptional ? count < 3 : count >= 3};
}

}  // namespace

std::span<const BernoulliException> bernoulli_shift_exceptions() { return bernoulli_table(); }
std::span<const FallingException> falling_product_exceptions() { return falling_table(); }

ZeroReport zero_report(const Poly& p) {
    if (p.is_constant()) throw DomainError("zero report needs a nonconstant polynomial");
    ZeroReport rep;
    rep.profile = squarefree_profile(p);
    rep.simple_zero_count = rep.profile.simple_zero_count();
    rep.distinct_real_roots = sturm_real_root_count(p);
    rep.has_nonreal_zero = rep.distinct_real_roots < rep.profile.distinct_root_count();
    return rep;
}

SimpleZeroCheck bernoulli_shift_simple_zeros(unsigned k, const Rational& d) {
    if (k < 3) throw DomainError("Bernoulli shift check needs k >= 3");
    const Poly p = bernoulli_poly(k) + Poly::constant(d);
    const bool exceptional = std::any_of(bernoulli_table().begin(), bernoulli_table().end(),
                                         [&](const BernoulliException& e) { return e.k == k && e.d == d; });
    return judge(squarefree_profile(p).simple_zero_count(), exceptional);
}

SimpleZeroCheck falling_product_simple_zeros(unsigned ell, const Rational& q) {
    if (ell < 3) throw DomainError("falling product check needs ell >= 3");
    const Poly p = falling_product_plus_q(ell, q);
    const bool exceptional = std::any_of(falling_table().begin(), falling_table().end(),
                                         [&](const FallingException& e) { return e.ell == ell && e.q == q; });
    return judge(squarefree_profile(p).simple_zero_count(), exceptional);
}

bool all_zeros_simple(const Poly& p) { return gcd(p, derivative(p)).is_constant(); }

std::vector<Rational> falsification_grid(std::size_t count, std::uint64_t seed) {
    std::vector<Rational> out;
    std::set<Rational> seen;
    auto add = [&](long num, long den) {
        Rational r = make_rational(Integer(num), Integer(den));
        if (out.size() < count && seen.insert(r).second) out.push_back(r);
    };
    for (long den = 1; den <= 10; ++den)
        for (long num = -20; num <= 20; ++num) add(num, den);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num_dist(-200, 200);
    std::uniform_int_distribution<long> den_dist(1, 100);
    while (out.size() < count) add(num_dist(rng), den_dist(rng));
    return out;
}

}  // namespace sumprod
