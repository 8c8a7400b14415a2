#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sumprod/poly.hpp"
#include "sumprod/roots.hpp"

namespace sumprod {

struct ZeroReport {
    MultiplicityProfile profile;
    std::size_t simple_zero_count = 0;
    std::size_t distinct_real_roots = 0;
    bool has_nonreal_zero = false;
};

/// Square-free profile plus Sturm count of distinct real roots. deg p >= 1.
ZeroReport zero_report(const Poly& p);

/// Outcome of checking a "has at least three simple zeros" statement at one
/// parameter value. At a listed exception the statement is met when the
/// count is below three.
struct SimpleZeroCheck {
    std::size_t count = 0;
    bool exceptional = false;
    bool meets_lemma = false;
};

/// Exceptional (k, d) for B_k(x) + d.
struct BernoulliException {
    unsigned k;
    Rational d;
};
std::span<const BernoulliException> bernoulli_shift_exceptions();

/// Exceptional (ell, q) for x(x+1)...(x+ell-1) + q.
struct FallingException {
    unsigned ell;
    Rational q;
};
std::span<const FallingException> falling_product_exceptions();

/// B_k(x) + d; k >= 3.
SimpleZeroCheck bernoulli_shift_simple_zeros(unsigned k, const Rational& d);
/// f_{ell,q}(x); ell >= 3.
SimpleZeroCheck falling_product_simple_zeros(unsigned ell, const Rational& q);

/// gcd(p, p') is constant.
bool all_zeros_simple(const Poly& p);

/// Sample of distinct rationals for falsification sweeps: every p/q with
/// |p| <= 20, 1 <= q <= 10, then seeded random p/q with |p| <= 200,
/// 1 <= q <= 100 until `count` values are reached. Deterministic for a seed.
std::vector<Rational> falsification_grid(std::size_t count, std::uint64_t seed = 20240607);

}  // namespace sumprod
