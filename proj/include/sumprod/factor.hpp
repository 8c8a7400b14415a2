#pragma once

#include <utility>
#include <vector>

#include "sumprod/rational.hpp"

namespace sumprod {

/// Prime factorization of n > 0 as (prime, exponent), primes ascending.
/// Trial division for small primes, Pollard-Brent rho beyond.
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<Integer> divisors(const Integer& n);

}  // namespace sumprod
