#pragma once

#include <cstdint>

#include "sumprod/poly.hpp"

namespace sumprod {

/// Parameters of the power sum b^k + (a+b)^k + ... + (a(x-1)+b)^k.
struct ProgressionSumSpec {
    std::int64_t a;
    std::int64_t b;
    unsigned k;
    bool coprime;  // gcd(a, b) == 1, recorded at construction

    ProgressionSumSpec(std::int64_t a, std::int64_t b, unsigned k);
};

/// Parameters of x(x+c)(x+2c)...(x+(ell-1)c); ell >= 2 is enforced.
struct ProductSpec {
    std::int64_t c;
    unsigned ell;

    ProductSpec(std::int64_t c, unsigned ell);
};

/// B_n with B_1 = -1/2. Memoized; safe to call concurrently.
Rational bernoulli_number(unsigned n);
Poly bernoulli_poly(unsigned n);

/// S_{a,b}^k(x) = a^k/(k+1) * (B_{k+1}(x + b/a) - B_{k+1}(b/a)).
Poly power_sum_poly(const ProgressionSumSpec& spec);
Poly power_sum_poly(std::int64_t a, std::int64_t b, unsigned k);

/// R_c^ell(x); c = 0 gives x^ell.
Poly product_poly(const ProductSpec& spec);
Poly product_poly(std::int64_t c, unsigned ell);

/// (x - c^2/4)(x - 9c^2/4)...(x - ((2m-1)c)^2/4).
/// Satisfies product_hat_poly(c, m)((x + (2m-1)c/2)^2) = R_c^{2m}(x).
Poly product_hat_poly(std::int64_t c, unsigned m);

/// The degree-v polynomial H with H((x + b/a - 1/2)^2) = S_{a,b}^{2v-1}(x).
/// Throws InvariantError if the shifted power sum is not even.
Poly power_sum_hat_poly(std::int64_t a, std::int64_t b, unsigned v);

/// Dickson polynomial D_mu(x, delta) = sum_i mu/(mu-i) C(mu-i, i) (-delta)^i x^(mu-2i).
Poly dickson_poly(unsigned mu, const Rational& delta);

/// x(x+1)...(x+ell-1) + q.
Poly falling_product_plus_q(unsigned ell, const Rational& q);

}  // namespace sumprod
