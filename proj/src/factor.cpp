#include "sumprod/factor.hpp"

#include <algorithm>
#include <map>

#include "sumprod/error.hpp"

namespace sumprod {

namespace {

bool probably_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

// Brent's variant; returns a nontrivial factor of composite n.
Integer rho_factor(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        auto f = [&](const Integer& v) {
            Integer r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        Integer y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer diff = abs(x - y);
                    q = (q * diff) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (probably_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = rho_factor(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
    if (n <= 0) throw DomainError("factorize expects a positive integer");
    std::map<Integer, unsigned> found;
    Integer rest = n;
    for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            ++found[Integer(p)];
            rest /= p;
        }
    }
    if (rest > 1) factor_into(rest, found);
    return {found.begin(), found.end()};
}

std::vector<Integer> divisors(const Integer& n) {
    if (n == 0) throw DomainError("divisors of zero");
    std::vector<Integer> out{1};
    for (const auto& [p, e] : factorize(abs(n))) {
        const std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sumprod
