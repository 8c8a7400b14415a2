#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sumprod/families.hpp"
#include "sumprod/pell.hpp"
#include "sumprod/poly.hpp"

namespace sumprod {

/// The equation S_{a,b}^k(x) = R_c^ell(y).
struct EquationInstance {
    std::int64_t a = 1;
    std::int64_t b = 0;
    std::int64_t c = 1;
    unsigned k = 1;
    unsigned ell = 2;

    /// Throws DomainError unless a != 0, k >= 1, ell >= 2.
    void validate() const;
    Poly lhs() const { return power_sum_poly(a, b, k); }
    Poly rhs() const { return product_poly(c, ell); }
};

enum class Regime {
    degenerate_identity,
    infinite_family_pell,
    exceptional_family,
    effective_finite,
    ineffective_finite,
    out_of_theorem_scope,
};
std::string_view to_string(Regime r);

struct Verdict {
    Regime regime = Regime::out_of_theorem_scope;
    std::string citation;
    /// Ordered key/value witness data.
    std::vector<std::pair<std::string, std::string>> witness;
};

Verdict classify(const EquationInstance& inst);

struct IntegerPair {
    Integer x;
    Integer y;
    friend bool operator==(const IntegerPair&, const IntegerPair&) = default;
    friend bool operator<(const IntegerPair& l, const IntegerPair& r) {
        return l.x != r.x ? l.x < r.x : l.y < r.y;
    }
};

/// Constant shift d in "S_{a,b}^k = R_c^ell(y)  <=>  const * (B_{k+1}(x + b/a) + d) = square"
/// obtained by completing the square: ell = 2 uses 4R + c^2 = (2y+c)^2,
/// ell = 4 uses R + c^4 = (y^2+3cy+c^2)^2.
Rational completing_square_shift(unsigned k, unsigned ell, std::int64_t a, std::int64_t b, std::int64_t c);

/// Integer solutions of S_{a,b}^1(x) = R_c^2(y) from the Pellian
/// (2ax+2b-a)^2 - 2a(2y+c)^2 = (2b-a)^2 - 2ac^2, taken from the Pell
/// solutions with u > 0 and v > 0. Returns the first `count` pairs in
/// increasing u; each is re-verified.
/// Throws DomainError if a <= 0, gcd(a, b) != 1 or 2a is a perfect square.
std::vector<IntegerPair> pellian_family_k1l2(std::int64_t a, std::int64_t b, std::int64_t c, std::size_t count);

/// Positive solutions of x^2 (2x^2 - 1) = y^2 from w^2 - 2x^2 = -1.
std::vector<IntegerPair> nsw_family_3_2_2_1(std::size_t count);

/// All (x, y) with x_lo <= x <= x_hi and S(x) = R(y), sorted by x then y.
std::vector<IntegerPair> search_solutions(const EquationInstance& inst, std::int64_t x_lo, std::int64_t x_hi);

struct PowerValueResult {
    std::vector<IntegerPair> solutions;  // |y| > 1
    std::vector<IntegerPair> trivial;    // y in {-1, 0, 1}
};

/// S_{a,b}^k(x) = y^ell over x_lo <= x <= x_hi, exact integer roots.
PowerValueResult power_value_search(std::int64_t a, std::int64_t b, unsigned k, unsigned ell, std::int64_t x_lo,
                                    std::int64_t x_hi);

enum class ReductionKind { k1_square, k3_square, l2_square, l4_square };
ReductionKind parse_reduction_kind(std::string_view name);
std::string_view to_string(ReductionKind kind);

struct ReductionParams {
    std::int64_t a = 1;
    std::int64_t b = 1;
    std::int64_t c = 1;
};

/// Checks the polynomial identity behind a completing-square step:
///   k1_square: 8a S^1(x) + (2b-a)^2 = (2ax+2b-a)^2
///   k3_square: S^3(x) = x(ax+2b-a)(a^2x^2+(2ab-a^2)x+2b^2-2ab)/4 and
///              4a S^3(x) = (X + b^2 - ab)^2 - (b^2 - ab)^2, X = a^2x^2 + (2ab-a^2)x
///   l2_square: 4 R_c^2(y) + c^2 = (2y+c)^2
///   l4_square: R_c^4(y) + c^4 = (y^2 + 3cy + c^2)^2
bool reduction_identity_check(ReductionKind kind, const ReductionParams& params);

}  // namespace sumprod
