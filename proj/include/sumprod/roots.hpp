#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "sumprod/poly.hpp"

namespace sumprod {

struct SquarefreeFactor {
    Poly factor;  // monic, squarefree
    unsigned multiplicity;
};

/// Yun's algorithm: p = lc(p) * prod factor^multiplicity, factors pairwise
/// coprime, multiplicities ascending. p must be nonzero.
std::vector<SquarefreeFactor> squarefree_factors(const Poly& p);

/// Monic p / gcd(p, p').
Poly squarefree_part(const Poly& p);

/// Root multiplicities over C: for each multiplicity, how many distinct roots
/// have exactly that multiplicity.
struct MultiplicityProfile {
    struct Entry {
        unsigned multiplicity;
        std::size_t distinct_roots;
        friend bool operator==(const Entry&, const Entry&) = default;
    };
    std::vector<Entry> entries;  // multiplicities strictly increasing

    std::size_t simple_zero_count() const;
    std::size_t distinct_root_count() const;
    std::size_t total_degree() const;
    friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;
};

/// Throws DomainError for constant input.
MultiplicityProfile squarefree_profile(const Poly& p);

/// Res(f, g) by the Euclidean remainder sequence over Q.
Rational resultant(const Poly& f, const Poly& g);

/// (-1)^(n(n-1)/2) Res(p, p') / lc(p). Throws DomainError for degree < 2.
Rational discriminant(const Poly& p);

/// Sturm chain of the squarefree part of p, each member scaled to a
/// primitive integer polynomial by a positive factor.
class SturmChain {
public:
    explicit SturmChain(const Poly& p);

    /// Sign variations of the chain at x.
    std::size_t variations(const Rational& x) const;
    std::size_t variations_at_neg_inf() const;
    std::size_t variations_at_pos_inf() const;

    /// Distinct real roots in (lo, hi]; a missing bound is infinite.
    /// Finite endpoints must not be roots.
    std::size_t count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const;

    const Poly& base() const { return chain_.front(); }

private:
    std::vector<Poly> chain_;
};

/// Distinct real roots of p in (lo, hi]; std::nullopt bounds mean -inf / +inf.
/// Throws DomainError for the zero polynomial or a root at a finite endpoint.
std::size_t sturm_real_root_count(const Poly& p, const std::optional<Rational>& lo = std::nullopt,
                                  const std::optional<Rational>& hi = std::nullopt);

struct RationalRoot {
    Rational root;
    unsigned multiplicity;
    friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// All rational roots with multiplicity, ascending, by the rational root
/// theorem on the primitive integer polynomial (divisors of both extreme
/// coefficients from full factorizations).
std::vector<RationalRoot> rational_roots(const Poly& p);

/// Distinct integer roots, ascending. Uses Sturm bisection on half-integer
/// endpoints inside the Cauchy bound and never factors coefficients.
std::vector<Integer> integer_roots(const Poly& p);

/// Integers y with p(y) == v, ascending. Throws DomainError if deg p < 1.
std::vector<Integer> integer_preimages(const Poly& p, const Rational& v);

/// Repeated integer_preimages queries against one polynomial. Integers
/// inside the root bound of p' are tabulated once; beyond it p is monotone
/// and each query is a binary search. Falls back to integer_roots when the
/// table would exceed `table_limit` entries.
class PreimageSolver {
public:
    explicit PreimageSolver(Poly p, std::size_t table_limit = 200000);
    std::vector<Integer> operator()(const Rational& v) const;

private:
    void search_tail(const Rational& v, Integer lo, Integer hi, std::vector<Integer>& out) const;

    Poly p_;
    bool tabulated_ = false;
    Integer critical_bound_;  // every real root of p' lies in (-bound, bound)
    std::map<Rational, std::vector<Integer>> table_;
};

/// Integer B >= 1 with every complex root of p bounded by B in modulus.
Integer cauchy_root_bound(const Poly& p);

}  // namespace sumprod
