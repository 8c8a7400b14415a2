#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sumprod/families.hpp"
#include "sumprod/poly.hpp"

namespace sumprod {

/// target = outer(inner(x)).
struct Decomposition {
    Poly outer;
    Poly inner;

    Poly composed() const { return compose(outer, inner); }
    bool nontrivial() const;
};

/// One representative per equivalence class of nontrivial decompositions,
/// normalized so the inner is monic with zero constant term. Ordered by
/// inner degree. Empty iff p is indecomposable. Throws for degree < 2.
std::vector<Decomposition> decompose_all(const Poly& p);

/// Whether a linear L exists with d1.outer = d2.outer o L and L o d1.inner = d2.inner.
/// Throws DomainError if the two decompositions compose to different targets.
bool equivalent(const Decomposition& d1, const Decomposition& d2);

struct AffineMap {
    Rational lambda;
    Rational nu;
    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// All rational (lambda, nu) with f(x) = g(lambda x + nu), lambda ascending.
/// Requires deg f == deg g >= 1.
std::vector<AffineMap> affine_match(const Poly& f, const Poly& g);

/// All polynomials p with S_{a,b}^k = R_c^ell o p.
std::vector<Poly> polynomial_inner_match(const ProgressionSumSpec& s_spec, const ProductSpec& r_spec);

/// p(x) = e1 (x - shift)^q + e0.
struct ShiftedPower {
    Rational e1;
    unsigned q;
    Rational e0;
    Rational shift;
};

/// Requires deg p >= 3.
std::optional<ShiftedPower> is_shifted_power_form(const Poly& p);

/// p(scale x + shift) = e1 D_t(x, delta) + e0 with delta != 0.
/// The scale is reported as 1: rescaling x only rescales delta.
struct DicksonForm {
    Rational e1;
    unsigned t;
    Rational delta;
    Rational e0;
    Rational shift;
    Rational scale;
};

/// Requires deg p >= 5.
std::optional<DicksonForm> is_dickson_form(const Poly& p);

enum class PairKind { first, second, third, fourth, fifth, none };
std::string_view to_string(PairKind kind);

/// Witness of a standard pair. Which fields are meaningful depends on kind:
///   first:  (x^q, alpha x^p nu(x)^q)
///   second: (x^2, (alpha x^2 + beta) nu(x)^2)
///   third:  (D_mu(x, alpha^nu), D_nu(x, alpha^mu))
///   fourth: (alpha^(-mu/2) D_mu(x, alpha), -beta^(-nu/2) D_nu(x, beta))
///   fifth:  ((alpha x^2 - 1)^3, 3x^4 - 4x^3)
/// swapped means the input pair is (template second, template first).
struct StandardPair {
    PairKind kind = PairKind::none;
    bool swapped = false;
    Rational alpha;
    Rational beta;
    unsigned p = 0;
    unsigned q = 0;
    unsigned mu = 0;
    unsigned nu = 0;
    Poly nu_poly;
};

/// First template in kind order 1..5 matching (f, g) or (g, f).
StandardPair classify_standard_pair(const Poly& f, const Poly& g);

/// The pair a witness stands for, in the caller's original order.
std::pair<Poly, Poly> instantiate(const StandardPair& pair);

/// Monic h of degree deg(p)/r with h^r == p for monic p, if one exists.
std::optional<Poly> exact_power_root(const Poly& p, unsigned r);

}  // namespace sumprod
