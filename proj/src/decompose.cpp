#include "sumprod/decompose.hpp"

#include <algorithm>
#include <numeric>

#include "sumprod/error.hpp"
#include "sumprod/roots.hpp"

namespace sumprod {

namespace {

// Monic h = x^d + h_{d-1} x^{d-1} + ... whose r-th power agrees with monic p
// (degree r*d) in the `count` coefficients below the leading one. Lower
// coefficients of h stay zero.
Poly root_from_top(const Poly& p, unsigned r, std::size_t d, std::size_t count) {
    const std::size_t n = r * d;
    std::vector<Rational> h(d + 1);
    h[d] = 1;
    for (std::size_t j = 1; j <= count; ++j) {
        Poly partial(h);
        Rational have = pow(partial, r).coeff(n - j);
        h[d - j] = (p.coeff(n - j) - have) / Rational(static_cast<unsigned long>(r));
    }
    return Poly(std::move(h));
}

// Digits of p in base h; empty when some digit is not a constant.
std::optional<Poly> base_expansion(const Poly& p, const Poly& h, std::size_t digits) {
    std::vector<Rational> g;
    Poly rest = p;
    for (std::size_t i = 0; i < digits; ++i) {
        auto [q, r] = divmod(rest, h);
        if (!r.is_constant()) return std::nullopt;
        g.push_back(r.coeff(0));
        rest = std::move(q);
    }
    if (!rest.is_zero()) return std::nullopt;
    return Poly(std::move(g));
}

bool is_monomial_x_power(const Poly& f) {
    auto d = f.degree();
    return d && *d >= 1 && f == Poly::monomial(1, *d);
}

std::size_t valuation(const Poly& p) {
    std::size_t s = 0;
    while (p.coeff(s) == 0) ++s;
    return s;
}

// Dickson parameter read off the x^(t-2) coefficient of a monic candidate.
Rational dickson_delta(const Poly& monic_f) {
    const std::size_t t = *monic_f.degree();
    return -monic_f.coeff(t - 2) / Rational(static_cast<unsigned long>(t));
}

}  // namespace

bool Decomposition::nontrivial() const {
    auto od = outer.degree();
    auto id = inner.degree();
    return od && id && *od > 1 && *id > 1;
}

std::optional<Poly> exact_power_root(const Poly& p, unsigned r) {
    if (p.is_zero() || r == 0) return std::nullopt;
    const std::size_t n = *p.degree();
    if (n % r != 0) return std::nullopt;
    const std::size_t d = n / r;
    Poly h = root_from_top(p.monic(), r, d, d);
    if (pow(h, r) != p.monic()) return std::nullopt;
    return h;
}

std::vector<Decomposition> decompose_all(const Poly& p) {
    if (p.is_zero() || *p.degree() < 2) throw DomainError("decomposition needs degree >= 2");
    const std::size_t n = *p.degree();
    const Poly target = p.monic();
    std::vector<Decomposition> out;
    for (std::size_t d = 2; d < n; ++d) {
        if (n % d != 0) continue;
        const auto r = static_cast<unsigned>(n / d);
        Poly inner = root_from_top(target, r, d, d - 1);
        auto outer = base_expansion(p, inner, r + 1);
        if (!outer) continue;
        Decomposition dec{std::move(*outer), std::move(inner)};
        if (dec.composed() != p) throw InvariantError("decomposition does not recompose to its target");
        out.push_back(std::move(dec));
    }
    return out;
}

bool equivalent(const Decomposition& d1, const Decomposition& d2) {
    if (d1.composed() != d2.composed()) throw DomainError("decompositions of different polynomials");
    if (d1.inner.degree() != d2.inner.degree() || d1.inner.is_zero()) return false;
    const Rational alpha = d2.inner.leading() / d1.inner.leading();
    const Rational beta = d2.inner.coeff(0) - alpha * d1.inner.coeff(0);
    if (d1.inner * alpha + Poly::constant(beta) != d2.inner) return false;
    return d1.outer == affine_substitute(d2.outer, alpha, beta);
}

std::vector<AffineMap> affine_match(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero() || f.degree() != g.degree() || *f.degree() < 1)
        throw DomainError("affine match needs polynomials of equal degree >= 1");
    const std::size_t n = *f.degree();
    const Rational ratio = f.leading() / g.leading();
    std::vector<Rational> lambdas;
    if (auto root = exact_root(ratio, n)) {
        lambdas.push_back(*root);
        if (n % 2 == 0) lambdas.push_back(-*root);
    }
    std::vector<AffineMap> out;
    for (const auto& lambda : lambdas) {
        const Rational lp = pow(lambda, static_cast<long>(n - 1));
        const Rational nu = (f.coeff(n - 1) / lp - g.coeff(n - 1)) / (Rational(static_cast<unsigned long>(n)) * g.leading());
        if (affine_substitute(g, lambda, nu) == f) out.push_back({lambda, nu});
    }
    std::sort(out.begin(), out.end(), [](const AffineMap& x, const AffineMap& y) { return x.lambda < y.lambda; });
    return out;
}

std::vector<Poly> polynomial_inner_match(const ProgressionSumSpec& s_spec, const ProductSpec& r_spec) {
    const Poly s = power_sum_poly(s_spec);
    const Poly r = product_poly(r_spec);
    const std::size_t n = *s.degree();
    std::vector<Poly> out;
    if (n % r_spec.ell != 0) return out;
    const std::size_t e = n / r_spec.ell;
    auto keep = [&](Poly candidate) {
        if (compose(r, candidate) != s) throw InvariantError("inner match does not reproduce the power sum");
        if (std::find(out.begin(), out.end(), candidate) == out.end()) out.push_back(std::move(candidate));
    };
    if (e == 1) {
        for (const auto& m : affine_match(s, r)) keep(Poly::linear(m.lambda, m.nu));
        return out;
    }
    for (const auto& dec : decompose_all(s)) {
        if (*dec.inner.degree() != e) continue;
        for (const auto& m : affine_match(dec.outer, r)) keep(dec.inner * m.lambda + Poly::constant(m.nu));
    }
    return out;
}

std::optional<ShiftedPower> is_shifted_power_form(const Poly& p) {
    if (p.is_zero() || *p.degree() < 3) throw DomainError("shifted power test needs degree >= 3");
    const std::size_t n = *p.degree();
    const Rational shift = -p.coeff(n - 1) / (Rational(static_cast<unsigned long>(n)) * p.leading());
    const Poly centered = affine_substitute(p, 1, shift);
    for (std::size_t i = 1; i < n; ++i)
        if (centered.coeff(i) != 0) return std::nullopt;
    return ShiftedPower{p.leading(), static_cast<unsigned>(n), centered.coeff(0), shift};
}

std::optional<DicksonForm> is_dickson_form(const Poly& p) {
    if (p.is_zero() || *p.degree() < 5) throw DomainError("Dickson test needs degree >= 5");
    const std::size_t t = *p.degree();
    const Rational e1 = p.leading();
    const Rational shift = -p.coeff(t - 1) / (Rational(static_cast<unsigned long>(t)) * e1);
    const Poly centered = affine_substitute(p, 1, shift);
    const Rational delta = dickson_delta(centered.monic());
    if (delta == 0) return std::nullopt;
    const Poly dickson = dickson_poly(static_cast<unsigned>(t), delta);
    const Rational e0 = centered.coeff(0) - e1 * dickson.coeff(0);
    if (dickson * e1 + Poly::constant(e0) != centered) return std::nullopt;
    return DicksonForm{e1, static_cast<unsigned>(t), delta, e0, shift, Rational(1)};
}

std::string_view to_string(PairKind kind) {
    switch (kind) {
        case PairKind::first: return "first";
        case PairKind::second: return "second";
        case PairKind::third: return "third";
        case PairKind::fourth: return "fourth";
        case PairKind::fifth: return "fifth";
        case PairKind::none: return "none";
    }
    return "none";
}

namespace {

std::optional<StandardPair> match_first(const Poly& f, const Poly& g) {
    if (!is_monomial_x_power(f) || g.is_zero()) return std::nullopt;
    const auto q = static_cast<unsigned>(*f.degree());
    const std::size_t s = valuation(g);
    const auto p = static_cast<unsigned>(s % q);
    if (std::gcd(p, q) != 1) return std::nullopt;
    Poly rest = exact_div(g, Poly::monomial(1, s));
    auto root = exact_power_root(rest, q);
    if (!root) return std::nullopt;
    Poly nu_poly = Poly::monomial(1, (s - p) / q) * *root;
    if (p + *nu_poly.degree() == 0) return std::nullopt;
    StandardPair out;
    out.kind = PairKind::first;
    out.alpha = rest.leading();
    out.p = p;
    out.q = q;
    out.nu_poly = std::move(nu_poly);
    return out;
}

std::optional<StandardPair> match_second(const Poly& f, const Poly& g) {
    if (f != Poly::monomial(1, 2) || g.is_constant()) return std::nullopt;
    Poly odd = Poly::constant(1);
    Poly half = Poly::constant(1);
    for (const auto& sf : squarefree_factors(g)) {
        if (sf.multiplicity % 2 == 1) odd *= sf.factor;
        half *= pow(sf.factor, sf.multiplicity / 2);
    }
    if (odd.degree() != 2 || odd.coeff(1) != 0 || odd.coeff(0) == 0) return std::nullopt;
    StandardPair out;
    out.kind = PairKind::second;
    out.alpha = g.leading();
    out.beta = g.leading() * odd.coeff(0);
    out.nu_poly = std::move(half);
    return out;
}

// Delta of a monic Dickson polynomial of degree >= 2, or nullopt.
std::optional<Rational> read_dickson(const Poly& f) {
    if (f.leading() != 1) return std::nullopt;
    Rational delta = dickson_delta(f);
    if (dickson_poly(static_cast<unsigned>(*f.degree()), delta) != f) return std::nullopt;
    return delta;
}

std::optional<StandardPair> match_third(const Poly& f, const Poly& g) {
    const auto mu = static_cast<unsigned>(*f.degree());
    const auto nu = static_cast<unsigned>(*g.degree());
    if (std::gcd(mu, nu) != 1) return std::nullopt;
    if (f.leading() != 1 || g.leading() != 1) return std::nullopt;
    std::optional<Rational> df, dg;
    if (mu >= 2 && !(df = read_dickson(f))) return std::nullopt;
    if (nu >= 2 && !(dg = read_dickson(g))) return std::nullopt;
    if (mu == 1 && f != Poly::identity()) return std::nullopt;
    if (nu == 1 && g != Poly::identity()) return std::nullopt;

    Rational alpha = 1;
    if (df && dg) {
        // s*nu + t*mu = 1
        long s = 0, t = 0;
        for (long cand = -static_cast<long>(mu); cand <= static_cast<long>(mu); ++cand) {
            long rest = 1 - cand * static_cast<long>(nu);
            if (rest % static_cast<long>(mu) == 0) {
                s = cand;
                t = rest / static_cast<long>(mu);
                break;
            }
        }
        if (*df == 0 || *dg == 0) return std::nullopt;
        alpha = pow(*df, s) * pow(*dg, t);
    } else if (dg) {
        alpha = *dg;
    } else if (df) {
        alpha = *df;
    }
    if (alpha == 0) return std::nullopt;
    if (f != dickson_poly(mu, pow(alpha, static_cast<long>(nu)))) return std::nullopt;
    if (g != dickson_poly(nu, pow(alpha, static_cast<long>(mu)))) return std::nullopt;
    StandardPair out;
    out.kind = PairKind::third;
    out.alpha = alpha;
    out.mu = mu;
    out.nu = nu;
    return out;
}

Poly fourth_member(unsigned deg, const Rational& param, bool negate) {
    Poly d = dickson_poly(deg, param) * pow(param, -static_cast<long>(deg / 2));
    return negate ? -d : d;
}

std::optional<StandardPair> match_fourth(const Poly& f, const Poly& g) {
    const auto mu = static_cast<unsigned>(*f.degree());
    const auto nu = static_cast<unsigned>(*g.degree());
    if (std::gcd(mu, nu) != 2) return std::nullopt;
    const Rational alpha = dickson_delta(f.monic());
    const Rational beta = dickson_delta(g.monic());
    if (alpha == 0 || beta == 0) return std::nullopt;
    if (f != fourth_member(mu, alpha, false) || g != fourth_member(nu, beta, true)) return std::nullopt;
    StandardPair out;
    out.kind = PairKind::fourth;
    out.alpha = alpha;
    out.beta = beta;
    out.mu = mu;
    out.nu = nu;
    return out;
}

Poly fifth_second() { return Poly(std::vector<Rational>{0, 0, 0, -4, 3}); }

Poly fifth_first(const Rational& alpha) { return pow(Poly(std::vector<Rational>{-1, 0, alpha}), 3); }

std::optional<StandardPair> match_fifth(const Poly& f, const Poly& g) {
    if (g != fifth_second() || f.degree() != 6) return std::nullopt;
    const Rational alpha = f.coeff(2) / 3;
    if (alpha == 0 || f != fifth_first(alpha)) return std::nullopt;
    StandardPair out;
    out.kind = PairKind::fifth;
    out.alpha = alpha;
    return out;
}

}  // namespace

StandardPair classify_standard_pair(const Poly& f, const Poly& g) {
    if (f.is_constant() || g.is_constant()) throw DomainError("standard pairs need nonconstant polynomials");
    using Matcher = std::optional<StandardPair> (*)(const Poly&, const Poly&);
    for (Matcher m : {Matcher{match_first}, Matcher{match_second}, Matcher{match_third}, Matcher{match_fourth},
                      Matcher{match_fifth}}) {
        if (auto hit = m(f, g)) return *hit;
        if (auto hit = m(g, f)) {
            hit->swapped = true;
            return *hit;
        }
    }
    return {};
}

std::pair<Poly, Poly> instantiate(const StandardPair& pr) {
    std::pair<Poly, Poly> out;
    switch (pr.kind) {
        case PairKind::first:
            out = {Poly::monomial(1, pr.q), Poly::monomial(pr.alpha, pr.p) * pow(pr.nu_poly, pr.q)};
            break;
        case PairKind::second:
            out = {Poly::monomial(1, 2), Poly(std::vector<Rational>{pr.beta, 0, pr.alpha}) * pow(pr.nu_poly, 2)};
            break;
        case PairKind::third:
            out = {dickson_poly(pr.mu, pow(pr.alpha, static_cast<long>(pr.nu))),
                   dickson_poly(pr.nu, pow(pr.alpha, static_cast<long>(pr.mu)))};
            break;
        case PairKind::fourth:
            out = {fourth_member(pr.mu, pr.alpha, false), fourth_member(pr.nu, pr.beta, true)};
            break;
        case PairKind::fifth:
            out = {fifth_first(pr.alpha), fifth_second()};
            break;
        case PairKind::none:
            throw DomainError("no standard pair to instantiate");
    }
    if (pr.swapped) std::swap(out.first, out.second);
    return out;
}

}  // namespace sumprod
