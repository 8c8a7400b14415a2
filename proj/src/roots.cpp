#include "sumprod/roots.hpp"

#include <algorithm>

#include "sumprod/error.hpp"
#include "sumprod/factor.hpp"

namespace sumprod {

std::vector<SquarefreeFactor> squarefree_factors(const Poly& p) {
    if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
    std::vector<SquarefreeFactor> out;
    if (p.is_constant()) return out;

    Poly f = p.monic();
    Poly fp = derivative(f);
    Poly a0 = gcd(f, fp);
    Poly b = exact_div(f, a0);
    Poly c = exact_div(fp, a0);
    Poly d = c - derivative(b);
    for (unsigned i = 1; !b.is_constant(); ++i) {
        Poly a = gcd(b, d);
        if (!a.is_constant()) out.push_back({a, i});
        b = exact_div(b, a);
        c = exact_div(d, a);
        d = c - derivative(b);
    }
    return out;
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
    return exact_div(p, gcd(p, derivative(p))).monic();
}

std::size_t MultiplicityProfile::simple_zero_count() const {
    for (const auto& e : entries)
        if (e.multiplicity == 1) return e.distinct_roots;
    return 0;
}

std::size_t MultiplicityProfile::distinct_root_count() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.distinct_roots;
    return n;
}

std::size_t MultiplicityProfile::total_degree() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.distinct_roots * e.multiplicity;
    return n;
}

MultiplicityProfile squarefree_profile(const Poly& p) {
    if (p.is_constant()) throw DomainError("multiplicity profile of a constant polynomial");
    MultiplicityProfile prof;
    for (const auto& sf : squarefree_factors(p)) prof.entries.push_back({sf.multiplicity, *sf.factor.degree()});
    if (prof.total_degree() != *p.degree()) throw InvariantError("square-free factors do not account for the degree");
    return prof;
}

Rational resultant(const Poly& f_in, const Poly& g_in) {
    if (f_in.is_zero() || g_in.is_zero()) return 0;
    Poly f = f_in;
    Poly g = g_in;
    std::size_t m = *f.degree();
    std::size_t n = *g.degree();
    Rational acc = 1;
    while (true) {
        if (n == 0) return acc * pow(g.leading(), static_cast<long>(m));
        if (m == 0) return acc * pow(f.leading(), static_cast<long>(n));
        Poly r = divmod(f, g).remainder;
        if (r.is_zero()) return 0;
        std::size_t s = *r.degree();
        if ((m * n) % 2 == 1) acc = -acc;
        acc *= pow(g.leading(), static_cast<long>(m - s));
        f = std::move(g);
        g = std::move(r);
        m = n;
        n = s;
    }
}

Rational discriminant(const Poly& p) {
    if (p.is_zero() || *p.degree() < 2) throw DomainError("discriminant needs degree >= 2");
    const std::size_t n = *p.degree();
    Rational d = resultant(p, derivative(p)) / p.leading();
    if ((n * (n - 1) / 2) % 2 == 1) d = -d;
    return d;
}

SturmChain::SturmChain(const Poly& p) {
    if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
    chain_.push_back(primitive_part(squarefree_part(p)));
    if (chain_.front().is_constant()) return;
    chain_.push_back(primitive_part(derivative(chain_.front())));
    while (!chain_.back().is_constant()) {
        Poly r = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
        if (r.is_zero()) break;
        chain_.push_back(primitive_part(-r));
    }
}

namespace {

std::size_t count_variations(const std::vector<int>& signs) {
    std::size_t v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

std::size_t SturmChain::variations(const Rational& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& q : chain_) signs.push_back(sign(q(x)));
    return count_variations(signs);
}

std::size_t SturmChain::variations_at_neg_inf() const {
    std::vector<int> signs;
    for (const auto& q : chain_) {
        int s = sign(q.leading());
        if (*q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

std::size_t SturmChain::variations_at_pos_inf() const {
    std::vector<int> signs;
    for (const auto& q : chain_) signs.push_back(sign(q.leading()));
    return count_variations(signs);
}

std::size_t SturmChain::count(const std::optional<Rational>& lo, const std::optional<Rational>& hi) const {
    if (lo && base()(*lo) == 0) throw DomainError("Sturm count: lower endpoint is a root");
    if (hi && base()(*hi) == 0) throw DomainError("Sturm count: upper endpoint is a root");
    if (lo && hi && *lo >= *hi) return 0;
    std::size_t vlo = lo ? variations(*lo) : variations_at_neg_inf();
    std::size_t vhi = hi ? variations(*hi) : variations_at_pos_inf();
    if (vhi > vlo) throw InvariantError("Sturm variations increased along the interval");
    return vlo - vhi;
}

std::size_t sturm_real_root_count(const Poly& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    return SturmChain(p).count(lo, hi);
}

std::vector<RationalRoot> rational_roots(const Poly& p) {
    if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
    std::vector<RationalRoot> out;
    Poly rest = primitive_part(p);

    unsigned zero_mult = 0;
    while (!rest.is_constant() && rest.coeff(0) == 0) {
        rest = exact_div(rest, Poly::identity());
        ++zero_mult;
    }
    if (zero_mult > 0) out.push_back({0, zero_mult});
    if (rest.is_constant()) return out;

    const auto ints = primitive_integer_coeffs(rest);
    const auto nums = divisors(ints.front());
    const auto dens = divisors(ints.back());
    for (const auto& q : dens) {
        for (const auto& n : nums) {
            if (gcd(n, q) != 1) continue;
            for (int s : {-1, 1}) {
                if (rest.is_constant()) break;
                Rational r = make_rational(n * s, q);
                if (rest(r) != 0) continue;
                const Poly factor = Poly::linear(1, -r);
                unsigned mult = 0;
                while (!rest.is_constant() && rest(r) == 0) {
                    rest = exact_div(rest, factor);
                    ++mult;
                }
                out.push_back({r, mult});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const RationalRoot& x, const RationalRoot& y) { return x.root < y.root; });
    return out;
}

Integer cauchy_root_bound(const Poly& p) {
    if (p.is_zero()) throw DomainError("root bound of the zero polynomial");
    Rational m = 0;
    const Rational& lc = p.leading();
    auto c = p.coeffs();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        Rational r = abs(c[i] / lc);
        if (r > m) m = r;
    }
    return ceil(m) + 1;
}

std::vector<Integer> integer_roots(const Poly& p) {
    if (p.is_zero()) throw DomainError("integer roots of the zero polynomial");
    std::vector<Integer> found;
    if (p.is_constant()) return found;

    Poly sf = squarefree_part(p);
    if (*sf.degree() == 1) {
        Rational r = -sf.coeff(0) / sf.coeff(1);
        if (is_integer(r)) found.push_back(r.get_num());
        return found;
    }

    // Each interval (lo + 1/2, hi + 1/2) holds the integers lo+1 .. hi.
    struct Span {
        Integer lo, hi;
    };
    const Integer bound = cauchy_root_bound(sf);
    const Rational half(1, 2);
    SturmChain chain(sf);
    std::vector<Span> work{{-bound - 1, bound}};
    while (!work.empty()) {
        Span s = work.back();
        work.pop_back();
        const Rational left = Rational(s.lo) + half;
        const Rational right = Rational(s.hi) + half;
        if (chain.count(left, right) == 0) continue;
        if (s.hi - s.lo == 1) {
            if (sf(Rational(s.hi)) == 0) found.push_back(s.hi);
            continue;
        }
        Integer mid;
        mpz_fdiv_q_2exp(mid.get_mpz_t(), Integer(s.lo + s.hi).get_mpz_t(), 1);
        const Rational mid_point = Rational(mid) + half;
        if (sf(mid_point) == 0) {
            // A half-integer root would sit on an endpoint; remove it.
            sf = exact_div(sf, Poly::linear(2, -2 * mid - 1));
            if (sf.is_constant()) continue;
            chain = SturmChain(sf);
            work.push_back(s);
            continue;
        }
        work.push_back({s.lo, mid});
        work.push_back({mid, s.hi});
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<Integer> integer_preimages(const Poly& p, const Rational& v) {
    if (p.is_constant()) throw DomainError("integer preimages need a nonconstant polynomial");
    return integer_roots(p - Poly::constant(v));
}

PreimageSolver::PreimageSolver(Poly p, std::size_t table_limit) : p_(std::move(p)) {
    if (p_.is_constant()) throw DomainError("integer preimages need a nonconstant polynomial");
    const Poly dp = derivative(p_);
    critical_bound_ = dp.is_constant() ? Integer(0) : cauchy_root_bound(dp);
    if (2 * critical_bound_ + 1 > table_limit) return;
    tabulated_ = true;
    for (Integer y = -critical_bound_; y <= critical_bound_; ++y) table_[p_(Rational(y))].push_back(y);
}

// Binary search on [lo, hi], where p is strictly monotone.
void PreimageSolver::search_tail(const Rational& v, Integer lo, Integer hi, std::vector<Integer>& out) const {
    if (lo > hi) return;
    const bool increasing = p_(Rational(hi)) > p_(Rational(lo));
    while (lo <= hi) {
        Integer mid;
        mpz_fdiv_q_2exp(mid.get_mpz_t(), Integer(lo + hi).get_mpz_t(), 1);
        const Rational at = p_(Rational(mid));
        if (at == v) {
            out.push_back(mid);
            return;
        }
        if ((at < v) == increasing) lo = mid + 1;
        else hi = mid - 1;
    }
}

std::vector<Integer> PreimageSolver::operator()(const Rational& v) const {
    if (!tabulated_) return integer_preimages(p_, v);
    std::vector<Integer> out;
    const Integer outer = cauchy_root_bound(p_ - Poly::constant(v));
    search_tail(v, -outer, -critical_bound_ - 1, out);
    if (auto it = table_.find(v); it != table_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
    search_tail(v, critical_bound_ + 1, outer, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sumprod
