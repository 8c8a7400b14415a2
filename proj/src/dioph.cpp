#include "sumprod/dioph.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "sumprod/error.hpp"
#include "sumprod/roots.hpp"

namespace sumprod {

void EquationInstance::validate() const {
    if (a == 0) throw DomainError("equation instance needs a != 0");
    if (k < 1) throw DomainError("equation instance needs k >= 1");
    if (ell < 2) throw DomainError("equation instance needs ell >= 2");
}

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::degenerate_identity: return "degenerate_identity";
        case Regime::infinite_family_pell: return "infinite_family_pell";
        case Regime::exceptional_family: return "exceptional_family";
        case Regime::effective_finite: return "effective_finite";
        case Regime::ineffective_finite: return "ineffective_finite";
        case Regime::out_of_theorem_scope: return "out_of_theorem_scope";
    }
    return "out_of_theorem_scope";
}

Rational completing_square_shift(unsigned k, unsigned ell, std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a == 0) throw DomainError("completing-square shift needs a != 0");
    const Rational ak(pow(to_integer(a), k));
    const Rational tail = bernoulli_poly(k + 1)(make_rational(to_integer(b), to_integer(a)));
    const Rational kk(static_cast<unsigned long>(k + 1));
    const Integer cc = to_integer(c);
    if (ell == 2) return kk * Rational(cc * cc) / (4 * ak) - tail;
    if (ell == 4) return kk * Rational(pow(cc, 4)) / ak - tail;
    throw DomainError("completing-square shift is defined for ell in {2, 4}");
}

namespace {

struct PellianData {
    PellOrbit orbit;
    Integer modulus;  // 2a
    Integer u_residue;
    Integer v_residue;
};

PellianData pellian_setup(std::int64_t a, std::int64_t b, std::int64_t c) {
    const Integer A = to_integer(a), B = to_integer(b), C = to_integer(c);
    const Integer shift = 2 * B - A;
    PellianData data{make_pell_orbit(2 * A, shift * shift - 2 * A * C * C), 2 * A, 0, 0};
    mpz_fdiv_r(data.u_residue.get_mpz_t(), shift.get_mpz_t(), data.modulus.get_mpz_t());
    mpz_fdiv_r_ui(data.v_residue.get_mpz_t(), C.get_mpz_t(), 2);
    return data;
}

bool congruent(const PellianData& data, const PellSolution& s) {
    Integer ru, rv;
    mpz_fdiv_r(ru.get_mpz_t(), s.u.get_mpz_t(), data.modulus.get_mpz_t());
    mpz_fdiv_r_ui(rv.get_mpz_t(), s.v.get_mpz_t(), 2);
    return ru == data.u_residue && rv == data.v_residue;
}

// Orbit elements meeting the congruences, at most `per_base` per base and
// direction. Each base is walked both ways so that solutions with u v < 0 are
// reached too. The residues of (u mod 2a, v mod 2) are periodic with period at
// most 4a, so a walk that misses them for that long never meets them.
std::vector<PellSolution> pellian_hits(const PellianData& data, std::size_t per_base) {
    const std::size_t period_limit = 4 * data.modulus.get_ui() + 4;
    const PellOrbit& orbit = data.orbit;
    const PellOrbit inverse{orbit.D, orbit.N, {orbit.fundamental.u, -orbit.fundamental.v}, {}, 0};
    std::vector<PellSolution> hits;
    for (const auto& base : orbit.base_solutions) {
        for (const PellOrbit* walk : {&orbit, &inverse}) {
            PellSolution cur = base;
            std::size_t found = 0, dry = 0;
            while (found < per_base && dry <= period_limit) {
                if (congruent(data, cur)) {
                    hits.push_back(cur);
                    ++found;
                    dry = 0;
                } else {
                    ++dry;
                }
                PellSolution next = pell_step(*walk, cur);
                if (next == cur) break;
                cur = std::move(next);
            }
        }
    }
    std::sort(hits.begin(), hits.end(), pell_less);
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    return hits;
}

IntegerPair pellian_to_xy(std::int64_t a, std::int64_t b, std::int64_t c, const PellSolution& s) {
    const Integer A = to_integer(a), B = to_integer(b), C = to_integer(c);
    return {(s.u - 2 * B + A) / (2 * A), (s.v - C) / 2};
}

bool satisfies(const Poly& lhs, const Poly& rhs, const IntegerPair& p) { return lhs(Rational(p.x)) == rhs(Rational(p.y)); }

Verdict make(Regime r, std::string citation, std::vector<std::pair<std::string, std::string>> witness = {}) {
    return {r, std::move(citation), std::move(witness)};
}

}  // namespace

std::vector<IntegerPair> pellian_family_k1l2(std::int64_t a, std::int64_t b, std::int64_t c, std::size_t count) {
    if (a <= 0) throw DomainError("Pellian family needs a > 0");
    if (std::gcd(a, b) != 1) throw DomainError("Pellian family needs gcd(a, b) = 1");
    if (is_square(to_integer(2 * a))) throw DomainError("2a is a perfect square: no Pell structure");
    const PellianData data = pellian_setup(a, b, c);
    const Poly lhs = power_sum_poly(a, b, 1);
    const Poly rhs = product_poly(c, 2);
    std::vector<IntegerPair> out;
    for (const auto& s : pellian_hits(data, count + 4)) {
        if (out.size() == count) break;
        if (s.u <= 0 || s.v <= 0) continue;
        IntegerPair p = pellian_to_xy(a, b, c, s);
        if (!satisfies(lhs, rhs, p)) throw InvariantError("Pellian orbit element does not solve the equation");
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<IntegerPair> nsw_family_3_2_2_1(std::size_t count) {
    std::vector<IntegerPair> out;
    Integer w = 1, x = 1;
    for (std::size_t i = 0; i < count; ++i) {
        IntegerPair p{x, x * w};
        if (p.x * p.x * (2 * p.x * p.x - 1) != p.y * p.y) throw InvariantError("negative Pell step lost x^2(2x^2-1) = y^2");
        out.push_back(std::move(p));
        Integer nw = 3 * w + 4 * x;
        Integer nx = 2 * w + 3 * x;
        w = std::move(nw);
        x = std::move(nx);
    }
    return out;
}

Verdict classify(const EquationInstance& inst) {
    inst.validate();
    const auto [a, b, c, k, ell] = inst;

    if (c == 0) {
        if (a <= 0) return make(Regime::out_of_theorem_scope, "", {{"reason", "c = 0 needs a > 0"}});
        // The remark's "(k,a,b) != (1,2,1)" only makes sense read as "=": S_{2,1}^1(x) = x^2.
        if (k == 1 && a == 2 && b == 1) return make(Regime::degenerate_identity, "Thm 1.1 remark", {{"equation", "x^2 = y^ell"}});
        struct Exception {
            unsigned k, ell;
            std::optional<std::int64_t> a;
            std::int64_t b;
            Regime regime;
            const char* label;
        };
        static const std::array<Exception, 5> exceptions{{
            {1, 2, std::nullopt, 0, Regime::infinite_family_pell, "(1,2,a,0)"},
            {3, 2, std::nullopt, 0, Regime::exceptional_family, "(3,2,a,0)"},
            {3, 2, 2, 1, Regime::infinite_family_pell, "(3,2,2,1)"},
            {3, 4, std::nullopt, 0, Regime::exceptional_family, "(3,4,a,0)"},
            {5, 2, std::nullopt, 0, Regime::infinite_family_pell, "(5,2,a,0)"},
        }};
        for (const auto& e : exceptions) {
            if (e.k != k || e.ell != ell || e.b != b || (e.a && *e.a != a)) continue;
            std::vector<std::pair<std::string, std::string>> w{{"exception", e.label}};
            if (e.a) {
                w.emplace_back("equation", "x^2(2x^2-1) = y^2");
                w.emplace_back("pell", "w^2 - 2x^2 = -1");
            }
            return make(e.regime, "Thm 1.1 exception", std::move(w));
        }
        return make(Regime::effective_finite, "Thm 1.1", {{"bound", "C2"}});
    }

    if (k == 1 && ell == 2) {
        if (a < 0) return make(Regime::out_of_theorem_scope, "", {{"reason", "a < 0: the Pellian form is definite"}});
        if (is_square(to_integer(2 * a)))
            return make(Regime::out_of_theorem_scope, "", {{"reason", "2a is a perfect square: the Pellian form factors"}});
        const PellianData data = pellian_setup(a, b, c);
        std::vector<std::pair<std::string, std::string>> w{
            {"D", to_string(data.orbit.D)},
            {"N", to_string(data.orbit.N)},
            {"base_search_bound", to_string(data.orbit.search_bound)},
        };
        const auto hits = pellian_hits(data, 2);
        if (hits.empty()) {
            w.emplace_back("solvability", "no base solution below bound");
        } else {
            // Prefer a witness with x >= 0, where the sum has its counting meaning.
            IntegerPair p = pellian_to_xy(a, b, c, hits.front());
            for (const auto& h : hits) {
                IntegerPair q = pellian_to_xy(a, b, c, h);
                if (q.x >= 0) {
                    p = std::move(q);
                    break;
                }
            }
            w.emplace_back("solvability", "solution found");
            w.emplace_back("x", to_string(p.x));
            w.emplace_back("y", to_string(p.y));
        }
        return make(Regime::infinite_family_pell, "Pellian (k,l)=(1,2)", std::move(w));
    }

    const Rational ratio = make_rational(to_integer(a), 1);
    const Rational ba = make_rational(to_integer(b), to_integer(a));
    const Integer A = to_integer(a), C = to_integer(c);
    auto in = [](const Rational& v, std::initializer_list<Rational> set) {
        return std::find(set.begin(), set.end(), v) != set.end();
    };
    if (k == 1 && ell == 4) {
        const std::int64_t two_c2 = 2 * c * c;
        if (a == 2 && (b == two_c2 + 1 || b == -two_c2 + 1))
            return make(Regime::exceptional_family, "Thm 1.3 bullet 1",
                        {{"condition", b == two_c2 + 1 ? "b = 2c^2+1" : "b = -2c^2+1"}});
        return make(Regime::effective_finite, "Thm 1.3", {{"bound", "C3"}});
    }
    if (k == 3 && ell == 2) {
        Rational d = Rational(C * C) / pow(ratio, 3) - bernoulli_poly(4)(ba);
        if (in(d, {Rational(1, 30), Rational(-7, 240)}))
            return make(Regime::exceptional_family, "Thm 1.3 bullet 2", {{"condition", "c^2/a^3 - B4(b/a) = " + to_string(d)}});
        return make(Regime::effective_finite, "Thm 1.3", {{"bound", "C3"}, {"shift", to_string(d)}});
    }
    if (k == 3 && ell == 4) {
        if (a == 1 && b * (b - 1) == 2 * c * c)
            return make(Regime::exceptional_family, "Thm 1.3 bullet 3", {{"condition", "b(b-1) = 2c^2"}});
        return make(Regime::effective_finite, "Thm 1.3", {{"bound", "C3"}});
    }
    if (k == 5 && ell == 2) {
        Rational d = Rational(3 * C * C) / (2 * pow(ratio, 5)) - bernoulli_poly(6)(ba);
        if (in(d, {Rational(-1, 42), Rational(-1, 189)}))
            return make(Regime::exceptional_family, "Thm 1.3 bullet 4",
                        {{"condition", "3c^2/(2a^5) - B6(b/a) = " + to_string(d)}});
        return make(Regime::effective_finite, "Thm 1.3", {{"bound", "C3"}, {"shift", to_string(d)}});
    }
    if (k == 5 && ell == 4) {
        Rational d = Rational(6 * pow(C, 4)) / pow(ratio, 5) - bernoulli_poly(6)(ba);
        if (in(d, {Rational(-1, 42), Rational(-1, 189)}))
            return make(Regime::exceptional_family, "Thm 1.3 bullet 5", {{"condition", "6c^4/a^5 - B6(b/a) = " + to_string(d)}});
        return make(Regime::effective_finite, "Thm 1.3", {{"bound", "C3"}, {"shift", to_string(d)}});
    }

    // Every pair of I_2 (c != 0) has been handled above.
    if (k == 1 || k == 3 || ell == 2 || ell == 4) return make(Regime::effective_finite, "Thm 1.2", {{"bound", "C(a,b,c)"}});

    if (k >= 2 && k != 3 && k != 5 && (ell == 3 || ell >= 5)) {
        if (b == 0) return make(Regime::out_of_theorem_scope, "", {{"reason", "b = 0 is outside the nonzero-parameter hypothesis"}});
        if (std::gcd(a, b) != 1) return make(Regime::out_of_theorem_scope, "", {{"reason", "gcd(a,b) != 1"}});
        return make(Regime::ineffective_finite, "Thm 1.4");
    }
    return make(Regime::out_of_theorem_scope, "", {{"reason", "no theorem covers (k,l)"}});
}

std::vector<IntegerPair> search_solutions(const EquationInstance& inst, std::int64_t x_lo, std::int64_t x_hi) {
    inst.validate();
    if (x_lo > x_hi) throw DomainError("search range needs x_lo <= x_hi");
    const Poly lhs = inst.lhs();
    const PreimageSolver solve(inst.rhs());
    std::vector<IntegerPair> out;
    for (std::int64_t x = x_lo; x <= x_hi; ++x) {
        const Integer X = to_integer(x);
        const Rational value = lhs(Rational(X));
        for (auto& y : solve(value)) out.push_back({X, std::move(y)});
    }
    return out;
}

PowerValueResult power_value_search(std::int64_t a, std::int64_t b, unsigned k, unsigned ell, std::int64_t x_lo,
                                    std::int64_t x_hi) {
    if (a <= 0) throw DomainError("power value search needs a > 0");
    if (std::gcd(a, b) != 1) throw DomainError("power value search needs gcd(a, b) = 1");
    if (ell < 2) throw DomainError("power value search needs ell >= 2");
    if (x_lo > x_hi) throw DomainError("search range needs x_lo <= x_hi");
    const Poly lhs = power_sum_poly(a, b, k);
    PowerValueResult out;
    for (std::int64_t x = x_lo; x <= x_hi; ++x) {
        const Integer X = to_integer(x);
        const Rational value = lhs(Rational(X));
        if (!is_integer(value)) throw InvariantError("power sum is not integer-valued");
        std::vector<Integer> ys;
        if (auto r = exact_root(value.get_num(), ell)) {
            ys.push_back(*r);
            if (ell % 2 == 0 && *r != 0) ys.push_back(-*r);
        }
        std::sort(ys.begin(), ys.end());
        for (auto& y : ys) {
            IntegerPair p{X, std::move(y)};
            (abs(p.y) <= 1 ? out.trivial : out.solutions).push_back(std::move(p));
        }
    }
    return out;
}

ReductionKind parse_reduction_kind(std::string_view name) {
    if (name == "k1_square") return ReductionKind::k1_square;
    if (name == "k3_square") return ReductionKind::k3_square;
    if (name == "l2_square") return ReductionKind::l2_square;
    if (name == "l4_square") return ReductionKind::l4_square;
    throw DomainError("unknown reduction identity '" + std::string(name) + "'");
}

std::string_view to_string(ReductionKind kind) {
    switch (kind) {
        case ReductionKind::k1_square: return "k1_square";
        case ReductionKind::k3_square: return "k3_square";
        case ReductionKind::l2_square: return "l2_square";
        case ReductionKind::l4_square: return "l4_square";
    }
    return "";
}

bool reduction_identity_check(ReductionKind kind, const ReductionParams& params) {
    const Rational a(to_integer(params.a)), b(to_integer(params.b)), c(to_integer(params.c));
    const Poly x = Poly::identity();
    auto constant = [](const Rational& v) { return Poly::constant(v); };
    switch (kind) {
        case ReductionKind::k1_square: {
            const Poly s = power_sum_poly(params.a, params.b, 1);
            const Poly square = pow(Poly::linear(2 * a, 2 * b - a), 2);
            return s * (8 * a) + constant((2 * b - a) * (2 * b - a)) == square;
        }
        case ReductionKind::k3_square: {
            const Poly s = power_sum_poly(params.a, params.b, 3);
            const Poly quad(std::vector<Rational>{2 * b * b - 2 * a * b, 2 * a * b - a * a, a * a});
            const Poly factored = x * Poly::linear(a, 2 * b - a) * quad * Rational(1, 4);
            const Poly big_x(std::vector<Rational>{0, 2 * a * b - a * a, a * a});
            const Rational m = b * b - a * b;
            const Poly completed = pow(big_x + constant(m), 2) - constant(m * m);
            return s == factored && s * (4 * a) == completed;
        }
        case ReductionKind::l2_square: {
            const Poly r = product_poly(params.c, 2);
            return r * Rational(4) + constant(c * c) == pow(Poly::linear(2, c), 2);
        }
        case ReductionKind::l4_square: {
            const Poly r = product_poly(params.c, 4);
            const Poly q(std::vector<Rational>{c * c, 3 * c, 1});
            return r + constant(c * c * c * c) == pow(q, 2);
        }
    }
    return false;
}

}  // namespace sumprod
