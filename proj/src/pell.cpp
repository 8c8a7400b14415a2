#include "sumprod/pell.hpp"

#include <algorithm>

#include "sumprod/error.hpp"

namespace sumprod {

PellSolution pell_fundamental(const Integer& D) {
    if (D < 2 || is_square(D)) throw DomainError("Pell equation needs a nonsquare D >= 2");
    const Integer a0 = isqrt(D);
    Integer m = 0, d = 1, a = a0;
    Integer h_prev = 1, h = a0;
    Integer k_prev = 0, k = 1;
    while (h * h - D * k * k != 1) {
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        Integer h_next = a * h + h_prev;
        Integer k_next = a * k + k_prev;
        h_prev = std::move(h);
        h = std::move(h_next);
        k_prev = std::move(k);
        k = std::move(k_next);
    }
    return {h, k};
}

PellOrbit make_pell_orbit(const Integer& D, const Integer& N) {
    PellOrbit orbit;
    orbit.D = D;
    orbit.N = N;
    orbit.fundamental = pell_fundamental(D);
    const Integer& u0 = orbit.fundamental.u;
    const Integer& v0 = orbit.fundamental.v;
    const Integer absN = abs(N);
    orbit.search_bound = isqrt(v0 * v0 * absN / (2 * (u0 - 1))) + 1;
    for (Integer v = 0; v <= orbit.search_bound; ++v) {
        Integer t = N + D * v * v;
        if (!is_square(t)) continue;
        Integer u = isqrt(t);
        for (const Integer& su : {u, Integer(-u)})
            for (const Integer& sv : {v, Integer(-v)}) {
                PellSolution s{su, sv};
                if (std::find(orbit.base_solutions.begin(), orbit.base_solutions.end(), s) == orbit.base_solutions.end())
                    orbit.base_solutions.push_back(s);
            }
    }
    std::sort(orbit.base_solutions.begin(), orbit.base_solutions.end(), pell_less);
    return orbit;
}

PellSolution pell_step(const PellOrbit& orbit, const PellSolution& s) {
    const auto& f = orbit.fundamental;
    return {s.u * f.u + orbit.D * s.v * f.v, s.u * f.v + s.v * f.u};
}

bool pell_less(const PellSolution& x, const PellSolution& y) {
    const Integer ax = abs(x.u), ay = abs(y.u);
    if (ax != ay) return ax < ay;
    if (x.u != y.u) return x.u < y.u;
    return x.v < y.v;
}

std::vector<PellSolution> pell_orbit_solutions(const PellOrbit& orbit, std::size_t count) {
    const auto& f = orbit.fundamental;
    if (f.u * f.u - orbit.D * f.v * f.v != 1) throw DomainError("fundamental solution does not solve u^2 - D v^2 = 1");
    std::vector<PellSolution> out;
    for (const auto& base : orbit.base_solutions) {
        if (base.u * base.u - orbit.D * base.v * base.v != orbit.N)
            throw DomainError("base solution does not solve u^2 - D v^2 = N");
        PellSolution cur = base;
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(cur);
            cur = pell_step(orbit, cur);
        }
    }
    std::sort(out.begin(), out.end(), pell_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace sumprod
