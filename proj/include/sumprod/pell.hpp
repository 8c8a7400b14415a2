#pragma once

#include <cstddef>
#include <vector>

#include "sumprod/rational.hpp"

namespace sumprod {

struct PellSolution {
    Integer u;
    Integer v;
    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/// Minimal u, v > 0 with u^2 - D v^2 = 1, from the continued fraction of sqrt(D).
/// Throws DomainError if D < 2 or D is a perfect square.
PellSolution pell_fundamental(const Integer& D);

/// u^2 - D v^2 = N with the fundamental unit acting on a set of base solutions.
struct PellOrbit {
    Integer D;
    Integer N;
    PellSolution fundamental;
    std::vector<PellSolution> base_solutions;
    /// Largest |v| examined when the bases were found by search.
    Integer search_bound;
};

/// Bases by exhaustive search over 0 <= v <= V, every sign combination of
/// (u, v) kept, with V = isqrt(v0^2 |N| / (2 (u0 - 1))) + 1. Every solution
/// lies in the orbit of one of them.
PellOrbit make_pell_orbit(const Integer& D, const Integer& N);

/// (u, v) -> (u u0 + D v v0, u v0 + v u0)
PellSolution pell_step(const PellOrbit& orbit, const PellSolution& s);

/// First `count` elements (base included) of every base's forward orbit,
/// merged without duplicates and sorted by (|u|, u, v).
/// Throws DomainError if the orbit data is inconsistent.
std::vector<PellSolution> pell_orbit_solutions(const PellOrbit& orbit, std::size_t count);

bool pell_less(const PellSolution& x, const PellSolution& y);

}  // namespace sumprod
