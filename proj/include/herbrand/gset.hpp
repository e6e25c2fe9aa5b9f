#pragma once

#include "herbrand/cohomology.hpp"

namespace herbrand {

/// Finite set with a cyclic action: pi is the image array of the generator,
/// a permutation of {0, ..., points-1} whose order divides n.
struct GSet {
    unsigned long n = 1;
    std::size_t points = 0;
    std::vector<std::size_t> pi;

    GSet(unsigned long n_, std::vector<std::size_t> pi_)
        : n(n_), points(pi_.size()), pi(std::move(pi_)) {}
};

/// Throws INVALID_PERMUTATION / ORDER_MISMATCH when the GSet invariants fail.
void validate_gset(const GSet& x);

struct OrbitDecomposition {
    std::vector<std::vector<std::size_t>> orbits;
    /// Minimum point index per orbit, in discovery order.
    std::vector<std::size_t> representatives;
    std::vector<unsigned long> stabilizer_orders;
};

OrbitDecomposition orbit_decomposition(const GSet& x);

/// Orbit count via fixed-point averaging: (1/n) * sum of Fix(pi^k).
std::size_t burnside_orbit_count(const GSet& x);

/// Free Z-module on the points with sigma the permutation matrix of pi.
CyclicModule permutation_module(const GSet& x);

/// Product of the stabilizer orders over orbit representatives; this is the
/// Herbrand quotient of the permutation module, computed without touching
/// the cohomology machinery.
Int orbit_herbrand_formula(const GSet& x);

/// #H^1 of the permutation module as (A^G : N_G A) divided by the orbit
/// product; the division is checked to be exact.
Int h1_orbit_formula(const GSet& x);

/// Direct sum of the permutation module with a finite module t (same n),
/// scrambled by a seeded unimodular change of basis. The finite summand
/// cannot move the Herbrand quotient.
CyclicModule finite_index_perturbation(const GSet& x, const CyclicModule& t, std::uint64_t seed);

}  // namespace herbrand
