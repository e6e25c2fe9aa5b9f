#pragma once

#include "herbrand/cyclic_module.hpp"

namespace herbrand {

/// Deterministic test-fixture generator. The output always validates. The
/// construction mixes permutation blocks, sign-twisted rank-1 blocks,
/// companion blocks of cyclotomic divisors of x^n - 1, and finite quotients
/// with a compatible action, optionally scrambled by a unimodular change of
/// basis.
CyclicModule random_cyclic_module(std::uint64_t seed, unsigned long n, std::size_t rank_bound = 4,
                                  unsigned long torsion_bound = 9);

/// Same mixer, constrained to finite modules of order <= max_order.
CyclicModule random_finite_cyclic_module(std::uint64_t seed, unsigned long n,
                                         const Int& max_order);

/// Coefficients of the d-th cyclotomic polynomial, ascending degree.
IntVec cyclotomic_polynomial(unsigned long d);

}  // namespace herbrand
