#pragma once

#include "herbrand/cyclic_module.hpp"

namespace herbrand {

struct TateGroups {
    InvariantFactors h0;
    InvariantFactors h1;
    Int h0_order;
    Int h1_order;
};

struct HerbrandReport {
    /// Exact reduced rational h0_order / h1_order; never a float.
    Rat quotient;
    TateGroups tate;
};

/// H^0(G,A) = A^G / N_G A as invariant factors. Always finite.
InvariantFactors tate_h0(const CyclicModule& m);

/// H^1(G,A) = ker N_G / (1-sigma)A as invariant factors. Always finite.
InvariantFactors h1(const CyclicModule& m);

HerbrandReport herbrand_quotient(const CyclicModule& m);

/// Structural invariants of a module over the group of order 2, together
/// with the closed-form predictions for #H^1 and the Herbrand quotient they
/// force. The predictions are computed without touching the H^1 lattices.
struct Order2Profile {
    std::size_t r_plus = 0;      // rank of the fixed part A^+
    std::size_t r_minus = 0;     // rank of the anti-fixed part A^-
    std::size_t r = 0;           // rank of A
    Int two_torsion_plus;        // #A^+[2]
    Int index_sum;               // (A : A^+ + A^-)
    Int index_norm;              // (A^+ : NA)
    Int predicted_h1;            // 2^(r_minus - r_plus) * index_norm
    Rat predicted_h;             // 2^(2 r_plus - r)
};

Order2Profile order2_profile(const CyclicModule& m);

/// #H^1 as a quotient of two lattice indices, valid for any n:
/// [ker N : (1-sigma) ker N] / [NA : n A^G]; the denominator equals two
/// further indices which are reported for cross-checking.
struct H1IndexFormula {
    Int numerator;                 // [ker N : (1-sigma) ker N]
    Int denominator;               // [NA : n A^G]
    Int chain_fixed_plus_kernel;   // [A : A^G + ker N]
    Int chain_image;               // [(1-sigma)A : (1-sigma) ker N]
    Int h1_order;                  // numerator / denominator, exact
};

H1IndexFormula h1_index_formula(const CyclicModule& m);

struct BruteForceOrders {
    Int h0_order;
    Int h1_order;
};

inline const Int kDefaultEnumerationBound = Int(1) << 16;

/// Independent oracle: enumerates every element of a finite module and
/// computes the four subgroups by direct evaluation. Never consults the
/// lattice machinery beyond the canonical relation basis.
BruteForceOrders brute_force_cohomology(const CyclicModule& m,
                                        const Int& bound = kDefaultEnumerationBound);

}  // namespace herbrand
