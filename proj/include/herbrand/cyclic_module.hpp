#pragma once

#include "herbrand/presented_group.hpp"

namespace herbrand {

/// Module over a cyclic group of order n: a presented abelian group together
/// with the k x k integer matrix of the generator's action on generator
/// classes (column-vector convention).
struct CyclicModule {
    unsigned long n = 1;
    PresentedGroup base;
    IntMatrix sigma;

    CyclicModule(unsigned long n_, PresentedGroup base_, IntMatrix sigma_);

    std::size_t num_generators() const { return base.num_generators(); }
    const Lattice& relations() const { return base.relations(); }
};

struct ValidationReport {
    bool valid = true;
    ErrorCode code = ErrorCode::Internal;
    /// Index of the violating relation row (RELATIONS_NOT_PRESERVED) or
    /// generator (ORDER_VIOLATION).
    std::size_t index = 0;
    IntVec witness;
    std::string message;
};

/// Checks that sigma maps the relation lattice into itself and that sigma^n
/// is the identity modulo relations.
ValidationReport check_module(const CyclicModule& m);

/// check_module, throwing on failure. Every public cohomology operation
/// starts here: an invalid action silently yields meaningless indices.
void validate_module(const CyclicModule& m);

/// N = 1 + sigma + ... + sigma^(n-1).
IntMatrix norm_matrix(const CyclicModule& m);

// The four canonical sublattices of Z^k sandwiched between the relation
// lattice and Z^k. All cohomology orders are indices between them.
Lattice fixed_point_lattice(const CyclicModule& m);           // {x : (sigma-1)x in R}
Lattice anti_fixed_lattice(const CyclicModule& m);            // {x : (sigma+1)x in R}
Lattice norm_image_lattice(const CyclicModule& m);            // N Z^k + R
Lattice norm_kernel_lattice(const CyclicModule& m);           // {x : N x in R}
Lattice one_minus_sigma_image_lattice(const CyclicModule& m); // (1-sigma) Z^k + R

/// Presentation of the fixed submodule A^G.
PresentedGroup fixed_submodule(const CyclicModule& m);

/// Block direct sum; both summands must carry the same group order n.
CyclicModule direct_sum(const CyclicModule& a, const CyclicModule& b);

/// Rewrites the module in the coordinates x' = w x; w_inv must be the exact
/// integer inverse of w.
CyclicModule change_basis(const CyclicModule& m, const IntMatrix& w, const IntMatrix& w_inv);

}  // namespace herbrand
