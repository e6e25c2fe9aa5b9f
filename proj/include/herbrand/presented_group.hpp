#pragma once

#include "herbrand/lattice.hpp"

namespace herbrand {

/// Finitely generated abelian group presented as Z^k / relations.
class PresentedGroup {
public:
    /// Free group Z^k.
    explicit PresentedGroup(std::size_t num_generators)
        : k_(num_generators), relations_(num_generators) {}

    PresentedGroup(std::size_t num_generators, Lattice relations);

    static PresentedGroup from_relation_rows(std::size_t num_generators,
                                             const std::vector<IntVec>& rows);

    std::size_t num_generators() const { return k_; }
    const Lattice& relations() const { return relations_; }

    friend bool operator==(const PresentedGroup& a, const PresentedGroup& b) = default;

private:
    std::size_t k_;
    Lattice relations_;
};

/// Canonical decomposition: free rank plus the divisor chain d1 | d2 | ...,
/// each di >= 2.
struct InvariantFactors {
    std::size_t free_rank = 0;
    IntVec torsion_divisors;

    /// Group order; nullopt when the free rank is positive.
    std::optional<Int> order() const;
    bool trivial() const { return free_rank == 0 && torsion_divisors.empty(); }
    std::string to_string() const;

    friend bool operator==(const InvariantFactors& a, const InvariantFactors& b) = default;
};

InvariantFactors invariant_factors(const PresentedGroup& g);

/// nullopt encodes an infinite group.
std::optional<Int> group_order(const PresentedGroup& g);

/// Presentation of the m-torsion subgroup {a : m*a = 0}.
PresentedGroup m_torsion(const PresentedGroup& g, const Int& m);

/// Presentation of top/bottom for nested lattices bottom <= top <= Z^d.
PresentedGroup quotient_presentation(const Lattice& top, const Lattice& bottom);

}  // namespace herbrand
