#pragma once

#include <optional>

#include "herbrand/normal_forms.hpp"

namespace herbrand {

/// Sublattice of Z^d, stored as the Hermite normal form of a generating set.
/// The HNF basis is canonical, so lattice equality is plain comparison.
class Lattice {
public:
    /// The zero lattice in Z^d.
    explicit Lattice(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    static Lattice from_generators(std::size_t ambient_dim, const std::vector<IntVec>& gens);
    static Lattice from_generators(const IntMatrix& gens);
    static Lattice full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    /// rank x ambient matrix whose rows form the canonical basis.
    const IntMatrix& basis() const { return basis_; }

    bool contains(const IntVec& v) const;
    bool contains(const Lattice& other) const;
    /// Coefficients c with c * basis == v, when v lies in the lattice.
    std::optional<IntVec> coordinates(const IntVec& v) const;

    Lattice sum(const Lattice& other) const;
    Lattice scaled(const Int& c) const;
    /// Image lattice {m * v : v in this} inside Z^{m.rows()}.
    Lattice image_under(const IntMatrix& m) const;

    friend bool operator==(const Lattice& a, const Lattice& b) = default;

private:
    std::size_t ambient_;
    IntMatrix basis_;
};

/// Saturated basis of the integer kernel {x : m * x = 0} in Z^{m.cols()}.
Lattice kernel_basis(const IntMatrix& m);

/// {x in Z^{m.cols()} : m * x lies in target}. Always contains kernel_basis(m).
Lattice preimage_lattice(const IntMatrix& m, const Lattice& target);

/// Index [l1 : l2] for l2 a sublattice of l1; nullopt means infinite
/// (rank drop). Throws NotSublattice when l2 is not contained in l1.
std::optional<Int> lattice_index(const Lattice& l1, const Lattice& l2);

/// lattice_index for callers that know the index is finite.
Int finite_lattice_index(const Lattice& l1, const Lattice& l2);

}  // namespace herbrand
