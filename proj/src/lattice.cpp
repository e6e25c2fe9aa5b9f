#include "herbrand/lattice.hpp"

#include "herbrand/error.hpp"

namespace herbrand {

namespace {

// Pivot column of each basis row; the HNF guarantees they increase strictly.
std::vector<std::size_t> pivot_columns(const IntMatrix& basis) {
    std::vector<std::size_t> pivots(basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        std::size_t j = 0;
        while (j < basis.cols() && basis.at(i, j) == 0) ++j;
        pivots[i] = j;
    }
    return pivots;
}

}  // namespace

Lattice Lattice::from_generators(std::size_t ambient_dim, const std::vector<IntVec>& gens) {
    return from_generators(IntMatrix::from_rows(ambient_dim, gens));
}

Lattice Lattice::from_generators(const IntMatrix& gens) {
    auto hnf = hermite_normal_form(gens);
    Lattice l(gens.cols());
    IntMatrix basis(hnf.rank, gens.cols());
    for (std::size_t i = 0; i < hnf.rank; ++i)
        for (std::size_t j = 0; j < gens.cols(); ++j) basis.at(i, j) = hnf.h.at(i, j);
    l.basis_ = std::move(basis);
    return l;
}

Lattice Lattice::full(std::size_t ambient_dim) {
    Lattice l(ambient_dim);
    l.basis_ = IntMatrix::identity(ambient_dim);
    return l;
}

std::optional<IntVec> Lattice::coordinates(const IntVec& v) const {
    if (v.size() != ambient_)
        throw Error(ErrorCode::Internal, "coordinates: ambient dimension mismatch");
    auto pivots = pivot_columns(basis_);
    IntVec c(basis_.rows());
    IntVec w = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const Int& pivot = basis_.at(i, pivots[i]);
        if (w[pivots[i]] % pivot != 0) return std::nullopt;
        Int q = w[pivots[i]] / pivot;
        if (q != 0)
            for (std::size_t j = pivots[i]; j < ambient_; ++j) w[j] -= q * basis_.at(i, j);
        c[i] = q;
    }
    if (!vec_is_zero(w)) return std::nullopt;
    return c;
}

bool Lattice::contains(const IntVec& v) const { return coordinates(v).has_value(); }

bool Lattice::contains(const Lattice& other) const {
    if (other.ambient_ != ambient_)
        throw Error(ErrorCode::Internal, "contains: ambient dimension mismatch");
    for (std::size_t i = 0; i < other.rank(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Lattice Lattice::sum(const Lattice& other) const {
    if (other.ambient_ != ambient_)
        throw Error(ErrorCode::Internal, "sum: ambient dimension mismatch");
    IntMatrix stacked(rank() + other.rank(), ambient_);
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
    for (std::size_t i = 0; i < other.rank(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j)
            stacked.at(rank() + i, j) = other.basis_.at(i, j);
    return from_generators(stacked);
}

Lattice Lattice::scaled(const Int& c) const {
    if (c == 0) return Lattice(ambient_);
    return from_generators(c * basis_);
}

Lattice Lattice::image_under(const IntMatrix& m) const {
    if (m.cols() != ambient_)
        throw Error(ErrorCode::Internal, "image_under: dimension mismatch");
    std::vector<IntVec> images;
    images.reserve(rank());
    for (std::size_t i = 0; i < rank(); ++i) images.push_back(m.apply(basis_.row(i)));
    return from_generators(m.rows(), images);
}

Lattice kernel_basis(const IntMatrix& m) {
    // Row-reduce the transpose; rows of U matching zero rows of H span the
    // kernel, and they are primitive because U is unimodular.
    auto hnf = hermite_normal_form(m.transpose());
    std::vector<IntVec> gens;
    for (std::size_t i = hnf.rank; i < hnf.u.rows(); ++i) gens.push_back(hnf.u.row(i));
    return Lattice::from_generators(m.cols(), gens);
}

Lattice preimage_lattice(const IntMatrix& m, const Lattice& target) {
    if (target.ambient_dim() != m.rows())
        throw Error(ErrorCode::Internal, "preimage_lattice: codomain mismatch");
    const std::size_t n = m.cols(), s = target.rank();
    // x is in the preimage iff (x, y) solves m*x - y*basis = 0 for some y;
    // project the kernel of the block map [m | -basis^T] onto the x part.
    IntMatrix block(m.rows(), n + s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) block.at(i, j) = m.at(i, j);
        for (std::size_t j = 0; j < s; ++j) block.at(i, n + j) = -target.basis().at(j, i);
    }
    Lattice ker = kernel_basis(block);
    std::vector<IntVec> gens;
    gens.reserve(ker.rank());
    for (std::size_t i = 0; i < ker.rank(); ++i) {
        IntVec row = ker.basis().row(i);
        gens.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
    }
    return Lattice::from_generators(n, gens);
}

std::optional<Int> lattice_index(const Lattice& l1, const Lattice& l2) {
    if (l1.ambient_dim() != l2.ambient_dim())
        throw Error(ErrorCode::Internal, "lattice_index: ambient dimension mismatch");
    IntMatrix coeffs(l2.rank(), l1.rank());
    for (std::size_t i = 0; i < l2.rank(); ++i) {
        auto c = l1.coordinates(l2.basis().row(i));
        if (!c)
            throw Error(ErrorCode::NotSublattice,
                        "basis vector " + vec_to_string(l2.basis().row(i)) +
                            " lies outside the ambient lattice");
        for (std::size_t j = 0; j < l1.rank(); ++j) coeffs.at(i, j) = (*c)[j];
    }
    if (l2.rank() < l1.rank()) return std::nullopt;
    auto snf = smith_normal_form(coeffs);
    Int idx = 1;
    for (std::size_t i = 0; i < std::min(coeffs.rows(), coeffs.cols()); ++i)
        idx *= snf.d.at(i, i);
    if (idx == 0)
        throw Error(ErrorCode::Internal, "lattice_index: degenerate change of basis");
    return idx;
}

Int finite_lattice_index(const Lattice& l1, const Lattice& l2) {
    auto idx = lattice_index(l1, l2);
    if (!idx)
        throw Error(ErrorCode::Internal, "expected finite lattice index");
    return *idx;
}

}  // namespace herbrand
