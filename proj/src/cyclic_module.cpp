#include "herbrand/cyclic_module.hpp"

#include "herbrand/error.hpp"

namespace herbrand {

CyclicModule::CyclicModule(unsigned long n_, PresentedGroup base_, IntMatrix sigma_)
    : n(n_), base(std::move(base_)), sigma(std::move(sigma_)) {
    if (n == 0)
        throw Error(ErrorCode::Internal, "group order must be >= 1");
    if (sigma.rows() != base.num_generators() || sigma.cols() != base.num_generators())
        throw Error(ErrorCode::Internal, "sigma must be k x k");
}

ValidationReport check_module(const CyclicModule& m) {
    ValidationReport rep;
    const Lattice& rel = m.relations();
    for (std::size_t i = 0; i < rel.rank(); ++i) {
        IntVec image = m.sigma.apply(rel.basis().row(i));
        if (!rel.contains(image)) {
            rep.valid = false;
            rep.code = ErrorCode::RelationsNotPreserved;
            rep.index = i;
            rep.witness = image;
            rep.message = "sigma maps relation row " + std::to_string(i) + " to " +
                          vec_to_string(image) + ", which is outside the relation lattice";
            return rep;
        }
    }
    const std::size_t k = m.num_generators();
    IntMatrix power = IntMatrix::identity(k);
    for (unsigned long i = 0; i < m.n; ++i) power = m.sigma * power;
    IntMatrix diff = power - IntMatrix::identity(k);
    for (std::size_t j = 0; j < k; ++j) {
        IntVec col(k);
        for (std::size_t i = 0; i < k; ++i) col[i] = diff.at(i, j);
        if (!rel.contains(col)) {
            rep.valid = false;
            rep.code = ErrorCode::OrderViolation;
            rep.index = j;
            rep.witness = col;
            rep.message = "sigma^n differs from the identity on generator " + std::to_string(j) +
                          " by " + vec_to_string(col) + ", which is not a relation";
            return rep;
        }
    }
    return rep;
}

void validate_module(const CyclicModule& m) {
    ValidationReport rep = check_module(m);
    if (!rep.valid) throw Error(rep.code, rep.message);
}

IntMatrix norm_matrix(const CyclicModule& m) {
    const std::size_t k = m.num_generators();
    IntMatrix acc(k, k);
    IntMatrix power = IntMatrix::identity(k);
    for (unsigned long i = 0; i < m.n; ++i) {
        acc = acc + power;
        power = m.sigma * power;
    }
    return acc;
}

Lattice fixed_point_lattice(const CyclicModule& m) {
    const std::size_t k = m.num_generators();
    return preimage_lattice(m.sigma - IntMatrix::identity(k), m.relations());
}

Lattice anti_fixed_lattice(const CyclicModule& m) {
    const std::size_t k = m.num_generators();
    return preimage_lattice(m.sigma + IntMatrix::identity(k), m.relations());
}

Lattice norm_image_lattice(const CyclicModule& m) {
    const std::size_t k = m.num_generators();
    return Lattice::full(k).image_under(norm_matrix(m)).sum(m.relations());
}

Lattice norm_kernel_lattice(const CyclicModule& m) {
    return preimage_lattice(norm_matrix(m), m.relations());
}

Lattice one_minus_sigma_image_lattice(const CyclicModule& m) {
    const std::size_t k = m.num_generators();
    IntMatrix one_minus = IntMatrix::identity(k) - m.sigma;
    return Lattice::full(k).image_under(one_minus).sum(m.relations());
}

PresentedGroup fixed_submodule(const CyclicModule& m) {
    validate_module(m);
    return quotient_presentation(fixed_point_lattice(m), m.relations());
}

CyclicModule direct_sum(const CyclicModule& a, const CyclicModule& b) {
    if (a.n != b.n)
        throw Error(ErrorCode::GroupOrderMismatch,
                    "direct sum requires matching group orders (" + std::to_string(a.n) +
                        " vs " + std::to_string(b.n) + ")");
    const std::size_t ka = a.num_generators(), kb = b.num_generators();
    IntMatrix sigma(ka + kb, ka + kb);
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < ka; ++j) sigma.at(i, j) = a.sigma.at(i, j);
    for (std::size_t i = 0; i < kb; ++i)
        for (std::size_t j = 0; j < kb; ++j) sigma.at(ka + i, ka + j) = b.sigma.at(i, j);
    std::vector<IntVec> rels;
    for (std::size_t i = 0; i < a.relations().rank(); ++i) {
        IntVec row(ka + kb);
        for (std::size_t j = 0; j < ka; ++j) row[j] = a.relations().basis().at(i, j);
        rels.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < b.relations().rank(); ++i) {
        IntVec row(ka + kb);
        for (std::size_t j = 0; j < kb; ++j) row[ka + j] = b.relations().basis().at(i, j);
        rels.push_back(std::move(row));
    }
    return CyclicModule(a.n, PresentedGroup::from_relation_rows(ka + kb, rels), sigma);
}

CyclicModule change_basis(const CyclicModule& m, const IntMatrix& w, const IntMatrix& w_inv) {
    const std::size_t k = m.num_generators();
    if (!(w * w_inv).is_identity())
        throw Error(ErrorCode::Internal, "change_basis: w_inv is not the inverse of w");
    Lattice new_rel = m.relations().image_under(w);
    IntMatrix new_sigma = w * m.sigma * w_inv;
    return CyclicModule(m.n, PresentedGroup(k, new_rel), new_sigma);
}

}  // namespace herbrand
