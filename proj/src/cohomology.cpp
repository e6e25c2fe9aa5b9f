#include "herbrand/cohomology.hpp"

#include <set>

#include "herbrand/error.hpp"

namespace herbrand {

namespace {

InvariantFactors h0_unchecked(const CyclicModule& m) {
    return invariant_factors(quotient_presentation(fixed_point_lattice(m), norm_image_lattice(m)));
}

InvariantFactors h1_unchecked(const CyclicModule& m) {
    return invariant_factors(
        quotient_presentation(norm_kernel_lattice(m), one_minus_sigma_image_lattice(m)));
}

Int order_of(const InvariantFactors& f) {
    auto o = f.order();
    if (!o)
        throw Error(ErrorCode::Internal, "cohomology group came out infinite");
    return *o;
}

}  // namespace

InvariantFactors tate_h0(const CyclicModule& m) {
    validate_module(m);
    return h0_unchecked(m);
}

InvariantFactors h1(const CyclicModule& m) {
    validate_module(m);
    return h1_unchecked(m);
}

HerbrandReport herbrand_quotient(const CyclicModule& m) {
    validate_module(m);
    TateGroups tate;
    tate.h0 = h0_unchecked(m);
    tate.h1 = h1_unchecked(m);
    tate.h0_order = order_of(tate.h0);
    tate.h1_order = order_of(tate.h1);
    Rat q(tate.h0_order, tate.h1_order);
    q.canonicalize();
    return HerbrandReport{q, std::move(tate)};
}

Order2Profile order2_profile(const CyclicModule& m) {
    if (m.n != 2)
        throw Error(ErrorCode::WrongGroupOrder,
                    "order-2 profile requires n = 2, got n = " + std::to_string(m.n));
    validate_module(m);

    const std::size_t k = m.num_generators();
    const Lattice& rel = m.relations();
    Lattice fixed = fixed_point_lattice(m);
    Lattice anti = anti_fixed_lattice(m);
    Lattice norm_im = norm_image_lattice(m);

    Order2Profile p;
    p.r = k - rel.rank();
    p.r_plus = fixed.rank() - rel.rank();
    p.r_minus = anti.rank() - rel.rank();
    p.two_torsion_plus =
        *group_order(m_torsion(quotient_presentation(fixed, rel), 2));
    p.index_sum = finite_lattice_index(Lattice::full(k), fixed.sum(anti));
    p.index_norm = finite_lattice_index(fixed, norm_im);

    // 2^r_minus * #A^+[2] / (A : A^+ + A^-)
    Rat via_sum(pow_int(2, p.r_minus) * p.two_torsion_plus, p.index_sum);
    via_sum.canonicalize();
    // 2^(r_minus - r_plus) * (A^+ : NA)
    Rat via_norm = pow2_rat(static_cast<long>(p.r_minus) - static_cast<long>(p.r_plus)) *
                   Rat(p.index_norm);
    via_norm.canonicalize();
    if (via_sum != via_norm || via_sum.get_den() != 1)
        throw Error(ErrorCode::Internal,
                    "order-2 profile expressions disagree: " + via_sum.get_str() + " vs " +
                        via_norm.get_str());
    p.predicted_h1 = via_sum.get_num();
    p.predicted_h = pow2_rat(2 * static_cast<long>(p.r_plus) - static_cast<long>(p.r));
    return p;
}

H1IndexFormula h1_index_formula(const CyclicModule& m) {
    validate_module(m);
    const std::size_t k = m.num_generators();
    const Lattice& rel = m.relations();
    const Int n_scalar(m.n);

    Lattice fixed = fixed_point_lattice(m);
    Lattice norm_ker = norm_kernel_lattice(m);
    Lattice norm_im = norm_image_lattice(m);
    IntMatrix one_minus = IntMatrix::identity(k) - m.sigma;
    Lattice im_all = Lattice::full(k).image_under(one_minus).sum(rel);
    Lattice im_of_kernel = norm_ker.image_under(one_minus).sum(rel);

    H1IndexFormula f;
    f.numerator = finite_lattice_index(norm_ker, im_of_kernel);
    f.denominator = finite_lattice_index(norm_im, fixed.scaled(n_scalar).sum(rel));
    f.chain_fixed_plus_kernel = finite_lattice_index(Lattice::full(k), fixed.sum(norm_ker));
    f.chain_image = finite_lattice_index(im_all, im_of_kernel);
    if (f.denominator != f.chain_fixed_plus_kernel || f.denominator != f.chain_image)
        throw Error(ErrorCode::Internal, "index chain broke: " + f.denominator.get_str() + ", " +
                                             f.chain_fixed_plus_kernel.get_str() + ", " +
                                             f.chain_image.get_str());
    f.h1_order = exact_div(f.numerator, f.denominator);
    return f;
}

namespace {

// Canonical coset representative modulo a full-rank relation lattice whose
// HNF basis is upper triangular with positive diagonal.
IntVec reduce_coset(const IntMatrix& basis, IntVec v) {
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        Int q = floor_div(v[i], basis.at(i, i));
        if (q != 0)
            for (std::size_t j = i; j < v.size(); ++j) v[j] -= q * basis.at(i, j);
    }
    return v;
}

}  // namespace

BruteForceOrders brute_force_cohomology(const CyclicModule& m, const Int& bound) {
    validate_module(m);
    const std::size_t k = m.num_generators();
    const Lattice& rel = m.relations();
    if (rel.rank() < k)
        throw Error(ErrorCode::ModuleInfinite,
                    "enumeration requires a finite module (relation rank " +
                        std::to_string(rel.rank()) + " < " + std::to_string(k) + ")");
    Int order = 1;
    for (std::size_t i = 0; i < k; ++i) order *= rel.basis().at(i, i);
    if (order > bound)
        throw Error(ErrorCode::BoundExceeded, "module has " + order.get_str() +
                                                  " elements, enumeration bound is " +
                                                  bound.get_str());

    const IntMatrix& basis = rel.basis();
    IntMatrix norm = norm_matrix(m);

    // Walk the box of canonical representatives with a mixed-radix counter.
    std::set<IntVec> fixed, norm_image, norm_kernel, diff_image;
    IntVec x(k, 0);
    const IntVec zero(k, 0);
    for (;;) {
        IntVec sx = reduce_coset(basis, m.sigma.apply(x));
        IntVec nx = reduce_coset(basis, norm.apply(x));
        if (sx == x) fixed.insert(x);
        norm_image.insert(nx);
        if (nx == zero) norm_kernel.insert(x);
        diff_image.insert(reduce_coset(basis, vec_sub(x, sx)));
        // increment
        std::size_t i = 0;
        while (i < k) {
            x[i] += 1;
            if (x[i] < basis.at(i, i)) break;
            x[i] = 0;
            ++i;
        }
        if (i == k) break;
    }

    BruteForceOrders out;
    out.h0_order = exact_div(Int(fixed.size()), Int(norm_image.size()));
    out.h1_order = exact_div(Int(norm_kernel.size()), Int(diff_image.size()));
    return out;
}

}  // namespace herbrand
