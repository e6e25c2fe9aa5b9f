#include "herbrand/gset.hpp"

#include <algorithm>

#include "herbrand/error.hpp"
#include "herbrand/rng.hpp"

namespace herbrand {

void validate_gset(const GSet& x) {
    if (x.n == 0)
        throw Error(ErrorCode::OrderMismatch, "group order must be >= 1");
    if (x.pi.size() != x.points)
        throw Error(ErrorCode::InvalidPermutation, "image array length differs from point count");
    std::vector<bool> seen(x.points, false);
    for (std::size_t i = 0; i < x.points; ++i) {
        if (x.pi[i] >= x.points)
            throw Error(ErrorCode::InvalidPermutation,
                        "image of point " + std::to_string(i) + " is out of range");
        if (seen[x.pi[i]])
            throw Error(ErrorCode::InvalidPermutation,
                        "point " + std::to_string(x.pi[i]) + " has two preimages");
        seen[x.pi[i]] = true;
    }
    // pi^n = id is equivalent to every cycle length dividing n.
    std::vector<bool> visited(x.points, false);
    for (std::size_t i = 0; i < x.points; ++i) {
        if (visited[i]) continue;
        std::size_t len = 0, j = i;
        do {
            visited[j] = true;
            j = x.pi[j];
            ++len;
        } while (j != i);
        if (x.n % len != 0)
            throw Error(ErrorCode::OrderMismatch,
                        "cycle through point " + std::to_string(i) + " has length " +
                            std::to_string(len) + ", which does not divide n = " +
                            std::to_string(x.n));
    }
}

OrbitDecomposition orbit_decomposition(const GSet& x) {
    validate_gset(x);
    OrbitDecomposition dec;
    std::vector<bool> visited(x.points, false);
    for (std::size_t i = 0; i < x.points; ++i) {
        if (visited[i]) continue;
        std::vector<std::size_t> orbit;
        std::size_t j = i;
        do {
            visited[j] = true;
            orbit.push_back(j);
            j = x.pi[j];
        } while (j != i);
        dec.representatives.push_back(*std::min_element(orbit.begin(), orbit.end()));
        dec.stabilizer_orders.push_back(x.n / orbit.size());
        dec.orbits.push_back(std::move(orbit));
    }
    return dec;
}

std::size_t burnside_orbit_count(const GSet& x) {
    validate_gset(x);
    std::size_t total_fixed = 0;
    std::vector<std::size_t> power(x.points);
    for (std::size_t i = 0; i < x.points; ++i) power[i] = i;
    for (unsigned long k = 0; k < x.n; ++k) {
        for (std::size_t i = 0; i < x.points; ++i)
            if (power[i] == i) ++total_fixed;
        for (std::size_t i = 0; i < x.points; ++i) power[i] = x.pi[power[i]];
    }
    if (total_fixed % x.n != 0)
        throw Error(ErrorCode::Internal, "fixed-point average is not an integer");
    return total_fixed / x.n;
}

CyclicModule permutation_module(const GSet& x) {
    validate_gset(x);
    IntMatrix sigma(x.points, x.points);
    for (std::size_t j = 0; j < x.points; ++j) sigma.at(x.pi[j], j) = 1;
    return CyclicModule(x.n, PresentedGroup(x.points), sigma);
}

Int orbit_herbrand_formula(const GSet& x) {
    auto dec = orbit_decomposition(x);
    Int product = 1;
    for (auto s : dec.stabilizer_orders) product *= s;
    return product;
}

Int h1_orbit_formula(const GSet& x) {
    CyclicModule mod = permutation_module(x);
    Int fixed_index = finite_lattice_index(fixed_point_lattice(mod), norm_image_lattice(mod));
    Int orbit_product = orbit_herbrand_formula(x);
    return exact_div(fixed_index, orbit_product);
}

CyclicModule finite_index_perturbation(const GSet& x, const CyclicModule& t, std::uint64_t seed) {
    if (t.n != x.n)
        throw Error(ErrorCode::GroupOrderMismatch,
                    "perturbation summand carries n = " + std::to_string(t.n) +
                        ", G-set has n = " + std::to_string(x.n));
    validate_module(t);
    if (!group_order(t.base))
        throw Error(ErrorCode::ModuleInfinite, "perturbation summand must be finite");
    CyclicModule sum = direct_sum(permutation_module(x), t);

    const std::size_t k = sum.num_generators();
    Rng rng(seed ^ 0xa5a5a5a55a5a5a5aULL);
    IntMatrix w = IntMatrix::identity(k);
    IntMatrix w_inv = IntMatrix::identity(k);
    for (std::size_t op = 0; op < 2 * k; ++op) {
        std::size_t i = rng.below(k), j = rng.below(k);
        if (i == j) continue;
        Int c = rng.range(-1, 1);
        w.add_row_multiple(i, j, c);
        w_inv.add_col_multiple(j, i, -c);
    }
    return change_basis(sum, w, w_inv);
}

}  // namespace herbrand
