#include "herbrand/random_module.hpp"

#include <map>

#include "herbrand/error.hpp"
#include "herbrand/rng.hpp"

namespace herbrand {

IntVec cyclotomic_polynomial(unsigned long d) {
    static std::map<unsigned long, IntVec> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    // x^d - 1 divided by the cyclotomic polynomials of the proper divisors.
    IntVec poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;
    for (unsigned long e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        IntVec divisor = cyclotomic_polynomial(e);
        IntVec quotient(poly.size() - divisor.size() + 1, 0);
        for (std::size_t i = quotient.size(); i-- > 0;) {
            Int lead = poly[i + divisor.size() - 1];
            quotient[i] = exact_div(lead, divisor.back());
            for (std::size_t j = 0; j < divisor.size(); ++j)
                poly[i + j] -= quotient[i] * divisor[j];
        }
        poly = quotient;
    }
    cache[d] = poly;
    return poly;
}

namespace {

struct Block {
    std::size_t k;
    IntMatrix sigma;
    std::vector<IntVec> relations;
};

Block permutation_block(Rng& rng, unsigned long n, std::size_t rank_bound) {
    // A disjoint union of cycles whose lengths divide n.
    std::vector<unsigned long> divisors;
    for (unsigned long d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::vector<unsigned long> cycles;
    std::size_t total = 0;
    do {
        unsigned long len = divisors[rng.below(divisors.size())];
        if (total + len > std::max<std::size_t>(rank_bound, 1)) break;
        cycles.push_back(len);
        total += len;
    } while (rng.chance(1, 2));
    if (cycles.empty()) cycles.push_back(1);

    std::size_t k = 0;
    for (auto c : cycles) k += c;
    IntMatrix sigma(k, k);
    std::size_t base = 0;
    for (auto c : cycles) {
        for (std::size_t j = 0; j < c; ++j) sigma.at(base + (j + 1) % c, base + j) = 1;
        base += c;
    }
    return Block{k, std::move(sigma), {}};
}

Block sign_block() {
    IntMatrix sigma(1, 1);
    sigma.at(0, 0) = -1;
    return Block{1, std::move(sigma), {}};
}

Block companion_block(Rng& rng, unsigned long n) {
    std::vector<unsigned long> divisors;
    for (unsigned long d = 2; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    unsigned long d = divisors[rng.below(divisors.size())];
    IntVec phi = cyclotomic_polynomial(d);
    const std::size_t k = phi.size() - 1;
    IntMatrix sigma(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) sigma.at(i + 1, i) = 1;
    for (std::size_t i = 0; i < k; ++i) sigma.at(i, k - 1) = -phi[i];
    return Block{k, std::move(sigma), {}};
}

// Quotients the block by a sigma-stable finite-index sublattice:
// m Z^k plus the sigma-orbit of a random vector.
void impose_finite_quotient(Rng& rng, unsigned long n, Block& b, unsigned long m) {
    for (std::size_t i = 0; i < b.k; ++i) {
        IntVec row(b.k, 0);
        row[i] = static_cast<long>(m);
        b.relations.push_back(std::move(row));
    }
    if (rng.chance(2, 3)) {
        IntVec v(b.k);
        for (std::size_t i = 0; i < b.k; ++i) v[i] = rng.range(0, static_cast<long>(m) - 1);
        for (unsigned long i = 0; i < n; ++i) {
            b.relations.push_back(v);
            v = b.sigma.apply(v);
        }
    }
}

Block random_block(Rng& rng, unsigned long n, std::size_t rank_bound, unsigned long torsion_bound,
                   bool force_finite, const Int& max_order) {
    Block b;
    unsigned long kind = static_cast<unsigned long>(rng.below(4));
    if (kind == 1 && n % 2 == 0)
        b = sign_block();
    else if (kind == 2 && n > 1)
        b = companion_block(rng, n);
    else
        b = permutation_block(rng, n, rank_bound);

    bool finite = force_finite || rng.chance(2, 5);
    if (finite) {
        // Pick m with m^k within the order budget.
        unsigned long cap = torsion_bound;
        if (force_finite) {
            Int root;
            mpz_root(root.get_mpz_t(), max_order.get_mpz_t(), static_cast<unsigned long>(b.k));
            if (root < 2) {
                // Too wide for the budget: shrink to a single generator.
                b.k = 1;
                b.sigma = IntMatrix(1, 1);
                b.sigma.at(0, 0) = 1;
                b.relations.clear();
                root = max_order;
            }
            cap = std::min(cap, root.get_ui());
        }
        if (cap < 2) cap = 2;
        unsigned long m = 2 + static_cast<unsigned long>(rng.below(cap - 1));
        impose_finite_quotient(rng, n, b, m);
    }
    return b;
}

CyclicModule assemble(Rng& rng, unsigned long n, const std::vector<Block>& blocks) {
    std::size_t k = 0;
    for (const auto& b : blocks) k += b.k;
    IntMatrix sigma(k, k);
    std::vector<IntVec> rels;
    std::size_t base = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.k; ++i)
            for (std::size_t j = 0; j < b.k; ++j) sigma.at(base + i, base + j) = b.sigma.at(i, j);
        for (const auto& r : b.relations) {
            IntVec row(k, 0);
            for (std::size_t j = 0; j < b.k; ++j) row[base + j] = r[j];
            rels.push_back(std::move(row));
        }
        base += b.k;
    }

    CyclicModule mod(n, PresentedGroup::from_relation_rows(k, rels), sigma);

    if (k > 0 && rng.chance(3, 4)) {
        // Scramble with a unimodular change of basis built from shears and
        // swaps, tracking the inverse by applying the inverse ops in reverse.
        IntMatrix w = IntMatrix::identity(k);
        IntMatrix w_inv = IntMatrix::identity(k);
        const std::size_t ops = 1 + rng.below(2 * k);
        for (std::size_t t = 0; t < ops; ++t) {
            std::size_t i = rng.below(k), j = rng.below(k);
            if (i == j) {
                w.negate_row(i);
                w_inv.negate_col(i);
            } else if (rng.chance(1, 4)) {
                w.swap_rows(i, j);
                w_inv.swap_cols(i, j);
            } else {
                Int c = rng.range(-2, 2);
                w.add_row_multiple(i, j, c);
                w_inv.add_col_multiple(j, i, -c);
            }
        }
        mod = change_basis(mod, w, w_inv);
    }

    ValidationReport rep = check_module(mod);
    if (!rep.valid)
        throw Error(ErrorCode::Internal, "generator produced an invalid module: " + rep.message);
    return mod;
}

}  // namespace

CyclicModule random_cyclic_module(std::uint64_t seed, unsigned long n, std::size_t rank_bound,
                                  unsigned long torsion_bound) {
    if (n == 0)
        throw Error(ErrorCode::Internal, "group order must be >= 1");
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const std::size_t num_blocks = 1 + rng.below(3);
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < num_blocks; ++i)
        blocks.push_back(random_block(rng, n, rank_bound, torsion_bound, false, 0));
    return assemble(rng, n, blocks);
}

CyclicModule random_finite_cyclic_module(std::uint64_t seed, unsigned long n,
                                         const Int& max_order) {
    if (max_order < 1)
        throw Error(ErrorCode::Internal, "max_order must be >= 1");
    for (std::uint64_t attempt = 0;; ++attempt) {
        Rng rng((seed + attempt * 0x100000001b3ULL) ^ 0x9e3779b97f4a7c15ULL);
        const std::size_t num_blocks = 1 + rng.below(2);
        Int budget_each;
        mpz_root(budget_each.get_mpz_t(), max_order.get_mpz_t(),
                 static_cast<unsigned long>(num_blocks));
        std::vector<Block> blocks;
        for (std::size_t i = 0; i < num_blocks; ++i)
            blocks.push_back(random_block(rng, n, 3, 9, true, budget_each));
        CyclicModule mod = assemble(rng, n, blocks);
        auto order = group_order(mod.base);
        if (order && *order <= max_order) return mod;
        if (attempt > 200)
            throw Error(ErrorCode::Internal, "could not fit a finite module in the order budget");
    }
}

}  // namespace herbrand
