#include "herbrand/verification.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "herbrand/random_module.hpp"
#include "herbrand/rng.hpp"

namespace herbrand {

const char* to_string(ClaimId id) {
    switch (id) {
        case ClaimId::Prop2: return "PROP2";
        case ClaimId::Prop21: return "PROP21";
        case ClaimId::Prop33: return "PROP33";
        case ClaimId::Thm32: return "THM32";
        case ClaimId::Remark: return "REMARK";
        case ClaimId::Oracle: return "ORACLE";
    }
    return "?";
}

std::optional<ClaimId> claim_from_string(const std::string& name) {
    if (name == "prop2") return ClaimId::Prop2;
    if (name == "prop21") return ClaimId::Prop21;
    if (name == "prop33") return ClaimId::Prop33;
    if (name == "thm32") return ClaimId::Thm32;
    if (name == "remark") return ClaimId::Remark;
    if (name == "oracle") return ClaimId::Oracle;
    return std::nullopt;
}

std::vector<Int> squarefree_up_to(const Int& bound) {
    std::vector<Int> out;
    for (Int d = 2; d <= bound; ++d) {
        bool squarefree = true;
        for (Int p = 2; p * p <= d && squarefree; ++p)
            if (d % (p * p) == 0) squarefree = false;
        if (squarefree) out.push_back(d);
    }
    return out;
}

namespace {

// Runs trial(i) for i in [0, count) across a thread pool; a trial returns a
// failure string or nothing. Failures are sorted, so the report does not
// depend on scheduling.
template <typename Fn>
std::vector<std::string> parallel_trials(std::uint64_t count, std::size_t threads, Fn&& trial) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<std::size_t>(threads, count > 0 ? count : 1);
    std::vector<std::string> failures;
    std::mutex mtx;
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        std::vector<std::string> local;
        for (;;) {
            std::uint64_t i = next.fetch_add(1);
            if (i >= count) break;
            try {
                if (auto f = trial(i)) local.push_back(*f);
            } catch (const std::exception& e) {
                local.push_back(std::string("trial ") + std::to_string(i) +
                                " raised: " + e.what());
            }
        }
        std::lock_guard lock(mtx);
        failures.insert(failures.end(), local.begin(), local.end());
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    std::sort(failures.begin(), failures.end());
    return failures;
}

template <typename Body>
VerificationReport timed_report(ClaimId claim, std::uint64_t trials, Body&& body) {
    VerificationReport rep;
    rep.claim = claim;
    rep.trials = trials;
    auto start = std::chrono::steady_clock::now();
    rep.failures = body();
    rep.elapsed = std::chrono::steady_clock::now() - start;
    return rep;
}

std::string module_failure(const CyclicModule& m, const std::string& what) {
    return what + "; module file: " + module_to_json(m);
}

}  // namespace

VerificationReport verify_oracle(const VerifyOptions& opt) {
    const std::uint64_t trials = opt.trials ? opt.trials : 200;
    return timed_report(ClaimId::Oracle, trials, [&] {
        return parallel_trials(trials, opt.threads, [&](std::uint64_t i) -> std::optional<std::string> {
            unsigned long n = 1 + static_cast<unsigned long>(i % 6);
            CyclicModule m = random_finite_cyclic_module(opt.seed + i, n, opt.max_order);
            HerbrandReport direct = herbrand_quotient(m);
            BruteForceOrders brute = brute_force_cohomology(m, opt.oracle_bound);
            if (direct.tate.h0_order != brute.h0_order || direct.tate.h1_order != brute.h1_order)
                return module_failure(
                    m, "structural orders (" + direct.tate.h0_order.get_str() + "," +
                           direct.tate.h1_order.get_str() + ") != brute force (" +
                           brute.h0_order.get_str() + "," + brute.h1_order.get_str() + ")");
            if (direct.quotient != 1)
                return module_failure(m, "finite module with Herbrand quotient " +
                                             direct.quotient.get_str());
            for (const auto& d : direct.tate.h0.torsion_divisors)
                if (Int(m.n) % d != 0)
                    return module_failure(m, "H^0 divisor " + d.get_str() + " does not divide n");
            for (const auto& d : direct.tate.h1.torsion_divisors)
                if (Int(m.n) % d != 0)
                    return module_failure(m, "H^1 divisor " + d.get_str() + " does not divide n");
            return std::nullopt;
        });
    });
}

VerificationReport verify_prop2(const VerifyOptions& opt) {
    const std::uint64_t trials = opt.trials ? opt.trials : 200;
    return timed_report(ClaimId::Prop2, trials, [&] {
        return parallel_trials(trials, opt.threads, [&](std::uint64_t i) -> std::optional<std::string> {
            CyclicModule m = random_cyclic_module(opt.seed + i, 2);
            Order2Profile p = order2_profile(m);
            HerbrandReport direct = herbrand_quotient(m);

            if (p.predicted_h1 != direct.tate.h1_order)
                return module_failure(m, "predicted #H^1 = " + p.predicted_h1.get_str() +
                                             ", direct = " + direct.tate.h1_order.get_str());
            if (p.predicted_h != direct.quotient)
                return module_failure(m, "predicted h = " + p.predicted_h.get_str() +
                                             ", direct = " + direct.quotient.get_str());

            // The two remaining expressions: 2^r_minus #A^+[2] / (NA : 2A^+)
            // and 2^(r - 2 r_plus) (A^+ : NA).
            const Lattice rel = m.relations();
            Lattice fixed = fixed_point_lattice(m);
            Lattice norm_im = norm_image_lattice(m);
            Int index_na_2fixed = finite_lattice_index(norm_im, fixed.scaled(2).sum(rel));
            Rat via_na(pow_int(2, p.r_minus) * p.two_torsion_plus, index_na_2fixed);
            via_na.canonicalize();
            if (via_na != Rat(p.predicted_h1))
                return module_failure(m, "(NA : 2A^+) expression gives " + via_na.get_str());
            Rat via_rank = pow2_rat(static_cast<long>(p.r) - 2 * static_cast<long>(p.r_plus)) *
                           Rat(p.index_norm);
            via_rank.canonicalize();
            if (via_rank != Rat(p.predicted_h1))
                return module_failure(m, "2^(r-2r+) expression gives " + via_rank.get_str());

            // Degenerate case: r_plus = 0 with trivial A^+[2] forces
            // (A : A^+ + A^-) = 1 and #H^1 = 2^r.
            if (p.r_plus == 0 && p.two_torsion_plus == 1) {
                if (p.index_sum != 1)
                    return module_failure(m, "degenerate case but (A : A^+ + A^-) = " +
                                                 p.index_sum.get_str());
                if (p.predicted_h1 != pow_int(2, p.r))
                    return module_failure(m, "degenerate case but #H^1 != 2^r");
            }
            // Abstract order-2 shadow: r_minus = 0 and #A^+[2] = 2 bound
            // #H^1 and the sum index by 2.
            if (p.r_minus == 0 && p.two_torsion_plus == 2) {
                if (p.predicted_h1 != 1 && p.predicted_h1 != 2)
                    return module_failure(m, "r_-=0, #A^+[2]=2 but #H^1 = " +
                                                 p.predicted_h1.get_str());
                if (p.index_sum != 1 && p.index_sum != 2)
                    return module_failure(m, "r_-=0, #A^+[2]=2 but (A : A^+ + A^-) = " +
                                                 p.index_sum.get_str());
            }
            return std::nullopt;
        });
    });
}

namespace {

std::string gset_failure(const GSet& x, const std::string& what) {
    return what + "; gset: " + gset_to_text(x);
}

std::optional<std::string> check_prop21_case(const GSet& x, bool perturb, std::uint64_t seed) {
    Int orbit_product = orbit_herbrand_formula(x);
    CyclicModule mod = permutation_module(x);
    HerbrandReport direct = herbrand_quotient(mod);
    if (direct.quotient != Rat(orbit_product))
        return gset_failure(x, "orbit product " + orbit_product.get_str() +
                                   " != direct quotient " + direct.quotient.get_str());
    Int h1_formula = h1_orbit_formula(x);
    if (h1_formula != direct.tate.h1_order)
        return gset_failure(x, "orbit #H^1 " + h1_formula.get_str() + " != direct " +
                                   direct.tate.h1_order.get_str());
    if (perturb) {
        // Tack on a finite module; h must not move.
        CyclicModule t = random_finite_cyclic_module(seed, x.n, Int(256));
        CyclicModule perturbed = finite_index_perturbation(x, t, seed);
        HerbrandReport after = herbrand_quotient(perturbed);
        if (after.quotient != Rat(orbit_product))
            return gset_failure(x, "perturbation moved h from " + orbit_product.get_str() +
                                       " to " + after.quotient.get_str());
    }
    return std::nullopt;
}

GSet random_gset(Rng& rng, unsigned long n, std::size_t min_points, std::size_t max_points) {
    std::vector<unsigned long> divisors;
    for (unsigned long d = 1; d <= n; ++d)
        if (n % d == 0) divisors.push_back(d);
    std::vector<std::size_t> pi;
    const std::size_t target =
        min_points + static_cast<std::size_t>(rng.below(max_points - min_points + 1));
    while (pi.size() < target) {
        unsigned long len = divisors[rng.below(divisors.size())];
        std::size_t base = pi.size();
        for (unsigned long j = 0; j < len; ++j)
            pi.push_back(base + (static_cast<std::size_t>(j) + 1) % len);
    }
    return GSet(n, std::move(pi));
}

}  // namespace

VerificationReport verify_prop21(const VerifyOptions& opt) {
    // Exhaustive catalogue: every permutation of r <= 8 points paired with
    // every n <= 12 its order divides.
    std::vector<GSet> cases;
    for (std::size_t r = 0; r <= 8; ++r) {
        std::vector<std::size_t> perm(r);
        for (std::size_t i = 0; i < r; ++i) perm[i] = i;
        do {
            // order of the permutation = lcm of cycle lengths
            unsigned long order = 1;
            std::vector<bool> visited(r, false);
            for (std::size_t i = 0; i < r; ++i) {
                if (visited[i]) continue;
                unsigned long len = 0;
                std::size_t j = i;
                do {
                    visited[j] = true;
                    j = perm[j];
                    ++len;
                } while (j != i);
                order = std::lcm(order, len);
            }
            for (unsigned long n = 1; n <= 12; ++n)
                if (n % order == 0) cases.emplace_back(n, std::vector<std::size_t>(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    const std::size_t exhaustive_count = cases.size();

    // Plus seeded random larger G-sets.
    const std::uint64_t random_count = opt.trials ? opt.trials : 100;
    for (std::uint64_t i = 0; i < random_count; ++i) {
        Rng rng(opt.seed + 7919 * i);
        unsigned long n = 1 + static_cast<unsigned long>(rng.below(12));
        cases.push_back(random_gset(rng, n, 9, 24));
    }

    return timed_report(ClaimId::Prop21, cases.size(), [&] {
        return parallel_trials(cases.size(), opt.threads,
                               [&](std::uint64_t i) -> std::optional<std::string> {
                                   bool perturb = i >= exhaustive_count || i % 97 == 0;
                                   return check_prop21_case(cases[i], perturb, opt.seed + i);
                               });
    });
}

VerificationReport verify_remark(const VerifyOptions& opt) {
    const std::uint64_t trials = opt.trials ? opt.trials : 100;
    return timed_report(ClaimId::Remark, trials, [&] {
        return parallel_trials(trials, opt.threads, [&](std::uint64_t i) -> std::optional<std::string> {
            unsigned long n = 2 + static_cast<unsigned long>(i % 5);
            CyclicModule m = random_cyclic_module(opt.seed + i, n);
            H1IndexFormula f = h1_index_formula(m);  // chain checked inside
            InvariantFactors direct = h1(m);
            Int direct_order = *direct.order();
            if (f.h1_order != direct_order)
                return module_failure(m, "index formula gives " + f.h1_order.get_str() +
                                             ", direct #H^1 = " + direct_order.get_str());
            if (f.denominator != f.chain_fixed_plus_kernel || f.denominator != f.chain_image)
                return module_failure(m, "index chain broken");
            return std::nullopt;
        });
    });
}

VerificationReport verify_prop33(const VerifyOptions& opt) {
    std::vector<Int> ds = squarefree_up_to(opt.max_d);
    return timed_report(ClaimId::Prop33, ds.size(), [&] {
        return parallel_trials(ds.size(), opt.threads, [&](std::uint64_t i) -> std::optional<std::string> {
            const Int& d = ds[i];
            auto fail = [&](const std::string& what) {
                return "D = " + d.get_str() + ": " + what;
            };
            QuadraticFieldData k = field_data(d);
            FundamentalUnitData unit = fundamental_unit(k);
            Int h1_units = unit_group_h1(k);
            bool pell_solvable = k.omega == OmegaKind::Half
                                     ? pell_solve(d, PellVariant::MinusFour).has_value()
                                     : pell_solve(d, PellVariant::MinusOne).has_value();

            if (h1_units != 2 && h1_units != 4) return fail("#H^1 = " + h1_units.get_str());
            const bool norm_minus = unit.unit_norm == -1;
            if (norm_minus != (h1_units == 2))
                return fail("norm/#H^1 equivalence broke");
            if (norm_minus != pell_solvable)
                return fail("norm/Pell equivalence broke");

            // Module-level cross-check.
            CyclicModule um = unit_module(k);
            HerbrandReport rep = herbrand_quotient(um);
            if (rep.tate.h1_order != h1_units)
                return fail("unit module #H^1 = " + rep.tate.h1_order.get_str() +
                            " != " + h1_units.get_str());
            if (rep.quotient != Rat(1, 2))
                return fail("unit module h = " + rep.quotient.get_str());
            if (h1_place_formula(k) != h1_units)
                return fail("place formula disagrees");
            return std::nullopt;
        });
    });
}

VerificationReport verify_thm32(const VerifyOptions& opt) {
    const std::uint64_t fields = opt.trials ? opt.trials : 50;
    const std::uint64_t sets_per_field = 20;
    std::vector<Int> ds = squarefree_up_to(1000);
    std::uint64_t total = fields * sets_per_field;
    return timed_report(ClaimId::Thm32, total, [&] {
        return parallel_trials(total, opt.threads, [&](std::uint64_t i) -> std::optional<std::string> {
            Rng rng(opt.seed + i);
            const Int& d = ds[(i / sets_per_field) % ds.size()];
            QuadraticFieldData k = field_data(d);

            static const long kPrimePool[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                              31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
            std::vector<Place> places{Place::inf()};
            const std::size_t extra = rng.below(6);
            for (std::size_t t = 0; t < extra; ++t)
                places.push_back(Place::prime(kPrimePool[rng.below(20)]));

            SUnitReport rep = sunit_herbrand(k, places);  // dual formula checked inside
            auto fail = [&](const std::string& what) {
                std::string s = "D = " + d.get_str() + ", S = {";
                for (std::size_t t = 0; t < rep.s_f.size(); ++t)
                    s += (t ? "," : "") + to_string(rep.s_f[t]);
                return s + "}: " + what;
            };

            // Recompute both sides here as well, plus the place-count split.
            Int product = 1;
            std::size_t split = 0, inert = 0, ramified = 0;
            for (const auto& v : rep.s_f) {
                switch (splitting_type(k, v)) {
                    case SplittingType::Split: ++split; product *= 1; break;
                    case SplittingType::Inert: ++inert; product *= 2; break;
                    case SplittingType::Ramified: ++ramified; product *= 2; break;
                }
            }
            Rat local(product, 2);
            local.canonicalize();
            Rat global = pow2_rat(2 * static_cast<long>(rep.s_f_size) -
                                  static_cast<long>(rep.s_k_size) - 1);
            if (local != global)
                return fail("local " + local.get_str() + " != global " + global.get_str());
            if (local != rep.herbrand)
                return fail("report quotient mismatch");
            if (rep.s_k_size != ramified + inert + 2 * split)
                return fail("#S_K count mismatch");
            if (rep.s_f_size != ramified + inert + split)
                return fail("#S_F count mismatch");
            return std::nullopt;
        });
    });
}

VerificationReport run_claim(ClaimId id, const VerifyOptions& opt) {
    switch (id) {
        case ClaimId::Prop2: return verify_prop2(opt);
        case ClaimId::Prop21: return verify_prop21(opt);
        case ClaimId::Prop33: return verify_prop33(opt);
        case ClaimId::Thm32: return verify_thm32(opt);
        case ClaimId::Remark: return verify_remark(opt);
        case ClaimId::Oracle: return verify_oracle(opt);
    }
    throw Error(ErrorCode::Internal, "unknown claim");
}

}  // namespace herbrand
