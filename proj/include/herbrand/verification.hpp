#pragma once

#include <chrono>

#include "herbrand/module_io.hpp"
#include "herbrand/quadratic.hpp"

namespace herbrand {

/// Identifiers of the verifiable claims the tool can sweep.
enum class ClaimId { Prop2, Prop21, Prop33, Thm32, Remark, Oracle };

const char* to_string(ClaimId id);
std::optional<ClaimId> claim_from_string(const std::string& name);

struct VerifyOptions {
    std::uint64_t trials = 0;  // 0 picks the claim's default
    std::uint64_t seed = 1;
    Int max_d = 2000;                          // prop33 sweep bound
    Int oracle_bound = kDefaultEnumerationBound;  // enumeration cap
    Int max_order = Int(1) << 12;              // order cap for random finite modules
    std::size_t threads = 0;                   // 0 = hardware concurrency
};

struct VerificationReport {
    ClaimId claim = ClaimId::Oracle;
    std::uint64_t trials = 0;
    /// Counterexamples in re-runnable input form, sorted by input key.
    std::vector<std::string> failures;
    std::chrono::duration<double> elapsed{};

    bool ok() const { return failures.empty(); }
};

/// Structural (H^0, H^1) orders vs brute-force enumeration on seeded random
/// finite modules with n in {1,...,6}.
VerificationReport verify_oracle(const VerifyOptions& opt = {});

/// The order-2 closed forms: all four expressions for #H^1 agree with the
/// direct computation and h = 2^(2 r_plus - r), on seeded random n=2 modules.
VerificationReport verify_prop2(const VerifyOptions& opt = {});

/// Orbit-stabilizer formulas on permutation modules: exhaustive G-sets with
/// r <= 8, n <= 12 plus seeded random larger ones, with finite-index
/// perturbations sprinkled in.
VerificationReport verify_prop21(const VerifyOptions& opt = {});

/// The general-n index formula for #H^1 and its three-way index chain, on
/// seeded random modules with n in {2,...,6}.
VerificationReport verify_remark(const VerifyOptions& opt = {});

/// Real quadratic sweep: norm of the fundamental unit, #H^1(G, U_K), and
/// negative-Pell solvability are jointly true or jointly false for every
/// squarefree 2 <= D <= max_d; unit_module cross-checks included.
VerificationReport verify_prop33(const VerifyOptions& opt = {});

/// S-unit Herbrand quotient: local product (1/2) prod n_v vs the global
/// count 2^(2#S_F - #S_K - 1) over seeded random place sets.
VerificationReport verify_thm32(const VerifyOptions& opt = {});

VerificationReport run_claim(ClaimId id, const VerifyOptions& opt = {});

/// Squarefree integers in [2, bound], ascending.
std::vector<Int> squarefree_up_to(const Int& bound);

}  // namespace herbrand
