#pragma once

#include "herbrand/cohomology.hpp"

namespace herbrand {

/// Which integral basis element the field uses: sqrt(D) when D = 2,3 mod 4,
/// (-1+sqrt(D))/2 when D = 1 mod 4.
enum class OmegaKind { Whole, Half };

struct QuadraticFieldData {
    Int d;
    Int disc;
    OmegaKind omega;

    /// Trace and norm of the basis element omega.
    Int omega_trace() const { return omega == OmegaKind::Whole ? Int(0) : Int(-1); }
    Int omega_norm() const {
        return omega == OmegaKind::Whole ? Int(-d) : Int((1 - d) / 4);
    }
};

/// Validates D > 1 and squarefree (trial factorization) and derives the
/// discriminant and basis element.
QuadraticFieldData field_data(const Int& d);

/// a + b*omega with exact coordinates.
struct QuadraticInteger {
    Int a, b;
};

Int norm(const QuadraticFieldData& k, const QuadraticInteger& z);
Int trace(const QuadraticFieldData& k, const QuadraticInteger& z);

/// Continued fraction of a quadratic irrational (p0 + sqrt(d))/q0; purely
/// periodic after the integer part for the inputs used here.
struct CFExpansion {
    Int a0;
    IntVec periodic_part;
    std::size_t period_length() const { return periodic_part.size(); }
};

/// Expansion of sqrt(d).
CFExpansion cf_expand(const Int& d);

/// Expansion of (p0 + sqrt(d))/q0; requires q0 > 0 dividing d - p0^2.
CFExpansion cf_expand_quadratic(const Int& d, const Int& p0, const Int& q0);

struct FundamentalUnitData {
    QuadraticInteger epsilon;  // coordinates over {1, omega}
    int unit_norm;             // +1 or -1
};

/// Smallest unit > 1, read off the first period of the continued fraction of
/// sqrt(D) (whole case) or (1+sqrt(D))/2 (half case).
FundamentalUnitData fundamental_unit(const QuadraticFieldData& k);

enum class PellVariant { MinusOne, PlusOne, MinusFour };

struct PellSolution {
    Int x, y;
};

/// Minimal solution with x, y >= 1, or nullopt when none exists. MinusFour
/// uses the form (2x - y)^2 - D y^2 = -4 and requires D = 1 mod 4. Returned
/// pairs are re-verified by exact substitution.
std::optional<PellSolution> pell_solve(const Int& d, PellVariant variant);

/// #H^1(G, U_K): 2 when the fundamental unit has norm -1, else 4.
Int unit_group_h1(const QuadraticFieldData& k);

/// U_K = <-1> x <epsilon> as a module over the group of order 2: presentation
/// Z^2/<(2,0)> with sigma determined by sigma(epsilon) = N(epsilon)/epsilon.
CyclicModule unit_module(const QuadraticFieldData& k);

enum class SplittingType { Split, Inert, Ramified };

const char* to_string(SplittingType t);

/// Place of Q: the infinite place or a finite prime.
struct Place {
    bool infinite = false;
    Int p;

    static Place inf() { return Place{true, 0}; }
    static Place prime(const Int& p) { return Place{false, p}; }

    friend bool operator==(const Place& a, const Place& b) = default;
    friend auto operator<=>(const Place& a, const Place& b) {
        // infinite place sorts first
        if (a.infinite != b.infinite) return a.infinite ? std::strong_ordering::less
                                                        : std::strong_ordering::greater;
        return a.p < b.p   ? std::strong_ordering::less
               : a.p > b.p ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }
};

std::string to_string(const Place& v);

/// Behavior of a place in the field: the infinite place always splits (the
/// field is real), p | disc ramifies, otherwise the Kronecker symbol decides.
SplittingType splitting_type(const QuadraticFieldData& k, const Place& v);

struct SUnitReport {
    std::vector<Place> s_f;  // sorted, deduplicated, infinite place first
    std::size_t s_f_size = 0;
    std::size_t s_k_size = 0;
    Rat herbrand;     // (1/2) * product of the local degrees n_v
    Int nv_product;
};

/// Herbrand quotient of the S-unit module from splitting data alone. The
/// product formula and the exponent formula 2^(2#S_F - #S_K - 1) are both
/// evaluated and must agree.
SUnitReport sunit_herbrand(const QuadraticFieldData& k, std::vector<Place> s_f);

/// #H^1(G, U_K) via the place-counting formula 2^(#S_K - 2#S_F + 1) * (U_F : N U_K)
/// at S = S_infinity. Agrees with unit_group_h1 and with h1(unit_module).
Int h1_place_formula(const QuadraticFieldData& k);

/// Index (Z : Tr O_K), computed as gcd of the traces of the basis elements.
Int trace_index(const QuadraticFieldData& k);

/// O_K as a rank-2 module over the group of order 2.
CyclicModule ok_module(const QuadraticFieldData& k);

}  // namespace herbrand
