#include "herbrand/quadratic.hpp"

#include <algorithm>
#include <map>

#include "herbrand/error.hpp"

namespace herbrand {

QuadraticFieldData field_data(const Int& d) {
    if (d <= 1)
        throw Error(ErrorCode::DTooSmall, "need a squarefree integer D > 1, got " + d.get_str());
    for (Int p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0)
            throw Error(ErrorCode::NotSquarefree,
                        d.get_str() + " is divisible by " + Int(p * p).get_str());
    QuadraticFieldData k;
    k.d = d;
    if (d % 4 == 1) {
        k.disc = d;
        k.omega = OmegaKind::Half;
    } else {
        k.disc = 4 * d;
        k.omega = OmegaKind::Whole;
    }
    return k;
}

Int norm(const QuadraticFieldData& k, const QuadraticInteger& z) {
    return z.a * z.a + z.a * z.b * k.omega_trace() + z.b * z.b * k.omega_norm();
}

Int trace(const QuadraticFieldData& k, const QuadraticInteger& z) {
    return 2 * z.a + z.b * k.omega_trace();
}

CFExpansion cf_expand_quadratic(const Int& d, const Int& p0, const Int& q0) {
    if (d <= 1 || is_perfect_square(d))
        throw Error(ErrorCode::Internal, "cf: need a nonsquare d > 1");
    if (q0 <= 0 || (d - p0 * p0) % q0 != 0)
        throw Error(ErrorCode::Internal, "cf: q0 must be positive and divide d - p0^2");
    const Int s = isqrt(d);

    Int p = p0, q = q0;
    CFExpansion cf;
    cf.a0 = floor_div(p + s, q);
    p = cf.a0 * q - p;
    q = exact_div(d - p * p, q);

    std::map<std::pair<Int, Int>, std::size_t> seen;
    for (;;) {
        if (q <= 0)
            throw Error(ErrorCode::Internal, "cf: state invariant broke (q <= 0)");
        auto key = std::make_pair(p, q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            if (it->second != 0)
                throw Error(ErrorCode::Internal, "cf: expansion is not purely periodic");
            return cf;
        }
        seen.emplace(key, cf.periodic_part.size());
        Int a = floor_div(p + s, q);
        if (a < 1)
            throw Error(ErrorCode::Internal, "cf: partial quotient below 1");
        cf.periodic_part.push_back(a);
        p = a * q - p;
        q = exact_div(d - p * p, q);
    }
}

CFExpansion cf_expand(const Int& d) { return cf_expand_quadratic(d, 0, 1); }

namespace {

// Convergent of [a0; t_1, ..., t_(len-1)], i.e. over the first `len` partial
// quotients; len = period length gives the period-end convergent.
QuadraticInteger convergent(const CFExpansion& cf, std::size_t len) {
    Int p_prev = 1, p = cf.a0;
    Int q_prev = 0, q = 1;
    for (std::size_t i = 0; i + 1 < len; ++i) {
        const Int& t = cf.periodic_part[i % cf.periodic_part.size()];
        Int p_next = t * p + p_prev;
        Int q_next = t * q + q_prev;
        p_prev = p;
        p = p_next;
        q_prev = q;
        q = q_next;
    }
    return QuadraticInteger{p, q};
}

}  // namespace

FundamentalUnitData fundamental_unit(const QuadraticFieldData& k) {
    // Whole case: the period-end convergent of sqrt(D) gives p + q sqrt(D).
    // Half case: the period-end convergent p/q of (1+sqrt(D))/2 gives the
    // unit p + q omega with omega = (-1+sqrt(D))/2.
    CFExpansion cf =
        k.omega == OmegaKind::Whole ? cf_expand(k.d) : cf_expand_quadratic(k.d, 1, 2);
    QuadraticInteger eps = convergent(cf, cf.period_length());
    Int n = norm(k, eps);
    if (n != 1 && n != -1)
        throw Error(ErrorCode::Internal,
                    "period-end convergent is not a unit (norm " + n.get_str() + ")");
    return FundamentalUnitData{eps, n == 1 ? 1 : -1};
}

namespace {

void verify_pell(const Int& d, PellVariant variant, const PellSolution& s) {
    Int lhs;
    switch (variant) {
        case PellVariant::MinusOne: lhs = s.x * s.x - d * s.y * s.y + 1; break;
        case PellVariant::PlusOne: lhs = s.x * s.x - d * s.y * s.y - 1; break;
        case PellVariant::MinusFour:
            lhs = (2 * s.x - s.y) * (2 * s.x - s.y) - d * s.y * s.y + 4;
            break;
    }
    if (lhs != 0)
        throw Error(ErrorCode::Internal, "pell solution failed exact substitution");
}

}  // namespace

std::optional<PellSolution> pell_solve(const Int& d, PellVariant variant) {
    QuadraticFieldData k = field_data(d);
    if (variant == PellVariant::MinusFour && k.omega != OmegaKind::Half)
        throw Error(ErrorCode::VariantUnavailable,
                    "the -4 form needs D = 1 mod 4, got D = " + d.get_str());

    if (variant == PellVariant::MinusFour) {
        // Solutions are exactly the norm -(-1) elements x + y omega, so one
        // exists iff the fundamental unit has norm -1, and then the unit
        // itself is the minimal solution.
        FundamentalUnitData unit = fundamental_unit(k);
        if (unit.unit_norm != -1) return std::nullopt;
        PellSolution s{unit.epsilon.a, unit.epsilon.b};
        verify_pell(d, variant, s);
        return s;
    }

    // x^2 - D y^2 = -/+1 through the continued fraction of sqrt(D): the
    // period-end convergent has norm (-1)^period; squaring fixes the sign.
    CFExpansion cf = cf_expand(d);
    QuadraticInteger c = convergent(cf, cf.period_length());
    const bool norm_is_minus = cf.period_length() % 2 == 1;
    PellSolution s;
    if (variant == PellVariant::MinusOne) {
        if (!norm_is_minus) return std::nullopt;
        s = PellSolution{c.a, c.b};
    } else if (norm_is_minus) {
        s = PellSolution{c.a * c.a + d * c.b * c.b, 2 * c.a * c.b};
    } else {
        s = PellSolution{c.a, c.b};
    }
    verify_pell(d, variant, s);
    return s;
}

Int unit_group_h1(const QuadraticFieldData& k) {
    return fundamental_unit(k).unit_norm == -1 ? Int(2) : Int(4);
}

CyclicModule unit_module(const QuadraticFieldData& k) {
    // Generators: the class of -1 (order 2), then epsilon. The conjugate of
    // epsilon is N(epsilon)/epsilon, which in additive coordinates is
    // (a,b) -> (a+b,-b) for norm -1 and (a,b) -> (a,-b) for norm +1.
    FundamentalUnitData unit = fundamental_unit(k);
    IntMatrix sigma(2, 2);
    sigma.at(0, 0) = 1;
    sigma.at(1, 1) = -1;
    if (unit.unit_norm == -1) sigma.at(0, 1) = 1;
    PresentedGroup base = PresentedGroup::from_relation_rows(2, {{Int(2), Int(0)}});
    return CyclicModule(2, base, sigma);
}

const char* to_string(SplittingType t) {
    switch (t) {
        case SplittingType::Split: return "SPLIT";
        case SplittingType::Inert: return "INERT";
        case SplittingType::Ramified: return "RAMIFIED";
    }
    return "?";
}

std::string to_string(const Place& v) { return v.infinite ? "oo" : v.p.get_str(); }

SplittingType splitting_type(const QuadraticFieldData& k, const Place& v) {
    if (v.infinite) return SplittingType::Split;
    if (v.p < 2 || !is_probable_prime(v.p))
        throw Error(ErrorCode::NotPrime, v.p.get_str() + " is not prime");
    if (k.disc % v.p == 0) return SplittingType::Ramified;
    if (v.p == 2) return k.disc % 8 == 1 ? SplittingType::Split : SplittingType::Inert;
    int sym = kronecker_symbol(k.disc, v.p);
    if (sym == 0)
        throw Error(ErrorCode::Internal, "kronecker symbol vanished off the discriminant");
    return sym == 1 ? SplittingType::Split : SplittingType::Inert;
}

SUnitReport sunit_herbrand(const QuadraticFieldData& k, std::vector<Place> s_f) {
    std::sort(s_f.begin(), s_f.end());
    s_f.erase(std::unique(s_f.begin(), s_f.end()), s_f.end());
    if (s_f.empty() || !s_f.front().infinite)
        throw Error(ErrorCode::MissingInfinitePlace,
                    "the place set must contain the infinite place");

    SUnitReport rep;
    rep.nv_product = 1;
    std::size_t s_k = 0;
    for (const auto& v : s_f) {
        SplittingType t = splitting_type(k, v);
        rep.nv_product *= (t == SplittingType::Split ? 1 : 2);
        s_k += (t == SplittingType::Split ? 2 : 1);
    }
    rep.s_f = std::move(s_f);
    rep.s_f_size = rep.s_f.size();
    rep.s_k_size = s_k;
    rep.herbrand = Rat(rep.nv_product, 2);
    rep.herbrand.canonicalize();

    Rat counted = pow2_rat(2 * static_cast<long>(rep.s_f_size) -
                           static_cast<long>(rep.s_k_size) - 1);
    if (counted != rep.herbrand)
        throw Error(ErrorCode::Internal, "place-count formula disagrees with the local product");
    return rep;
}

Int h1_place_formula(const QuadraticFieldData& k) {
    // S = S_infinity: one place below, two above, so the exponent
    // #S_K - 2 #S_F + 1 is 1; the norm index (U_F : N U_K) is 1 or 2
    // according to whether some unit has norm -1.
    SUnitReport inf_only = sunit_herbrand(k, {Place::inf()});
    long exponent = static_cast<long>(inf_only.s_k_size) -
                    2 * static_cast<long>(inf_only.s_f_size) + 1;
    Int norm_index = fundamental_unit(k).unit_norm == -1 ? 1 : 2;
    Rat result = pow2_rat(exponent) * Rat(norm_index);
    result.canonicalize();
    if (result.get_den() != 1)
        throw Error(ErrorCode::Internal, "place formula produced a non-integer");
    return result.get_num();
}

Int trace_index(const QuadraticFieldData& k) {
    Int tr_one = trace(k, QuadraticInteger{1, 0});
    Int tr_omega = trace(k, QuadraticInteger{0, 1});
    return gcd(tr_one, tr_omega);
}

CyclicModule ok_module(const QuadraticFieldData& k) {
    // Basis {1, omega}; conjugation fixes 1 and sends omega to
    // -omega (whole case) or -1-omega (half case).
    IntMatrix sigma(2, 2);
    sigma.at(0, 0) = 1;
    sigma.at(1, 1) = -1;
    if (k.omega == OmegaKind::Half) sigma.at(0, 1) = -1;
    return CyclicModule(2, PresentedGroup(2), sigma);
}

}  // namespace herbrand
