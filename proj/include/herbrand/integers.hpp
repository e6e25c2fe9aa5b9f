#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace herbrand {

// Every integer in the library is arbitrary precision. There is deliberately
// no fixed-width fast path: continued-fraction and unit computations overflow
// 64 bits long before the inputs look large.
using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// g = gcd(a,b) >= 0 together with p, q such that p*a + q*b = g.
struct ExtendedGcd {
    Int g, p, q;
};

inline ExtendedGcd extended_gcd(const Int& a, const Int& b) {
    ExtendedGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.p.get_mpz_t(), r.q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Floor division (rounds toward negative infinity).
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Quotient a/b under the promise that b divides a exactly.
Int exact_div(const Int& a, const Int& b);

/// Floor of the square root of a nonnegative integer.
inline Int isqrt(const Int& a) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& a) {
    return a >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

inline Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// 2^e for a possibly negative exponent, as an exact rational.
Rat pow2_rat(long e);

inline bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

/// Kronecker symbol (a/n), the usual extension of the Legendre symbol.
inline int kronecker_symbol(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

std::string to_string(const Int& v);

}  // namespace herbrand
