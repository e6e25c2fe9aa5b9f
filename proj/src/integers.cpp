#include "herbrand/integers.hpp"

#include "herbrand/error.hpp"

namespace herbrand {

Int exact_div(const Int& a, const Int& b) {
    if (b == 0 || a % b != 0)
        throw Error(ErrorCode::Internal,
                    "exact division failed: " + a.get_str() + " / " + b.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Rat pow2_rat(long e) {
    Rat r;
    if (e >= 0)
        r = Rat(pow_int(2, static_cast<unsigned long>(e)));
    else
        r = Rat(1, pow_int(2, static_cast<unsigned long>(-e)));
    r.canonicalize();
    return r;
}

std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace herbrand
