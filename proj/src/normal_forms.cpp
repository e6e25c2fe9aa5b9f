#include "herbrand/normal_forms.hpp"

#include "herbrand/error.hpp"

namespace herbrand {

namespace {

// Row operation combining rows r and i so that entry (i, c) becomes zero and
// entry (r, c) becomes gcd of the two. The 2x2 op has determinant 1. Applied
// to the workspace and, when present, to the transformation matrix.
void gcd_eliminate_row(IntMatrix& a, IntMatrix* u, std::size_t r, std::size_t i, std::size_t c) {
    const Int& av = a.at(r, c);
    const Int& bv = a.at(i, c);
    if (bv == 0) return;
    if (av == 0) {
        a.swap_rows(r, i);
        if (u) u->swap_rows(r, i);
        return;
    }
    if (bv % av == 0) {
        Int q = -(bv / av);
        a.add_row_multiple(i, r, q);
        if (u) u->add_row_multiple(i, r, q);
        return;
    }
    auto [g, p, q] = extended_gcd(av, bv);
    Int ag = av / g, bg = bv / g;
    for (std::size_t k = 0; k < a.cols(); ++k) {
        Int ark = a.at(r, k), aik = a.at(i, k);
        a.at(r, k) = p * ark + q * aik;
        a.at(i, k) = ag * aik - bg * ark;
    }
    if (u)
        for (std::size_t k = 0; k < u->cols(); ++k) {
            Int urk = u->at(r, k), uik = u->at(i, k);
            u->at(r, k) = p * urk + q * uik;
            u->at(i, k) = ag * uik - bg * urk;
        }
}

// Column version: zeroes entry (r, j) and leaves the gcd at (r, c).
void gcd_eliminate_col(IntMatrix& a, IntMatrix* v, std::size_t c, std::size_t j, std::size_t r) {
    const Int& av = a.at(r, c);
    const Int& bv = a.at(r, j);
    if (bv == 0) return;
    if (av == 0) {
        a.swap_cols(c, j);
        if (v) v->swap_cols(c, j);
        return;
    }
    if (bv % av == 0) {
        Int q = -(bv / av);
        a.add_col_multiple(j, c, q);
        if (v) v->add_col_multiple(j, c, q);
        return;
    }
    auto [g, p, q] = extended_gcd(av, bv);
    Int ag = av / g, bg = bv / g;
    for (std::size_t k = 0; k < a.rows(); ++k) {
        Int akc = a.at(k, c), akj = a.at(k, j);
        a.at(k, c) = p * akc + q * akj;
        a.at(k, j) = ag * akj - bg * akc;
    }
    if (v)
        for (std::size_t k = 0; k < v->rows(); ++k) {
            Int vkc = v->at(k, c), vkj = v->at(k, j);
            v->at(k, c) = p * vkc + q * vkj;
            v->at(k, j) = ag * vkj - bg * vkc;
        }
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    HermiteResult res{m, IntMatrix::identity(rows), 0};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        for (std::size_t i = r + 1; i < rows; ++i) gcd_eliminate_row(h, &u, r, i, c);
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        const Int& pivot = h.at(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, c), pivot);
            if (q != 0) {
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
            }
        }
        ++r;
    }
    res.rank = r;
    return res;
}

SmithResult smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithResult res{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        // Move some nonzero entry of the trailing submatrix to (t, t).
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (d.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        if (pi != t) {
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
        }
        if (pj != t) {
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
        }

        for (;;) {
            for (std::size_t i = t + 1; i < rows; ++i) gcd_eliminate_row(d, &u, t, i, t);
            for (std::size_t j = t + 1; j < cols; ++j) gcd_eliminate_col(d, &v, t, j, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows && clean; ++i)
                if (d.at(i, t) != 0) clean = false;
            for (std::size_t j = t + 1; j < cols && clean; ++j)
                if (d.at(t, j) != 0) clean = false;
            if (!clean) continue;
            // Pivot must divide the whole trailing submatrix or the chain breaks.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols && divides; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    return res;
}

Int determinant(const IntMatrix& m) {
    if (!m.is_square())
        throw Error(ErrorCode::Internal, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix b = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (b.at(i, i) == 0) {
            std::size_t j = i + 1;
            while (j < n && b.at(j, i) == 0) ++j;
            if (j == n) return 0;
            b.swap_rows(i, j);
            sign = -sign;
        }
        for (std::size_t r = i + 1; r < n; ++r) {
            for (std::size_t c = i + 1; c < n; ++c)
                b.at(r, c) = exact_div(b.at(r, c) * b.at(i, i) - b.at(r, i) * b.at(i, c), prev);
            b.at(r, i) = 0;
        }
        prev = b.at(i, i);
    }
    return sign * b.at(n - 1, n - 1);
}

}  // namespace herbrand
