#pragma once

#include "herbrand/matrix.hpp"

namespace herbrand {

/// Row-style Hermite normal form: u * m == h with u unimodular. Pivots are
/// positive, entries below a pivot are zero, entries above it are reduced to
/// [0, pivot). Zero rows sink to the bottom; `rank` counts the pivot rows.
struct HermiteResult {
    IntMatrix h;
    IntMatrix u;
    std::size_t rank = 0;
};

HermiteResult hermite_normal_form(const IntMatrix& m);

/// Smith normal form: u * m * v == d with u, v unimodular and d diagonal,
/// entries nonnegative, each dividing the next, zeros last.
struct SmithResult {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Exact determinant of a square matrix (fraction-free elimination).
Int determinant(const IntMatrix& m);

}  // namespace herbrand
