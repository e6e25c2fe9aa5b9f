#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "herbrand/integers.hpp"

namespace herbrand {

/// Dense matrix of arbitrary-precision integers, row-major. Linear maps act
/// on column vectors: a rows x cols matrix maps Z^cols -> Z^rows.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const IntVec& d);
    static IntMatrix from_rows(std::size_t cols, const std::vector<IntVec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    std::vector<IntVec> row_list() const;
    IntMatrix transpose() const;

    /// Matrix times column vector.
    IntVec apply(const IntVec& x) const;

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_identity() const;

    void swap_rows(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    /// row_i += c * row_j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_col(std::size_t i);
    /// col_i += c * col_j
    void add_col_multiple(std::size_t i, std::size_t j, const Int& c);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Int& c, const IntMatrix& a);
    friend IntMatrix operator-(const IntMatrix& a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    IntVec e_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scaled(const Int& c, const IntVec& a);
bool vec_is_zero(const IntVec& a);
std::string vec_to_string(const IntVec& a);

}  // namespace herbrand
