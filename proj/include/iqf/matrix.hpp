#pragma once

#include "iqf/integer.hpp"

#include <cstddef>
#include <vector>

namespace iqf {

// Dense integer matrix, row-major, 0-based element access.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;
    void set_row(std::size_t i, const IntVec& v);

    IntMatrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVec operator*(const IntMatrix& a, const IntVec& x);

struct PsdRank {
    bool is_psd;
    std::size_t rank;
};

// x -> x^T G x is non-negative over Q, plus the exact rank of G.
PsdRank psd_rank(const IntMatrix& g);

std::size_t rank(const IntMatrix& m);
Int determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

// Inverse of a matrix with determinant +-1.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Primitive basis of {x in Z^cols : M x = 0} in row Hermite normal form.
std::vector<IntVec> integer_kernel(const IntMatrix& m);

// Row Hermite normal form: positive pivots, entries above each pivot reduced
// into [0, pivot). Zero rows are dropped.
std::vector<IntVec> hermite_rows(std::vector<IntVec> rows);

// Completion of squares for x^T A x with A = G/2:
//   x^T A x = sum_t d[t] * (x_{pivot[t]} + sum_l mu[t][l] x_l)^2
// where mu[t][l] is nonzero only for indices eliminated after pivot[t] or free.
struct SquareCompletion {
    bool psd = true;
    std::vector<std::size_t> pivot;
    std::vector<Rational> d;
    std::vector<std::vector<Rational>> mu;
    std::vector<std::size_t> free_vars;
};

SquareCompletion complete_squares(const IntMatrix& g);

}  // namespace iqf
