#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qhopf/field.hpp"

namespace qhopf {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec& f, std::size_t n);
Vec basis_vec(const FieldSpec& f, std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);
// a (x) b with index i*|b| + j
Vec kron(const Vec& a, const Vec& b);

// Dense matrix.  A linear map sends e_j to column j.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const FieldSpec& f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return f_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec column(std::size_t j) const;
    void set_column(std::size_t j, const Vec& v);
    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    Matrix operator*(const Matrix& b) const;
    bool operator==(const Matrix& b) const { return rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_; }
    bool operator!=(const Matrix& b) const { return !(*this == b); }
    bool is_identity() const;

private:
    FieldSpec f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

struct SolutionSet {
    bool consistent = false;
    Vec particular;                 // valid when consistent
    std::vector<Vec> kernel;        // basis of the homogeneous solutions
};

// Incremental row reduction for systems A x = b in `unknowns` variables.
// Rows are reduced as they arrive so redundant equations cost no memory.
class RowReducer {
public:
    RowReducer(const FieldSpec& f, std::size_t unknowns);

    // coeffs has length `unknowns`; rhs defaults to zero.
    void add_equation(Vec coeffs, const Scalar& rhs);
    void add_equation(Vec coeffs) { add_equation(std::move(coeffs), Scalar::zero(f_)); }

    bool inconsistent() const { return inconsistent_; }
    std::size_t rank() const { return rows_.size(); }
    SolutionSet solve() const;

private:
    FieldSpec f_;
    std::size_t n_;
    bool inconsistent_ = false;
    std::vector<Vec> rows_;           // each of length n_+1, leading entry 1
    std::vector<std::size_t> pivots_;
};

SolutionSet solve_linear(const Matrix& a, const Vec& b);
std::vector<Vec> kernel(const Matrix& a);
std::size_t rank(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);

} // namespace qhopf
