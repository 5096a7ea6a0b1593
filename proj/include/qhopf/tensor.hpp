#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qhopf/linalg.hpp"

namespace qhopf {

// Multiplication and unit of an n-dimensional algebra, stored sparsely:
// mult[i*n + j] lists the nonzero (k, m_ijk) with e_i e_j = sum_k m_ijk e_k.
struct AlgebraData {
    FieldSpec field;
    int n = 0;
    std::vector<std::vector<std::pair<int, Scalar>>> mult;
    Vec unit;

    Scalar coeff(int i, int j, int k) const;
    bool operator==(const AlgebraData& o) const;
};

using AlgebraPtr = std::shared_ptr<const AlgebraData>;

// dense[(i*n + j)*n + k] = m_ijk
AlgebraPtr make_algebra(const FieldSpec& f, int n, const std::vector<Scalar>& dense, const Vec& unit);
std::vector<Scalar> dense_mult(const AlgebraData& a);

Vec vmul(const AlgebraData& a, const Vec& x, const Vec& y);
Vec vmul_right_basis(const AlgebraData& a, const Vec& x, int j);   // x e_j
Vec vadd(const Vec& x, const Vec& y);
Vec vsub(const Vec& x, const Vec& y);
Vec vscale(const Scalar& c, const Vec& x);

// Comultiplication and counit: comult[i] lists (j, k, d_ijk) with
// Delta(e_i) = sum d_ijk e_j (x) e_k.
struct CoalgebraData {
    FieldSpec field;
    int n = 0;
    std::vector<std::vector<std::tuple<int, int, Scalar>>> comult;
    Vec counit;

    bool operator==(const CoalgebraData& o) const;
};

Scalar apply_counit(const CoalgebraData& c, const Vec& x);

// Element of A^{(x)k}, dense, row-major with leg 1 the most significant
// index: flat(i_1..i_k) = ((i_1 n + i_2) n + ...) + i_k.  Leg numbers in
// the API are 0-based unless stated otherwise.
class Tensor {
public:
    Tensor() = default;
    Tensor(AlgebraPtr alg, int arity);

    static Tensor unit(const AlgebraPtr& alg, int arity);
    static Tensor pure(const AlgebraPtr& alg, const std::vector<Vec>& legs);
    static Tensor from_vec(const AlgebraPtr& alg, const Vec& v) { return pure(alg, {v}); }
    static Tensor scalar(const AlgebraPtr& alg, const Scalar& s);

    int arity() const { return arity_; }
    int dim() const { return alg_->n; }
    const AlgebraPtr& algebra() const { return alg_; }
    const FieldSpec& field() const { return alg_->field; }
    std::size_t size() const { return c_.size(); }

    Scalar& at(std::size_t flat) { return c_[flat]; }
    const Scalar& at(std::size_t flat) const { return c_[flat]; }
    Scalar& operator()(const std::vector<int>& idx) { return c_[flatten(idx)]; }
    const Scalar& operator()(const std::vector<int>& idx) const { return c_[flatten(idx)]; }
    const std::vector<Scalar>& coeffs() const { return c_; }

    std::size_t flatten(const std::vector<int>& idx) const;
    std::vector<int> unflatten(std::size_t flat) const;

    // Nonzero entries with their multi-indices.
    struct Term {
        std::vector<int> idx;
        Scalar coef;
    };
    std::vector<Term> terms() const;
    std::size_t nnz() const;

    Vec as_vec() const;          // arity 1
    Scalar as_scalar() const;    // arity 0

    Tensor& operator+=(const Tensor& b);
    Tensor& operator-=(const Tensor& b);
    friend Tensor operator+(Tensor a, const Tensor& b) { a += b; return a; }
    friend Tensor operator-(Tensor a, const Tensor& b) { a -= b; return a; }
    friend Tensor operator*(const Tensor& a, const Tensor& b);
    friend Tensor operator*(const Scalar& s, const Tensor& a);
    Tensor operator-() const;
    bool operator==(const Tensor& b) const;
    bool operator!=(const Tensor& b) const { return !(*this == b); }

    // Result leg k is leg perm[k] of this tensor.
    Tensor permuted(const std::vector<int>& perm) const;
    // Leg l of this tensor becomes leg legs[l] of an arity-k tensor; the
    // remaining legs carry the unit.
    Tensor embedded(int k, const std::vector<int>& legs) const;
    // Same coefficients over another algebra of the same dimension.
    Tensor rebound(const AlgebraPtr& alg) const;
    // Reads the coefficients as an element of a tensor power of another
    // algebra whose dimension is a power of ours (e.g. (H (x) H)^{(x)2}).
    Tensor regrouped(const AlgebraPtr& alg, int arity) const;

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    friend Tensor tensor_mul(const Tensor&, const Tensor&);
    AlgebraPtr alg_;
    int arity_ = 0;
    std::vector<Scalar> c_;
};

Tensor tensor_mul(const Tensor& a, const Tensor& b);

// Inverse in the tensor-power algebra: one-sided solve, two-sided check.
Tensor invert_in_tensor_power(const Tensor& a);

struct LegOp {
    enum class Kind { Identity, Comult, Counit, Linear };
    Kind kind = Kind::Identity;
    const Matrix* map = nullptr;

    static LegOp id() { return {Kind::Identity, nullptr}; }
    static LegOp delta() { return {Kind::Comult, nullptr}; }
    static LegOp eps() { return {Kind::Counit, nullptr}; }
    static LegOp lin(const Matrix& m) { return {Kind::Linear, &m}; }
};

Tensor apply_legs(const Tensor& t, const std::vector<LegOp>& ops, const CoalgebraData& co);
Tensor apply_on_leg(const Tensor& t, int leg, LegOp op, const CoalgebraData& co);
// Applies m (columns indexed by our basis) to every leg; the result lives
// over `target`, whose dimension is m.rows().
Tensor map_all_legs(const Tensor& t, const Matrix& m, const AlgebraPtr& target);

// Replaces legs a < b by a single leg at position a through a bilinear
// table: table[i*n + j] is the image of e_i (x) e_j.
Tensor merge_legs(const Tensor& t, int a, int b, const std::vector<Vec>& table);

// Word-based contraction.  Each output leg is an ordered product of factors;
// a factor is a leg of one of the inputs (legs numbered from 1 here, to match
// superscript notation), a constant vector, or a linear map applied to a
// sub-word.  The result sums over all terms of all inputs.
struct Factor {
    enum class Kind { Leg, Const, Map };
    Kind kind = Kind::Leg;
    int input = 0;
    int leg = 1;
    Vec value;
    const Matrix* map = nullptr;
    std::vector<Factor> inner;
};
using Word = std::vector<Factor>;

Factor L(int input, int leg);
Factor K(const Vec& v);
Factor M(const Matrix& m, Word w);

Tensor contract(const AlgebraPtr& alg, const std::vector<const Tensor*>& inputs, const std::vector<Word>& outputs);

} // namespace qhopf
