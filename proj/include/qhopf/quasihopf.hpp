#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/report.hpp"
#include "qhopf/tensor.hpp"

namespace qhopf {

struct QuasiHopfAlgebra {
    AlgebraPtr alg;
    CoalgebraData co;
    Tensor phi, phi_inv;
    Matrix S, S_inv;
    Vec alpha, beta;
    std::vector<std::string> names;
    std::vector<std::string> notes;

    int dim() const { return alg->n; }
    const FieldSpec& field() const { return alg->field; }

    Vec e(int i) const { return basis_vec(field(), static_cast<std::size_t>(dim()), static_cast<std::size_t>(i)); }
    Vec one() const { return alg->unit; }
    Vec zero() const { return zero_vec(field(), static_cast<std::size_t>(dim())); }
    Scalar scalar(std::int64_t n) const { return Scalar(field(), n); }
    Vec mul(const Vec& a, const Vec& b) const { return vmul(*alg, a, b); }
    Vec mul(std::initializer_list<Vec> factors) const;
    Vec antipode(const Vec& v) const { return S.apply(v); }
    Vec antipode_inv(const Vec& v) const { return S_inv.apply(v); }
    Scalar eps(const Vec& v) const { return apply_counit(co, v); }

    Tensor t(const Vec& v) const { return Tensor::from_vec(alg, v); }
    Tensor t(const std::vector<Vec>& legs) const { return Tensor::pure(alg, legs); }
    Tensor unit(int arity) const { return Tensor::unit(alg, arity); }
    Tensor delta(const Vec& v) const;
    Tensor delta_basis(int i) const;
    Tensor apply(const Tensor& x, const std::vector<LegOp>& ops) const { return apply_legs(x, ops, co); }
    Tensor on_leg(const Tensor& x, int leg, LegOp op) const { return apply_on_leg(x, leg, op, co); }
    Vec inverse(const Vec& v) const;     // throws NotInvertible
    std::string show(const Tensor& x) const { return x.str(names); }
    std::string show(const Vec& v) const { return t(v).str(names); }
};

// Assembles and validates a structure: stores or computes phi_inv, inverts S,
// and rescales alpha/beta so that eps(alpha) = eps(beta) = 1 (noted).
QuasiHopfAlgebra make_quasihopf(AlgebraPtr alg, CoalgebraData co, Tensor phi, std::optional<Tensor> phi_inv,
                                Matrix S, Vec alpha, Vec beta, std::vector<std::string> names);

CoalgebraData coalgebra_from(const FieldSpec& f, int n, const std::vector<Tensor>& deltas, const Vec& counit);

bool same_structure(const QuasiHopfAlgebra& a, const QuasiHopfAlgebra& b);
std::string structure_difference(const QuasiHopfAlgebra& a, const QuasiHopfAlgebra& b);

struct VerifyOptions {
    bool exhaustive = false;
};

VerificationReport verify_algebra(const QuasiHopfAlgebra& H, const VerifyOptions& opt = {});
VerificationReport verify_quasibialgebra(const QuasiHopfAlgebra& H, const VerifyOptions& opt = {});
// Antipode axioms; includes the quasi-bialgebra checks unless base=false.
VerificationReport verify_quasihopf(const QuasiHopfAlgebra& H, const VerifyOptions& opt = {}, bool base = true);

struct TwistData {
    Tensor F, F_inv;
};

// Checks the counit normalization and F F^{-1} = 1; throws InvalidTwist.
TwistData make_twist(const QuasiHopfAlgebra& H, const Tensor& F, std::optional<Tensor> F_inv = std::nullopt);

struct DrinfeldTwist {
    Tensor f, f_inv, gamma, delta;
    VerificationReport report;
};

DrinfeldTwist drinfeld_twist(const QuasiHopfAlgebra& H);

struct PQElements {
    Tensor pR, qR, pL, qL;
    VerificationReport report;
};

PQElements pq_elements(const QuasiHopfAlgebra& H);

QuasiHopfAlgebra gauge_twist(const QuasiHopfAlgebra& H, const TwistData& F);
QuasiHopfAlgebra antipode_transform(const QuasiHopfAlgebra& H, const Vec& U);

enum class Variant { Op, Cop, OpCop };
QuasiHopfAlgebra variant(const QuasiHopfAlgebra& H, Variant which);

QuasiHopfAlgebra tensor_product(const QuasiHopfAlgebra& H, const QuasiHopfAlgebra& K);

struct IntegralInfo {
    std::vector<Vec> left, right;
    std::optional<Vec> normalized;   // two-sided with eps = 1
};

IntegralInfo integrals(const QuasiHopfAlgebra& H);
std::vector<Vec> left_integrals(const QuasiHopfAlgebra& H);
std::vector<Vec> right_integrals(const QuasiHopfAlgebra& H);
bool is_semisimple(const QuasiHopfAlgebra& H);

} // namespace qhopf
