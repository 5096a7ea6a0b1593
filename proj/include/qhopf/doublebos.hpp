#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/quasihopf.hpp"

namespace qhopf {

struct QTStructure {
    Tensor R, R_inv;
};

VerificationReport verify_qt(const QuasiHopfAlgebra& H, const Tensor& R);
// Validates invertibility and (qt1)-(qt4); throws InvalidArgument when any fails.
QTStructure make_qt(const QuasiHopfAlgebra& H, const Tensor& R);

// The candidate R = 1 - w p_- (x) p_- on the two-dimensional algebra with basis {1, g}.
Tensor h2_rmatrix_candidate(const QuasiHopfAlgebra& H, const Scalar& w);

struct RMatrixEnumeration {
    std::vector<Scalar> omegas;        // roots of 2 - 2w + w^2
    std::vector<QTStructure> found;
    std::vector<VerificationReport> reports;
    std::string diagnostic;
};

RMatrixEnumeration enumerate_rmatrices_h2(const QuasiHopfAlgebra& H);

struct NonIsoCandidate {
    Scalar a, b;                 // nu(p_-) = a p_- + b p_+
    bool algebra_automorphism;
    bool maps_R;                 // (nu (x) nu)(R_from) == R_to
};

struct NonIsoProbe {
    std::vector<NonIsoCandidate> candidates;
    bool isomorphism_found = false;
};

// Enumerates all algebra endomorphisms nu of the two-dimensional algebra (nu(p_-)
// idempotent) and tests (nu (x) nu)(R_from) = R_to.
NonIsoProbe h2_rmatrix_isomorphism_probe(const QuasiHopfAlgebra& H, const Tensor& R_from, const Tensor& R_to);

Tensor omega_element(const QuasiHopfAlgebra& H, const DrinfeldTwist& f);

struct QuantumDouble {
    QuasiHopfAlgebra D;
    QTStructure R;
    Matrix iD;                    // n^2 x n, h -> eps |><| h
    Tensor omega, U;
    DrinfeldTwist twist;
    PQElements pq;
    VerificationReport report;    // embedding checks
};

// D(H) on the basis e^i |><| e_j with index i*n + j.
QuantumDouble quantum_double(const QuasiHopfAlgebra& H);

// U = g^1 S(q^2) (x) g^2 S(q^1)
Tensor u_element(const QuasiHopfAlgebra& H, const DrinfeldTwist& f, const PQElements& pq);

struct Factorizability {
    Matrix Q;                     // column a is Q(e^a)
    bool factorizable = false;
};

Factorizability factorizability_map(const QuasiHopfAlgebra& H, const QTStructure& R);

struct MorphismCertificate {
    Matrix map;
    VerificationReport checks;
    bool valid() const { return checks.all_passed(); }
};

MorphismCertificate is_quasihopf_morphism(const Matrix& nu, const QuasiHopfAlgebra& H, const QuasiHopfAlgebra& K);

enum class ZetaOrder { TildeFirst, PiFirst };

struct DoubleIso {
    QuasiHopfAlgebra HH;          // H (x) H, componentwise
    TwistData F;
    Vec U;
    QuasiHopfAlgebra target;      // (H (x) H)_F^U
    Matrix pi, pi_tilde;          // n x n^2
    Matrix zeta;                  // pi~(D_1) (x) pi(D_2), n^2 x n^2
    MorphismCertificate cert;
    Matrix zeta_swapped;          // pi(D_1) (x) pi~(D_2)
    MorphismCertificate cert_swapped;
    std::vector<std::string> notes;

    const Matrix& map(ZetaOrder o) const { return o == ZetaOrder::TildeFirst ? zeta : zeta_swapped; }
    const MorphismCertificate& certificate(ZetaOrder o) const { return o == ZetaOrder::TildeFirst ? cert : cert_swapped; }
};

// zeta(D) = pi~(D_1) (x) pi(D_2); the order pi(D_1) (x) pi~(D_2) is built and
// certified alongside it.
DoubleIso double_iso(const QuasiHopfAlgebra& H, const QTStructure& R, const QuantumDouble* D = nullptr);

// The twist F in (H (x) H)^(x)2 built from R.
Tensor double_twist_element(const QuasiHopfAlgebra& H, const QTStructure& R, const AlgebraPtr& hh);

struct Bosonization {
    QuasiHopfAlgebra B;            // on the basis b x h with index b*n + h
    bool circ_is_original = false; // the transmuted product equals the product of H
    bool action_trivial = false;   // h |> h' = eps(h) h'
    std::vector<Vec> circ, action; // tables indexed i*n + j
};

Bosonization bosonization(const QuasiHopfAlgebra& H, const QTStructure& R);

} // namespace qhopf
