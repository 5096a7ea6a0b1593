#pragma once

#include <string>
#include <vector>

#include "qhopf/quasihopf.hpp"

namespace qhopf {

// A coassociative coalgebra with a multiplication that is a coalgebra map, a
// reassociator phi in (A (x) A (x) A)^*, an antimorphism S and alpha, beta in A^*.
struct DualQuasiHopf {
    AlgebraPtr alg;                       // multiplication and unit of A
    CoalgebraData co;                     // Delta and eps of A
    std::vector<Scalar> phi, phi_inv;     // phi(e_i, e_j, e_k) at (i*n + j)*n + k
    Matrix S;
    Vec alpha, beta;                      // alpha(e_i)
    std::vector<std::string> names;

    int dim() const { return alg->n; }
    const FieldSpec& field() const { return alg->field; }
};

// The convolution algebra A^*: (p * q)(a) = p(a_1) q(a_2), unit eps.
AlgebraPtr convolution_algebra(const DualQuasiHopf& A);

// Assembles the data; phi_inv is the convolution inverse when not supplied.
DualQuasiHopf make_dual(AlgebraPtr alg, CoalgebraData co, std::vector<Scalar> phi, std::optional<std::vector<Scalar>> phi_inv,
                        Matrix S, Vec alpha, Vec beta, std::vector<std::string> names);

// A = H^* on the dual basis P_i.
DualQuasiHopf dualize(const QuasiHopfAlgebra& H);
// The quasi-Hopf algebra A^* (convolution product, Delta dual to m_A, Phi = phi).
QuasiHopfAlgebra predual(const DualQuasiHopf& A, std::vector<std::string> names = {});

VerificationReport verify_dual(const DualQuasiHopf& A);

struct DualInvolutoryCertificate {
    bool holds = false;
    Vec u, v;                        // (beta o S) alpha and beta (alpha o S)
    std::optional<Vec> alpha_inv, beta_inv;
    VerificationReport report;
};
// S^2(a) = beta(S(a_1)) alpha(a_2) a_3 beta(a_4) alpha(S(a_5)); when it holds, the
// convolution inverses and S(a_3) alpha^-1(a_2) a_1 = alpha^-1(a) 1, a_3 beta^-1(a_2) S(a_1) = beta^-1(a) 1.
DualInvolutoryCertificate is_involutory_dual(const DualQuasiHopf& A);

// Left integrals T on A: p * T = p(1) T for all p in A^*.
std::vector<Vec> dual_integrals(const DualQuasiHopf& A);
// Some integral with T(1) != 0; throws NoIntegral.
bool cosemisimple_check(const DualQuasiHopf& A);

// p_R(a, b) = phi^-1(a, b_1, S(b_3)) beta(b_2),  q_R(a, b) = phi(a, b_3, S^-1(b_1)) alpha(S^-1(b_2))
struct DualPQ {
    Matrix pR, qR;                   // entry (a, b)
};
DualPQ dual_pq(const DualQuasiHopf& A);   // throws AntipodeNotInvertible

// omega_T(b, a) = q_R(b_1, a_1) T(b_2 a_2) p_R(b_3, a_3), entry (b, a)
Matrix omega_T(const DualQuasiHopf& A, const Vec& T);
// omega_T(a_2, S(a_1)) = T(1) beta(S(a_1)) alpha(a_2) on every basis element
VerificationReport omega_identity_check(const DualQuasiHopf& A, const Vec& T);

// theta*(T (x) a) through sigma and through p_R, q_R; column a is the functional.
struct ThetaStar {
    Matrix via_sigma, via_pq;
    VerificationReport report;       // agreement, bijectivity, colinearity
};
ThetaStar theta_star(const DualQuasiHopf& A, const Vec& T);

// For every P_j solves P_j(b) = omega_T(b, S(a)) for a.
VerificationReport omega_representation_check(const DualQuasiHopf& A, const Vec& T);

} // namespace qhopf
