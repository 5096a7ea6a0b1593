#pragma once

#include <optional>
#include <vector>

#include "qhopf/doublebos.hpp"
#include "qhopf/repcat.hpp"

namespace qhopf {

// u = S(beta) alpha, v = beta S(alpha)
struct InvolutoryCertificate {
    bool holds = false;
    Vec u, v;
    std::optional<Vec> alpha_inv, beta_inv;
    VerificationReport report;
};

// S^2(h) = S(beta) alpha h beta S(alpha) on every basis element; when it holds
// also u v = v u = 1, the inverse formulas for alpha and beta, and
// beta S(alpha) S^2(h) S(beta) alpha = h.
InvolutoryCertificate is_involutory(const QuasiHopfAlgebra& H);

// S(h_2) beta^-1 h_1 = eps(h) beta^-1 and h_2 alpha^-1 S(h_1) = eps(h) alpha^-1; throws NotInvolutory.
VerificationReport inverse_antipode_identities(const QuasiHopfAlgebra& H);

struct PivotalElement {
    Vec g, g_inv;
    VerificationReport certified;
};

// g S^2(h) = h g, g invertible, Delta(g) = (g (x) g)(S (x) S)(f_21^-1) f, eps(g) = 1.
VerificationReport certify_pivotal(const QuasiHopfAlgebra& H, const Vec& g);

// All pivotal elements.  Throws SolutionSpaceTooLarge when the solutions of
// g S^2(h) = h g form a space of dimension > 2.
std::vector<PivotalElement> pivotal_elements(const QuasiHopfAlgebra& H);

// g = q^2 L_2 p^2 S(q^1 L_1 p^1) for the normalized integral L; throws NoNormalizedIntegral.
struct IntegralPivotal {
    Vec g;
    std::optional<bool> equals_beta_S_alpha;   // set when H is involutory
};
IntegralPivotal pivotal_from_integral(const QuasiHopfAlgebra& H);

// sum v^i(g^-1 beta S(alpha) v_i) and sum v^i(g S(beta) alpha v_i)
struct CategoricalDimension {
    Scalar first, second;
    bool agree() const { return first == second; }
};
CategoricalDimension categorical_dimension(const QuasiHopfAlgebra& H, const Vec& g, const HModule& M);

// Tr(h -> S^-2(S(beta) alpha h beta S(alpha)))
Scalar trace_operator(const QuasiHopfAlgebra& H);

// Delta(S(beta) alpha) = f^-1 (S (x) S)(f_21)(S(beta) alpha (x) S(beta) alpha); throws NotInvolutory.
VerificationReport double_involutivity_condition(const QuasiHopfAlgebra& H);

// The condition above and, when it holds, involutivity of D(H) checked directly.
VerificationReport involutory_double_theorem(const QuasiHopfAlgebra& H, const QuantumDouble* D = nullptr);

} // namespace qhopf
