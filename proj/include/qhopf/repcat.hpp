#pragma once

#include <string>
#include <vector>

#include "qhopf/quasihopf.hpp"

namespace qhopf {

// A left module: rho[b] is the matrix of e_b.
struct HModule {
    int dim = 0;
    std::vector<Matrix> rho;

    Matrix act(const Vec& h) const;
};

HModule trivial_module(const QuasiHopfAlgebra& H);
HModule regular_module(const QuasiHopfAlgebra& H);
HModule character_module(const QuasiHopfAlgebra& H, const Vec& chi);

VerificationReport verify_module(const QuasiHopfAlgebra& H, const HModule& M);

// <h.phi, v> = <phi, S(h).v>
HModule dual_module(const QuasiHopfAlgebra& H, const HModule& M);
// action through Delta on M (x) N, index i*dim(N) + j
HModule tensor_module(const QuasiHopfAlgebra& H, const HModule& M, const HModule& N);

// ev(phi (x) v) = phi(alpha.v) on M* (x) M, coev = sum beta.v_i (x) v^i in M (x) M*.
struct EvCoev {
    Matrix ev;          // 1 x m^2
    Vec coev;           // length m^2
    VerificationReport report;
};
EvCoev ev_coev(const QuasiHopfAlgebra& H, const HModule& M);

// ev_{M*} o (a (x) id) o coev_M, with M** identified with M as a vector space.
Scalar categorical_trace(const QuasiHopfAlgebra& H, const HModule& M, const Matrix& a);

struct HomSpace {
    std::vector<Matrix> basis;        // H-linear maps M -> N
    std::size_t invariant_dim = 0;    // dim Hom_H(k, N (x) M*)
    bool dims_agree() const { return basis.size() == invariant_dim; }
};
HomSpace hom_space(const QuasiHopfAlgebra& H, const HModule& M, const HModule& N);

// mu(h (x) h') = q~^2 h'_2 (x) S^-1(q~^1 h'_1) h,  mu^-1(h (x) h') = h_1 p~^1 h' (x) h_2 p~^2
struct MuIso {
    Matrix mu, mu_inv;
    VerificationReport report;
};
MuIso mu_isomorphism(const QuasiHopfAlgebra& H);

// z with z^d = 1 available in the field.
std::vector<Scalar> roots_of_unity(const FieldSpec& f, int d);

// Characters chi : H -> k determined by their values on generators g_k with
// g_k^(orders[k]) = 1.  The monomials in the generators must span H.
std::vector<Vec> characters(const QuasiHopfAlgebra& H, const std::vector<Vec>& gens, const std::vector<int>& orders);

struct Generators {
    std::vector<Vec> gens;
    std::vector<int> orders;
};
// For a basis of grouplike elements: the non-unit basis elements with their orders.
std::optional<Generators> grouplike_generators(const QuasiHopfAlgebra& H);

struct LabeledModule {
    std::string label;
    HModule M;
    bool projective = false;
};

struct DivisibilityEntry {
    std::string label;
    int dim = 0;
    std::size_t end_dim = 0;
    bool absolutely_simple = false;
    bool projective = false;
    bool char_divides = false;
};

struct DivisibilityReport {
    bool semisimple = false, involutory = false;
    std::uint64_t characteristic = 0;
    std::vector<DivisibilityEntry> entries;
    VerificationReport report;
};
DivisibilityReport divisibility_report(const QuasiHopfAlgebra& H, const std::vector<LabeledModule>& modules);

} // namespace qhopf
