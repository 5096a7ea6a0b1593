#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/doublebos.hpp"

namespace qhopf {

// k[C_{n_1} x ... x C_{n_r}] with Phi = 1(x)1(x)1.  Basis index is mixed
// radix with the first factor most significant.  Names: "1","g","g^2",... for
// one factor, "1","x","y","xy" for [2,2] (x generates the second factor),
// tuples "(a,b,...)" otherwise.
QuasiHopfAlgebra group_hopf(const FieldSpec& f, const std::vector<int>& orders);

// Basis {1, g}; Phi = 1 - 2 p_- (x) p_- (x) p_-, S = id, alpha = g, beta = 1.
QuasiHopfAlgebra h2(const FieldSpec& f);

enum class KleinCocycle { X, XandY, XY };
// k[C2 x C2] with basis 1, x, y, xy and the 3-cocycle Phi_x, Phi_x Phi_y or Phi_xy.
QuasiHopfAlgebra klein(const FieldSpec& f, KleinCocycle c);
std::optional<KleinCocycle> parse_klein_cocycle(const std::string& s);

// k[C4] on 1, g, g^2, g^3; requires a primitive fourth root of unity.
QuasiHopfAlgebra c4_hopf(const FieldSpec& f);

// omega_+- = 1 +- i and R_+- = 1 - omega_+- p_- (x) p_- on H(2).
Scalar h2_omega(const FieldSpec& f, int sign);
QTStructure h2_rmatrix(const QuasiHopfAlgebra& h2alg, int sign);

// The algebra maps k[C4] -> k^4 -> k[C2 x C2] -> k[C2 x C2]:
// alpha(g) = e1 + i e2 - e3 - i e4, beta(e1..e4) = p+p+, p-p+, p+p-, p-p- (x first),
// gamma(x) = xy, gamma(y) = -x, gamma(xy) = -y.
struct C4Chain {
    Matrix alpha, beta, gamma;
    Matrix composite() const { return gamma * (beta * alpha); }
};
C4Chain c4_chain(const FieldSpec& f);

// Inclusion k[C4] -> D(H(2)), g^k -> Y^k with Y = (e^1 - e^g) |><| 1.
Matrix c4_into_double(const QuantumDouble& D);

struct Fixture {
    std::string name;
    QuasiHopfAlgebra H;
    std::optional<QTStructure> R;
    std::vector<std::string> facts;
};

std::vector<std::string> fixture_names();
// Builds a catalog entry and runs verify_quasihopf on it; throws
// InternalInconsistency if the axioms fail and InvalidArgument for unknown names.
Fixture fixture(const std::string& name, const FieldSpec& f);

} // namespace qhopf
