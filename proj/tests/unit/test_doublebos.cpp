#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "qhopf/involutory_pivotal.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

namespace {

const FieldSpec G = FieldSpec::gaussian();

Vec pm(const QuasiHopfAlgebra& H) { return vscale(Scalar::from_ratio(H.field(), 1, 2), vsub(H.one(), H.e(1))); }
Vec pp(const QuasiHopfAlgebra& H) { return vscale(Scalar::from_ratio(H.field(), 1, 2), vadd(H.one(), H.e(1))); }

// X = eps |><| g and Y = mu |><| 1 in the basis e^i |><| e_j of D(H(2))
Vec X(const QuasiHopfAlgebra& D) { return vadd(D.e(1), D.e(3)); }
Vec Y(const QuasiHopfAlgebra& D) { return vsub(D.e(0), D.e(2)); }

bool contains(const std::vector<Scalar>& v, const Scalar& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

} // namespace

TEST_CASE("R-matrices of H(2)") {
    QuasiHopfAlgebra H = h2(G);
    CHECK(verify_qt(H, h2_rmatrix(H, 1).R).all_passed());
    CHECK(verify_qt(H, h2_rmatrix(H, -1).R).all_passed());
    CHECK(h2_rmatrix(H, 1).R == h2_rmatrix_candidate(H, gi(1, 1)));
    CHECK_FALSE(verify_qt(H, H.unit(2)).all_passed());
    for (int w : {0, 1, 2, 4}) CHECK_FALSE(verify_qt(H, h2_rmatrix_candidate(H, Scalar(G, w))).all_passed());
    for (const auto& name : {"c2", "klein", "c3"}) {
        QuasiHopfAlgebra K = fixture(name, G).H;
        CHECK(verify_qt(K, K.unit(2)).all_passed());
    }
    CHECK_THROWS_AS(make_qt(H, H.unit(2)), Error);
}

TEST_CASE("enumeration of R-matrices") {
    RMatrixEnumeration e = enumerate_rmatrices_h2(h2(G));
    REQUIRE(e.found.size() == 2);
    CHECK(contains(e.omegas, gi(1, 1)));
    CHECK(contains(e.omegas, gi(1, -1)));
    for (const auto& r : e.reports) CHECK(r.all_passed());

    RMatrixEnumeration q = enumerate_rmatrices_h2(h2(FieldSpec::rationals()));
    CHECK(q.found.empty());
    CHECK_FALSE(q.diagnostic.empty());

    FieldSpec F5 = FieldSpec::prime(5);
    QuasiHopfAlgebra H5 = h2(F5);
    RMatrixEnumeration p = enumerate_rmatrices_h2(H5);
    REQUIRE(p.found.size() == 2);
    // roots of 2 - 2w + w^2 over F_5 by brute force
    std::vector<Scalar> roots;
    for (int w = 0; w < 5; ++w)
        if ((2 - 2 * w + w * w) % 5 == 0) roots.push_back(Scalar(F5, w));
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) CHECK(contains(p.omegas, r));
    CHECK(contains(p.omegas, Scalar(F5, 3)));
    CHECK(contains(p.omegas, Scalar(F5, 4)));
    for (const auto& s : p.found) CHECK(verify_qt(H5, s.R).all_passed());
}

TEST_CASE("R_+ and R_- are not related by an automorphism") {
    QuasiHopfAlgebra H = h2(G);
    NonIsoProbe probe = h2_rmatrix_isomorphism_probe(H, h2_rmatrix(H, 1).R, h2_rmatrix(H, -1).R);
    CHECK_FALSE(probe.isomorphism_found);
    bool identity_seen = false;
    for (const auto& c : probe.candidates) {
        CHECK_FALSE((c.algebra_automorphism && c.maps_R));
        if (c.a == Scalar::one(G) && c.b.is_zero()) identity_seen = true;
    }
    CHECK(identity_seen);
    NonIsoProbe self = h2_rmatrix_isomorphism_probe(H, h2_rmatrix(H, 1).R, h2_rmatrix(H, 1).R);
    CHECK(self.isomorphism_found);
}

TEST_CASE("the element Omega") {
    for (const auto& name : {"h2", "klein_x", "c2", "c4"}) {
        QuasiHopfAlgebra H = fixture(name, G).H;
        Tensor O = omega_element(H, drinfeld_twist(H));
        REQUIRE(O.arity() == 5);
        const LegOp E = LegOp::eps();
        CHECK(H.apply(O, {E, E, E, E, E}).as_scalar() == Scalar::one(G));
        if (H.phi == H.unit(3)) CHECK(O == H.unit(5));
    }
}

TEST_CASE("the quantum double of H(2)") {
    QuasiHopfAlgebra H = h2(G);
    QuantumDouble Q = quantum_double(H);
    const QuasiHopfAlgebra& D = Q.D;
    CHECK(D.dim() == 4);
    Vec x = X(D), y = Y(D);
    CHECK(D.mul(x, x) == D.one());
    CHECK(D.mul(y, y) == x);
    CHECK(D.mul(x, y) == D.mul(y, x));
    CHECK(D.delta(x) == D.t({x, x}));
    Vec xy = D.mul(x, y);
    Tensor dy = Scalar::from_ratio(G, -1, 2) * (D.t({y, y}) + D.t({xy, y}) + D.t({y, xy}) - D.t({xy, xy}));
    CHECK(D.delta(y) == dy);
    CHECK(D.eps(y) == Scalar(G, -1));
    CHECK(D.eps(x) == Scalar(G, 1));
    CHECK(D.alpha == x);
    CHECK(D.beta == D.one());
    CHECK(D.S.is_identity());
    Vec pmx = vscale(Scalar::from_ratio(G, 1, 2), vsub(D.one(), x));
    Vec ppx = vscale(Scalar::from_ratio(G, 1, 2), vadd(D.one(), x));
    CHECK(D.phi == D.unit(3) - Scalar(G, 2) * D.t({pmx, pmx, pmx}));
    CHECK(Q.R.R == D.t({ppx, D.one()}) - D.t({pmx, xy}));
    CHECK(verify_qt(D, Q.R.R).all_passed());
    CHECK(verify_quasihopf(D).all_passed());
    CHECK(Q.report.all_passed());
}

TEST_CASE("the embedding of H into its double") {
    for (const auto& name : {"h2", "klein_x", "c2"}) {
        QuasiHopfAlgebra H = fixture(name, G).H;
        QuantumDouble Q = quantum_double(H);
        CHECK(rank(Q.iD) == static_cast<std::size_t>(H.dim()));
        for (int i = 0; i < H.dim(); ++i) {
            Vec a = Q.iD.column(static_cast<std::size_t>(i));
            CHECK(Q.D.eps(a) == H.eps(H.e(i)));
            for (int j = 0; j < H.dim(); ++j)
                CHECK(Q.D.mul(a, Q.iD.column(static_cast<std::size_t>(j))) == Q.iD.apply(H.mul(H.e(i), H.e(j))));
        }
        CHECK(Q.iD.apply(H.one()) == Q.D.one());
    }
}

TEST_CASE("the double of the Klein four group with Phi_x") {
    QuantumDouble Q = quantum_double(fixture("klein_x", G).H);
    CHECK(Q.D.dim() == 16);
    CHECK(verify_quasihopf(Q.D).all_passed());
    CHECK(verify_qt(Q.D, Q.R.R).all_passed());
}

TEST_CASE("factorizability") {
    QuasiHopfAlgebra H = h2(G);
    for (int sign : {1, -1}) {
        Factorizability F = factorizability_map(H, h2_rmatrix(H, sign));
        CHECK(F.Q.column(0) == pm(H));
        CHECK(F.Q.column(1) == pp(H));
        CHECK(F.factorizable);
    }
    QuasiHopfAlgebra C2 = fixture("c2", G).H;
    Factorizability T = factorizability_map(C2, make_qt(C2, C2.unit(2)));
    CHECK(rank(T.Q) == 1);
    CHECK_FALSE(T.factorizable);
    QuasiHopfAlgebra k1 = group_hopf(G, {1});
    Factorizability one = factorizability_map(k1, make_qt(k1, k1.unit(2)));
    CHECK(one.factorizable);
    CHECK(one.Q.is_identity());
}

TEST_CASE("zeta") {
    QuasiHopfAlgebra H = h2(G);
    QuantumDouble Q = quantum_double(H);
    for (int sign : {1, -1}) {
        QTStructure R = h2_rmatrix(H, sign);
        DoubleIso z = double_iso(H, R, &Q);
        CHECK(z.cert.valid());
        CHECK(z.cert_swapped.valid());
        const Matrix& m = z.map(ZetaOrder::PiFirst);
        Vec xy = z.HH.e(3);
        CHECK(m.apply(X(Q.D)) == xy);
        Scalar wp = h2_omega(G, sign), wm = h2_omega(G, -sign);
        Vec expected = vscale(Scalar::from_ratio(G, -1, 2), vadd(vscale(wp, z.HH.e(1)), vscale(wm, z.HH.e(2))));
        CHECK(m.apply(Y(Q.D)) == expected);
        // pi o i_D = id
        CHECK((z.pi * Q.iD).is_identity());
        CHECK(verify_quasihopf(z.target).all_passed());
    }
    QuasiHopfAlgebra C2 = fixture("c2", G).H;
    CHECK_THROWS_AS(double_iso(C2, make_qt(C2, C2.unit(2))), Error);
}

TEST_CASE("bosonization") {
    QuasiHopfAlgebra H = h2(G);
    Bosonization p = bosonization(H, h2_rmatrix(H, 1));
    Bosonization m = bosonization(H, h2_rmatrix(H, -1));
    CHECK(same_structure(p.B, m.B));
    CHECK(p.circ_is_original);
    CHECK(p.action_trivial);
    CHECK(verify_quasihopf(p.B).all_passed());
    QuasiHopfAlgebra kx = fixture("klein_x", G).H;
    CHECK_MESSAGE(same_structure(p.B, kx), structure_difference(p.B, kx));
    for (int b = 0; b < 2; ++b)
        for (int h = 0; h < 2; ++h) CHECK(p.B.eps(p.B.e(b * 2 + h)) == H.eps(H.e(b)) * H.eps(H.e(h)));
    CHECK(is_involutory(p.B).holds);
}

TEST_CASE("morphism certificates") {
    QuasiHopfAlgebra H = h2(G);
    CHECK(is_quasihopf_morphism(Matrix::identity(G, 2), H, H).valid());
    Matrix neg = Matrix::identity(G, 2);
    neg(1, 1) = Scalar(G, -1);
    MorphismCertificate c = is_quasihopf_morphism(neg, H, H);
    CHECK_FALSE(c.valid());
    CHECK_FALSE(c.checks.failed_ids().empty());
    C4Chain chain = c4_chain(G);
    Matrix comp = chain.composite();
    QuasiHopfAlgebra C4 = fixture("c4", G).H, K = fixture("klein", G).H;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(comp.apply(C4.mul(C4.e(i), C4.e(j))) ==
                  K.mul(comp.column(static_cast<std::size_t>(i)), comp.column(static_cast<std::size_t>(j))));
}
