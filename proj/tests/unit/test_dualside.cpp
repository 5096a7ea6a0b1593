#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qhopf/dualside.hpp"
#include "qhopf/involutory_pivotal.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

namespace {

const FieldSpec G = FieldSpec::gaussian();

std::vector<std::string> dual_fixtures() { return {"h2", "klein_x", "klein_x_y", "klein_xy", "c2", "c3", "c4", "d_h2"}; }

Vec normalized_integral(const DualQuasiHopf& A) {
    for (const auto& T : dual_integrals(A)) {
        Scalar t1 = Scalar::zero(A.field());
        for (int i = 0; i < A.dim(); ++i) t1 += T[static_cast<std::size_t>(i)] * A.alg->unit[static_cast<std::size_t>(i)];
        if (!t1.is_zero()) return vscale(t1.inv(), T);
    }
    FAIL("no integral with T(1) != 0");
    return {};
}

} // namespace

TEST_CASE("duals of fixtures satisfy the dual axioms") {
    for (const auto& name : dual_fixtures()) {
        CAPTURE(name);
        QuasiHopfAlgebra H = fixture(name, G).H;
        DualQuasiHopf A = dualize(H);
        CHECK(A.dim() == H.dim());
        CHECK(A.names[0] == "P" + H.names[0]);
        VerificationReport r = verify_dual(A);
        CHECK_MESSAGE(r.all_passed(), r.text());
        QuasiHopfAlgebra back = predual(A, H.names);
        CHECK_MESSAGE(same_structure(back, H), structure_difference(back, H));
    }
}

TEST_CASE("a perturbed reassociator breaks the dual cocycle condition") {
    DualQuasiHopf A = dualize(h2(G));
    CHECK(verify_dual(A).all_passed());
    for (auto& x : A.phi) x *= Scalar(G, 2);
    A = make_dual(A.alg, A.co, A.phi, std::nullopt, A.S, A.alpha, A.beta, A.names);
    VerificationReport r = verify_dual(A);
    CHECK_FALSE(r.all_passed());
    CHECK(r.find("dual.cocycle") != nullptr);
    CHECK_FALSE(r.find("dual.cocycle")->passed);
    CHECK_FALSE(r.failed_ids().empty());
}

TEST_CASE("involutivity on the dual side") {
    for (const auto& name : dual_fixtures()) {
        CAPTURE(name);
        QuasiHopfAlgebra H = fixture(name, G).H;
        DualQuasiHopf A = dualize(H);
        DualInvolutoryCertificate c = is_involutory_dual(A);
        CHECK(c.holds == is_involutory(H).holds);
        CHECK(c.report.all_passed());
        CHECK(c.alpha_inv.has_value());
        CHECK(c.beta_inv.has_value());
    }
    DualQuasiHopf A = dualize(h2(G));
    A.alpha = vscale(Scalar(G, 2), A.alpha);
    CHECK_FALSE(is_involutory_dual(A).holds);
}

TEST_CASE("integrals on the dual match integrals of the predual") {
    for (const auto& name : dual_fixtures()) {
        CAPTURE(name);
        QuasiHopfAlgebra H = fixture(name, G).H;
        DualQuasiHopf A = dualize(H);
        std::vector<Vec> T = dual_integrals(A);
        std::vector<Vec> L = left_integrals(H);
        CHECK(T.size() == L.size());
        // a left integral on A is a left integral of the convolution algebra A^* = H
        for (const auto& t : T)
            for (int i = 0; i < H.dim(); ++i) CHECK(H.mul(H.e(i), t) == vscale(H.eps(H.e(i)), t));
        CHECK(cosemisimple_check(A));
    }
    DualQuasiHopf F3 = dualize(fixture("c3", FieldSpec::prime(3)).H);
    CHECK(dual_integrals(F3).size() == 1);
    CHECK_FALSE(cosemisimple_check(F3));
}

TEST_CASE("p_R and q_R on the dual side") {
    for (const auto& name : {"h2", "klein_x", "c2"}) {
        CAPTURE(name);
        QuasiHopfAlgebra H = fixture(name, G).H;
        DualQuasiHopf A = dualize(H);
        DualPQ d = dual_pq(A);
        PQElements pq = pq_elements(H);
        // the functionals evaluate the elements of H (x) H
        for (int a = 0; a < H.dim(); ++a)
            for (int b = 0; b < H.dim(); ++b) {
                CHECK(d.pR(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) == pq.pR({a, b}));
                CHECK(d.qR(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) == pq.qR({a, b}));
            }
    }
}

TEST_CASE("omega_T, theta* and the representation of functionals") {
    for (const auto& name : {"h2", "klein_x", "klein_xy", "c3", "c4"}) {
        CAPTURE(name);
        DualQuasiHopf A = dualize(fixture(name, G).H);
        Vec T = normalized_integral(A);
        Matrix w = omega_T(A, T);
        CHECK(w.rows() == static_cast<std::size_t>(A.dim()));
        CHECK(rank(w) == static_cast<std::size_t>(A.dim()));
        VerificationReport id = omega_identity_check(A, T);
        CHECK_MESSAGE(id.all_passed(), id.text());
        ThetaStar th = theta_star(A, T);
        CHECK(th.via_sigma == th.via_pq);
        CHECK_MESSAGE(th.report.all_passed(), th.report.text());
        VerificationReport rep = omega_representation_check(A, T);
        CHECK_MESSAGE(rep.all_passed(), rep.text());
    }
}

TEST_CASE("omega_T is linear in the integral") {
    DualQuasiHopf A = dualize(fixture("klein_x", G).H);
    Vec T = normalized_integral(A);
    Matrix w = omega_T(A, T), w3 = omega_T(A, vscale(Scalar(G, 3), T));
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j) CHECK(w3(i, j) == Scalar(G, 3) * w(i, j));
}
