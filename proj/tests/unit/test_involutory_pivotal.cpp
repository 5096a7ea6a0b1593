#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "qhopf/involutory_pivotal.hpp"
#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

namespace {

const FieldSpec G = FieldSpec::gaussian();

std::optional<ErrorKind> kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

Vec lin(const QuasiHopfAlgebra& H, const Scalar& a, const Scalar& b) { return vadd(vscale(a, H.one()), vscale(b, H.e(1))); }

// Brute-force pivotal conditions on a two-dimensional commutative algebra with
// S = id, using f = g (x) p_- + 1 (x) p_+ written out by hand.
bool oracle_pivotal_h2(const QuasiHopfAlgebra& H, const Vec& x) {
    Vec g = H.e(1);
    Vec pm = vscale(q(G, 1, 2), vsub(H.one(), g)), pp = vscale(q(G, 1, 2), vadd(H.one(), g));
    Tensor f = H.t({g, pm}) + H.t({H.one(), pp});
    Tensor f21_inv = f.permuted({1, 0});   // f^-1 = f
    Tensor rhs = H.t({x, x}) * f21_inv * f;
    bool invertible = !(x[0] * x[0] - x[1] * x[1]).is_zero();
    return invertible && H.eps(x) == Scalar::one(G) && H.delta(x) == rhs;
}

bool contains_vec(const std::vector<PivotalElement>& ps, const Vec& v) {
    for (const auto& p : ps)
        if (p.g == v) return true;
    return false;
}

} // namespace

TEST_CASE("involutory certificates on fixtures") {
    for (const auto& name : small_fixtures()) {
        CAPTURE(name);
        QuasiHopfAlgebra H = fixture(name, G).H;
        InvolutoryCertificate c = is_involutory(H);
        CHECK(c.holds);
        CHECK(c.report.all_passed());
        REQUIRE(c.alpha_inv.has_value());
        REQUIRE(c.beta_inv.has_value());
        CHECK(H.mul(*c.alpha_inv, H.alpha) == H.one());
        CHECK(H.mul(*c.beta_inv, H.beta) == H.one());
        CHECK(H.mul(c.u, c.v) == H.one());
        CHECK(H.mul(c.v, c.u) == H.one());
        CHECK(inverse_antipode_identities(H).all_passed());
    }
}

TEST_CASE("involutory data of H(2)") {
    QuasiHopfAlgebra H = h2(G);
    InvolutoryCertificate c = is_involutory(H);
    CHECK(c.u == H.e(1));
    CHECK(c.v == H.e(1));
    CHECK(*c.alpha_inv == H.e(1));
    CHECK(*c.beta_inv == H.one());
}

TEST_CASE("altered alpha breaks involutivity") {
    QuasiHopfAlgebra H = h2(G);
    H.alpha = vscale(Scalar(G, 2), H.alpha);
    CHECK_FALSE(is_involutory(H).holds);
    CHECK(kind_of([&] { inverse_antipode_identities(H); }) == ErrorKind::NotInvolutory);
    CHECK(kind_of([&] { double_involutivity_condition(H); }) == ErrorKind::NotInvolutory);
}

TEST_CASE("pivotal elements of H(2) against a brute-force oracle") {
    QuasiHopfAlgebra H = h2(G);
    std::vector<Scalar> grid;
    for (int n = -4; n <= 4; ++n) grid.push_back(q(G, n, 2));
    grid.push_back(gi(0, 1));
    grid.push_back(gi(0, -1));
    std::vector<Vec> found;
    for (const auto& a : grid)
        for (const auto& b : grid) {
            Vec x = lin(H, a, b);
            bool o = oracle_pivotal_h2(H, x);
            CHECK(o == certify_pivotal(H, x).all_passed());
            if (o) found.push_back(x);
        }
    REQUIRE(found.size() == 2);
    std::vector<PivotalElement> ps = pivotal_elements(H);
    REQUIRE(ps.size() == 2);
    for (const auto& x : found) CHECK(contains_vec(ps, x));
    CHECK(contains_vec(ps, H.one()));
    CHECK(contains_vec(ps, H.e(1)));
    for (const auto& p : ps) {
        CHECK(p.certified.all_passed());
        CHECK(H.mul(p.g, p.g_inv) == H.one());
    }
    InvolutoryCertificate c = is_involutory(H);
    CHECK(contains_vec(ps, c.v));
}

TEST_CASE("pivotal elements of k[C2]") {
    QuasiHopfAlgebra H = fixture("c2", G).H;
    std::vector<PivotalElement> ps = pivotal_elements(H);
    REQUIRE(ps.size() == 2);
    CHECK(contains_vec(ps, H.one()));
    CHECK(contains_vec(ps, H.e(1)));
}

TEST_CASE("pivotal search refuses large solution spaces") {
    for (const auto& name : {"klein", "klein_x", "c4"}) {
        QuasiHopfAlgebra H = fixture(name, G).H;
        CHECK(kind_of([&] { pivotal_elements(H); }) == ErrorKind::SolutionSpaceTooLarge);
    }
    QuasiHopfAlgebra H = fixture("klein_x", G).H;
    CHECK(certify_pivotal(H, is_involutory(H).v).all_passed());
}

TEST_CASE("categorical dimensions on H(2)") {
    QuasiHopfAlgebra H = h2(G);
    std::vector<HModule> mods = {trivial_module(H), regular_module(H), character_module(H, {Scalar(G, 1), Scalar(G, 1)}),
                                 character_module(H, {Scalar(G, 1), Scalar(G, -1)})};
    const std::vector<int> dim_one = {1, 0, 1, -1}, dim_g = {1, 2, 1, 1};
    for (std::size_t i = 0; i < mods.size(); ++i) {
        CAPTURE(i);
        CategoricalDimension d1 = categorical_dimension(H, H.one(), mods[i]);
        CategoricalDimension dg = categorical_dimension(H, H.e(1), mods[i]);
        CHECK(d1.agree());
        CHECK(dg.agree());
        CHECK(d1.first == Scalar(G, dim_one[i]));
        CHECK(dg.first == Scalar(G, dim_g[i]));
        CHECK(dg.first == Scalar(G, mods[i].dim));
    }
}

TEST_CASE("pivotal element from the integral") {
    for (const auto& name : {"h2", "c2", "klein_x", "c3"}) {
        CAPTURE(name);
        QuasiHopfAlgebra H = fixture(name, G).H;
        IntegralPivotal p = pivotal_from_integral(H);
        CHECK(certify_pivotal(H, p.g).all_passed());
        REQUIRE(p.equals_beta_S_alpha.has_value());
        CHECK(*p.equals_beta_S_alpha);
    }
    QuasiHopfAlgebra F2 = fixture("c2", FieldSpec::prime(2)).H;
    CHECK(kind_of([&] { pivotal_from_integral(F2); }) == ErrorKind::NoNormalizedIntegral);
}

TEST_CASE("trace operator") {
    for (const auto& name : small_fixtures()) {
        CAPTURE(name);
        QuasiHopfAlgebra H = fixture(name, G).H;
        CHECK(trace_operator(H) == Scalar(G, H.dim()));
    }
}

TEST_CASE("double involutivity") {
    for (const auto& name : {"h2", "c2", "klein_x", "c3"}) {
        CAPTURE(name);
        QuasiHopfAlgebra H = fixture(name, G).H;
        CHECK(double_involutivity_condition(H).all_passed());
        QuantumDouble Q = quantum_double(H);
        CHECK(involutory_double_theorem(H, &Q).all_passed());
        CHECK(is_involutory(Q.D).holds);
    }
}
