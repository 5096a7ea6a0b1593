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

// dim Hom_H(M, N) from the linear system rho_N(b) X = X rho_M(b) in the entries of X.
std::size_t oracle_hom_dim(const QuasiHopfAlgebra& H, const HModule& M, const HModule& N) {
    const std::size_t m = static_cast<std::size_t>(M.dim), n = static_cast<std::size_t>(N.dim);
    const std::size_t unknowns = n * m;
    Matrix sys(H.field(), static_cast<std::size_t>(H.dim()) * n * m, unknowns);
    std::size_t row = 0;
    for (int b = 0; b < H.dim(); ++b)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j, ++row) {
                for (std::size_t k = 0; k < n; ++k) sys(row, k * m + j) += N.rho[static_cast<std::size_t>(b)](i, k);
                for (std::size_t k = 0; k < m; ++k) sys(row, i * m + k) -= M.rho[static_cast<std::size_t>(b)](k, j);
            }
    return unknowns - rank(sys);
}

Scalar trace(const Matrix& a) {
    Scalar s = Scalar::zero(a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
    return s;
}

std::vector<HModule> sample_modules(const QuasiHopfAlgebra& H) {
    std::vector<HModule> out = {trivial_module(H), regular_module(H)};
    if (auto g = grouplike_generators(H))
        for (const auto& chi : characters(H, g->gens, g->orders)) out.push_back(character_module(H, chi));
    return out;
}

} // namespace

TEST_CASE("module constructions satisfy the module axioms") {
    for (const auto& name : {"h2", "klein_x", "c2", "c3", "c4", "klein_xy"}) {
        CAPTURE(name);
        QuasiHopfAlgebra H = fixture(name, G).H;
        for (const auto& M : sample_modules(H)) {
            CHECK(verify_module(H, M).all_passed());
            HModule D = dual_module(H, M);
            CHECK(D.dim == M.dim);
            CHECK(verify_module(H, D).all_passed());
            HModule T = tensor_module(H, M, trivial_module(H));
            CHECK(verify_module(H, T).all_passed());
            CHECK(hom_space(H, M, T).basis.size() == oracle_hom_dim(H, M, T));
        }
    }
}

TEST_CASE("a non-module is rejected") {
    QuasiHopfAlgebra H = h2(G);
    HModule M = trivial_module(H);
    M.rho[1](0, 0) = Scalar(G, 2);
    CHECK_FALSE(verify_module(H, M).all_passed());
}

TEST_CASE("characters against counting homomorphisms") {
    struct Case {
        const char* name;
        FieldSpec f;
        std::size_t expected;
    };
    // C_n -> k^x: as many as n-th roots of unity in k
    std::vector<Case> cases = {{"c2", G, 2}, {"c3", G, 1}, {"c4", G, 4}, {"c2", FieldSpec::rationals(), 2},
                               {"c3", FieldSpec::prime(7), 3}, {"c4", FieldSpec::prime(5), 4}, {"klein", G, 4}};
    for (const auto& c : cases) {
        CAPTURE(c.name);
        QuasiHopfAlgebra H = fixture(c.name, c.f).H;
        auto g = grouplike_generators(H);
        REQUIRE(g.has_value());
        std::vector<Vec> chis = characters(H, g->gens, g->orders);
        CHECK(chis.size() == c.expected);
        for (const auto& chi : chis) {
            CHECK(chi[0] == Scalar::one(c.f));
            for (int a = 0; a < H.dim(); ++a)
                for (int b = 0; b < H.dim(); ++b) {
                    Vec ab = H.mul(H.e(a), H.e(b));
                    Scalar v = Scalar::zero(c.f);
                    for (int k = 0; k < H.dim(); ++k) v += ab[static_cast<std::size_t>(k)] * chi[static_cast<std::size_t>(k)];
                    CHECK(v == chi[static_cast<std::size_t>(a)] * chi[static_cast<std::size_t>(b)]);
                }
        }
    }
    CHECK_FALSE(grouplike_generators(fixture("d_h2", G).H).has_value());
}

TEST_CASE("roots of unity") {
    CHECK(roots_of_unity(G, 4).size() == 4);
    CHECK(roots_of_unity(FieldSpec::rationals(), 4).size() == 2);
    CHECK(roots_of_unity(FieldSpec::rationals(), 3).size() == 1);
    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
        FieldSpec f = FieldSpec::prime(p);
        for (int d = 1; d <= 6; ++d) {
            std::size_t count = 0;
            for (std::uint64_t z = 1; z < p; ++z) {
                std::uint64_t acc = 1;
                for (int k = 0; k < d; ++k) acc = acc * z % p;
                if (acc == 1) ++count;
            }
            CHECK(roots_of_unity(f, d).size() == count);
        }
    }
    CHECK(kind_of([] { roots_of_unity(FieldSpec::prime(2147483647), 2); }) == ErrorKind::FieldUnsuitable);
}

TEST_CASE("hom spaces") {
    QuasiHopfAlgebra H = h2(G);
    HModule triv = trivial_module(H), reg = regular_module(H);
    HModule plus = character_module(H, {Scalar(G, 1), Scalar(G, 1)});
    HModule minus = character_module(H, {Scalar(G, 1), Scalar(G, -1)});
    CHECK(hom_space(H, reg, reg).basis.size() == 2);
    CHECK(hom_space(H, triv, reg).basis.size() == 1);
    CHECK(hom_space(H, plus, minus).basis.empty());
    CHECK(hom_space(H, minus, minus).basis.size() == 1);
    HModule mm = tensor_module(H, minus, minus);
    CHECK(hom_space(H, triv, mm).basis.size() == 1);
    for (const auto& name : {"h2", "klein_x", "c3"}) {
        QuasiHopfAlgebra K = fixture(name, G).H;
        for (const auto& M : sample_modules(K))
            for (const auto& N : sample_modules(K)) {
                HomSpace hs = hom_space(K, M, N);
                CHECK(hs.dims_agree());
                CHECK(hs.basis.size() == oracle_hom_dim(K, M, N));
                for (const auto& X : hs.basis)
                    for (int b = 0; b < K.dim(); ++b)
                        CHECK(N.rho[static_cast<std::size_t>(b)] * X == X * M.rho[static_cast<std::size_t>(b)]);
            }
    }
}

TEST_CASE("evaluation and coevaluation") {
    for (const auto& name : {"h2", "klein_x", "klein_x_y", "c2", "c4"}) {
        CAPTURE(name);
        QuasiHopfAlgebra H = fixture(name, G).H;
        for (const auto& M : sample_modules(H)) {
            EvCoev e = ev_coev(H, M);
            CHECK(e.report.all_passed());
            CHECK(e.ev.cols() == static_cast<std::size_t>(M.dim * M.dim));
            CHECK(e.coev.size() == static_cast<std::size_t>(M.dim * M.dim));
        }
    }
}

TEST_CASE("categorical trace on group algebras is the ordinary trace") {
    std::mt19937 rng(7);
    for (const auto& name : {"c2", "c3", "klein"}) {
        QuasiHopfAlgebra H = fixture(name, G).H;
        HModule M = regular_module(H);
        for (int k = 0; k < 4; ++k) {
            Matrix a(G, static_cast<std::size_t>(M.dim), static_cast<std::size_t>(M.dim));
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = random_scalar(G, rng);
            CHECK(categorical_trace(H, M, a) == trace(a));
        }
    }
}

TEST_CASE("the isomorphism mu") {
    for (const auto& name : small_fixtures()) {
        CAPTURE(name);
        QuasiHopfAlgebra H = fixture(name, G).H;
        MuIso m = mu_isomorphism(H);
        CHECK(m.report.all_passed());
        CHECK((m.mu * m.mu_inv).is_identity());
        CHECK((m.mu_inv * m.mu).is_identity());
    }
}

TEST_CASE("divisibility of dimensions") {
    QuasiHopfAlgebra H = h2(G);
    DivisibilityReport r = divisibility_report(H, {{"trivial", trivial_module(H), true}, {"regular", regular_module(H), true}});
    CHECK(r.semisimple);
    CHECK(r.involutory);
    CHECK(r.characteristic == 0);
    CHECK(r.report.all_passed());
    REQUIRE(r.entries.size() == 2);
    CHECK(r.entries[0].absolutely_simple);
    CHECK_FALSE(r.entries[1].absolutely_simple);
    CHECK(r.entries[1].end_dim == 2);

    FieldSpec F3 = FieldSpec::prime(3);
    QuasiHopfAlgebra C3 = fixture("c3", F3).H;
    DivisibilityReport s = divisibility_report(C3, {{"trivial", trivial_module(C3), false}, {"regular", regular_module(C3), true}});
    CHECK_FALSE(s.semisimple);
    CHECK(s.characteristic == 3);
    CHECK(s.entries[1].char_divides);
    CHECK(s.report.all_passed());

    // a projective module of dimension prime to the characteristic violates the condition
    DivisibilityReport bad = divisibility_report(C3, {{"trivial", trivial_module(C3), true}});
    CHECK_FALSE(bad.report.all_passed());

    FieldSpec F5 = FieldSpec::prime(5);
    QuasiHopfAlgebra C = fixture("c3", F5).H;
    DivisibilityReport t = divisibility_report(C, {{"trivial", trivial_module(C), true}});
    CHECK(t.semisimple);
    CHECK(t.report.all_passed());
}
