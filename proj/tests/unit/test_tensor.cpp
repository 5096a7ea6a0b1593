#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support.hpp"

using namespace qhopf;
using namespace qhopf::testing;

namespace {

const FieldSpec G = FieldSpec::gaussian();

// Independent product in A^{(x)k} straight from the structure constants.
Tensor naive_mul(const Tensor& a, const Tensor& b) {
    const AlgebraData& A = *a.algebra();
    const std::vector<Scalar> m = dense_mult(A);
    const std::size_t n = static_cast<std::size_t>(A.n);
    Tensor r(a.algebra(), a.arity());
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (a.at(x).is_zero()) continue;
        auto ix = a.unflatten(x);
        for (std::size_t y = 0; y < b.size(); ++y) {
            if (b.at(y).is_zero()) continue;
            auto iy = b.unflatten(y);
            for (std::size_t z = 0; z < r.size(); ++z) {
                auto iz = r.unflatten(z);
                Scalar c = a.at(x) * b.at(y);
                for (int l = 0; l < a.arity() && !c.is_zero(); ++l)
                    c = c * m[(static_cast<std::size_t>(ix[l]) * n + static_cast<std::size_t>(iy[l])) * n +
                              static_cast<std::size_t>(iz[l])];
                r.at(z) += c;
            }
        }
    }
    return r;
}

Vec pm(const QuasiHopfAlgebra& H) { return vscale(Scalar::from_ratio(G, 1, 2), vsub(H.one(), H.e(1))); }
Vec pp(const QuasiHopfAlgebra& H) { return vscale(Scalar::from_ratio(G, 1, 2), vadd(H.one(), H.e(1))); }

} // namespace

TEST_CASE("products in tensor powers of H(2)") {
    QuasiHopfAlgebra H = h2(G);
    std::mt19937 rng(3);
    Tensor a = random_tensor(H.alg, 2, rng);
    CHECK(H.unit(2) * a == a);
    CHECK(a * H.unit(2) == a);
    Tensor p = H.t({pm(H), pm(H)});
    CHECK(p * p == p);
    CHECK(H.phi * H.phi_inv == H.unit(3));
    CHECK(H.phi == H.phi_inv);
    Tensor expected = H.unit(3) - Scalar(G, 2) * H.t({pm(H), pm(H), pm(H)});
    CHECK(H.phi == expected);
}

TEST_CASE("arity mismatch is an error") {
    QuasiHopfAlgebra H = h2(G);
    CHECK_THROWS_AS(H.unit(2) * H.unit(3), Error);
}

TEST_CASE("tensor_mul agrees with the structure-constant oracle") {
    std::mt19937 rng(7);
    for (const auto& name : {"h2", "klein_xy", "d_h2", "c3"}) {
        QuasiHopfAlgebra H = fixture(name, G).H;
        for (int k = 1; k <= 3; ++k) {
            Tensor a = random_tensor(H.alg, k, rng), b = random_tensor(H.alg, k, rng);
            CHECK(a * b == naive_mul(a, b));
            // sparse left factor
            Tensor s = H.t(std::vector<Vec>(static_cast<std::size_t>(k), H.e(H.dim() - 1)));
            CHECK(s * b == naive_mul(s, b));
            CHECK(b * s == naive_mul(b, s));
        }
    }
    QuasiHopfAlgebra D = quantum_double(fixture("klein_x", G).H).D;
    Tensor a = random_tensor(D.alg, 2, rng), b = random_tensor(D.alg, 2, rng);
    CHECK(a * b == naive_mul(a, b));
}

TEST_CASE("tensor_mul is associative and unital on every fixture") {
    std::mt19937 rng(17);
    for (const auto& name : small_fixtures()) {
        QuasiHopfAlgebra H = fixture(name, G).H;
        for (int k = 1; k <= (H.dim() > 4 ? 2 : 3); ++k) {
            Tensor a = random_tensor(H.alg, k, rng), b = random_tensor(H.alg, k, rng), c = random_tensor(H.alg, k, rng);
            CHECK_MESSAGE((a * b) * c == a * (b * c), name);
            CHECK(H.unit(k) * a == a);
            CHECK(a * H.unit(k) == a);
        }
    }
}

TEST_CASE("leg-wise application") {
    QuasiHopfAlgebra H = h2(G);
    const LegOp I = LegOp::id(), E = LegOp::eps();
    CHECK(H.apply(H.phi, {I, E, I}) == H.unit(2));
    CHECK(H.apply(H.phi, {E, I, I}) == H.unit(2));
    CHECK(H.apply(H.phi, {I, I, E}) == H.unit(2));
    Tensor f = H.t({H.e(1), pm(H)}) + H.t({H.one(), pp(H)});
    Tensor flipped = H.t({pm(H), H.e(1)}) + H.t({pp(H), H.one()});
    CHECK(f.permuted({1, 0}) == flipped);
}

TEST_CASE("two counits at once equal two counits in sequence") {
    std::mt19937 rng(23);
    const LegOp I = LegOp::id(), E = LegOp::eps(), D = LegOp::delta();
    for (const auto& name : {"h2", "klein_x", "d_h2"}) {
        QuasiHopfAlgebra H = fixture(name, G).H;
        for (int t = 0; t < 3; ++t) {
            Tensor x = random_tensor(H.alg, 3, rng);
            Tensor both = H.apply(x, {E, I, E});
            Tensor seq = H.on_leg(H.on_leg(x, 2, E), 0, E);
            CHECK(both == seq);
            Tensor mixed = H.apply(x, {D, I, LegOp::lin(H.S)});
            CHECK(mixed == H.on_leg(H.on_leg(x, 2, LegOp::lin(H.S)), 0, D));
            CHECK(H.apply(H.apply(x, {D, I, I}), {E, I, I, I}) == x);
        }
    }
}

TEST_CASE("inverses in tensor powers") {
    QuasiHopfAlgebra H = h2(G);
    CHECK(invert_in_tensor_power(H.unit(2)) == H.unit(2));
    CHECK(invert_in_tensor_power(H.phi) == H.phi);
    CHECK(invert_in_tensor_power(h2_rmatrix(H, 1).R) == h2_rmatrix(H, -1).R);
    Tensor p = H.t({pm(H), pm(H)});
    try {
        invert_in_tensor_power(p);
        FAIL("idempotent inverted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInvertible);
    }
    std::mt19937 rng(29);
    for (const auto& name : {"h2", "klein_x_y", "d_h2"}) {
        QuasiHopfAlgebra K = fixture(name, G).H;
        for (int t = 0; t < 4; ++t) {
            Tensor a = random_tensor(K.alg, 2, rng);
            try {
                Tensor b = invert_in_tensor_power(a);
                CHECK(a * b == K.unit(2));
                CHECK(b * a == K.unit(2));
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::NotInvertible);
            }
        }
    }
}

TEST_CASE("linear solves") {
    Matrix I = Matrix::identity(G, 3);
    Vec b = {Scalar(G, 1), Scalar(G, 2), Scalar(G, 3)};
    SolutionSet s = solve_linear(I, b);
    CHECK(s.consistent);
    CHECK(s.particular == b);
    CHECK(s.kernel.empty());

    Matrix Z(G, 1, 1);
    SolutionSet z = solve_linear(Z, {Scalar(G, 0)});
    CHECK(z.consistent);
    CHECK(z.kernel.size() == 1);
    CHECK_FALSE(solve_linear(Z, {Scalar(G, 1)}).consistent);

    // left integrals of H(2): (L_h - eps(h)) t = 0
    QuasiHopfAlgebra H = h2(G);
    Matrix A(G, 4, 2);
    for (int h = 0; h < 2; ++h)
        for (int j = 0; j < 2; ++j) {
            Vec col = vsub(H.mul(H.e(h), H.e(j)), vscale(H.eps(H.e(h)), H.e(j)));
            for (int i = 0; i < 2; ++i) A(static_cast<std::size_t>(h * 2 + i), static_cast<std::size_t>(j)) = col[static_cast<std::size_t>(i)];
        }
    auto ker = kernel(A);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == ker[0][1]);
    CHECK_FALSE(ker[0][0].is_zero());
}

TEST_CASE("solve_linear returns genuine solutions on random systems") {
    std::mt19937 rng(31);
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::gaussian(), FieldSpec::prime(7)})
        for (int t = 0; t < 30; ++t) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            Matrix A(f, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) A(i, j) = (rng() % 3 == 0) ? Scalar::zero(f) : random_scalar(f, rng);
            Vec x0 = random_vec(f, c, rng);
            Vec b = A.apply(x0);
            SolutionSet s = solve_linear(A, b);
            REQUIRE(s.consistent);
            CHECK(A.apply(s.particular) == b);
            for (const auto& v : s.kernel) CHECK(is_zero_vec(A.apply(v)));
            CHECK(s.kernel.size() + rank(A) == c);
            if (auto inv = inverse(A)) CHECK((A * *inv).is_identity());
        }
}
