#include "qhopf/involutory_pivotal.hpp"

#include <array>

namespace qhopf {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

bool vcmp(const QuasiHopfAlgebra& H, CheckScope& sc, const std::vector<int>& basis, const Vec& l, const Vec& r) {
    if (l == r) return false;
    return sc.fail({basis, H.show(l), H.show(r)});
}

Vec S2(const QuasiHopfAlgebra& H, const Vec& h) { return H.antipode(H.antipode(h)); }

// (S (x) S)(f_21^-1) f
Tensor pivotal_defect_factor(const QuasiHopfAlgebra& H, const DrinfeldTwist& tw) {
    Tensor s = H.apply(tw.f_inv.permuted({1, 0}), {LegOp::lin(H.S), LegOp::lin(H.S)});
    return s * tw.f;
}

} // namespace

InvolutoryCertificate is_involutory(const QuasiHopfAlgebra& H) {
    InvolutoryCertificate c;
    c.u = H.mul(H.antipode(H.beta), H.alpha);
    c.v = H.mul(H.beta, H.antipode(H.alpha));
    VerificationReport& rep = c.report;
    {
        CheckScope sc(rep, "involutory.antipode_square", "S^2(h) = S(beta) alpha h beta S(alpha)");
        bool ok = true;
        for (int i = 0; i < H.dim(); ++i) {
            Vec l = S2(H, H.e(i));
            Vec r = H.mul({c.u, H.e(i), c.v});
            if (l != r) {
                ok = false;
                if (sc.fail({{i}, H.show(l), H.show(r)})) break;
            }
        }
        c.holds = ok;
    }
    if (!c.holds) return c;
    {
        CheckScope sc(rep, "involutory.uv_inverse", "S(beta) alpha beta S(alpha) = beta S(alpha) S(beta) alpha = 1");
        if (!vcmp(H, sc, {0}, H.mul(c.u, c.v), H.one())) vcmp(H, sc, {1}, H.mul(c.v, c.u), H.one());
    }
    {
        CheckScope sc(rep, "involutory.second_form", "beta S(alpha) S^2(h) S(beta) alpha = h");
        for (int i = 0; i < H.dim(); ++i)
            if (vcmp(H, sc, {i}, H.mul({c.v, S2(H, H.e(i)), c.u}), H.e(i))) break;
    }
    const Vec ab = H.mul(H.alpha, H.beta), ba = H.mul(H.beta, H.alpha);
    {
        CheckScope sc(rep, "involutory.alpha_inverse", "alpha^-1 = S^-1(alpha beta) beta = beta S(beta alpha)");
        Vec a1 = H.mul(H.antipode_inv(ab), H.beta);
        Vec a2 = H.mul(H.beta, H.antipode(ba));
        bool stop = vcmp(H, sc, {0}, a1, a2);
        if (!stop) stop = vcmp(H, sc, {1}, H.mul(H.alpha, a1), H.one());
        if (!stop) stop = vcmp(H, sc, {2}, H.mul(a1, H.alpha), H.one());
        if (!stop) c.alpha_inv = a1;
    }
    {
        CheckScope sc(rep, "involutory.beta_inverse", "beta^-1 = S(beta alpha) alpha = alpha S^-1(alpha beta)");
        Vec b1 = H.mul(H.antipode(ba), H.alpha);
        Vec b2 = H.mul(H.alpha, H.antipode_inv(ab));
        bool stop = vcmp(H, sc, {0}, b1, b2);
        if (!stop) stop = vcmp(H, sc, {1}, H.mul(H.beta, b1), H.one());
        if (!stop) stop = vcmp(H, sc, {2}, H.mul(b1, H.beta), H.one());
        if (!stop) c.beta_inv = b1;
    }
    return c;
}

VerificationReport inverse_antipode_identities(const QuasiHopfAlgebra& H) {
    InvolutoryCertificate c = is_involutory(H);
    if (!c.holds) throw Error(ErrorKind::NotInvolutory, "S^2 is not conjugation by S(beta) alpha");
    if (!c.alpha_inv || !c.beta_inv) throw Error(ErrorKind::InternalInconsistency, "alpha or beta not invertible");
    VerificationReport rep;
    const Matrix& S = H.S;
    {
        CheckScope sc(rep, "involutory.beta_inverse_antipode", "S(h_2) beta^-1 h_1 = eps(h) beta^-1");
        for (int i = 0; i < H.dim(); ++i) {
            Tensor d = H.delta_basis(i);
            Vec l = contract(H.alg, {&d}, {{M(S, {L(0, 2)}), K(*c.beta_inv), L(0, 1)}}).as_vec();
            if (vcmp(H, sc, {i}, l, vscale(H.co.counit[sz(i)], *c.beta_inv))) break;
        }
    }
    {
        CheckScope sc(rep, "involutory.alpha_inverse_antipode", "h_2 alpha^-1 S(h_1) = eps(h) alpha^-1");
        for (int i = 0; i < H.dim(); ++i) {
            Tensor d = H.delta_basis(i);
            Vec l = contract(H.alg, {&d}, {{L(0, 2), K(*c.alpha_inv), M(S, {L(0, 1)})}}).as_vec();
            if (vcmp(H, sc, {i}, l, vscale(H.co.counit[sz(i)], *c.alpha_inv))) break;
        }
    }
    return rep;
}

VerificationReport certify_pivotal(const QuasiHopfAlgebra& H, const Vec& g) {
    VerificationReport rep;
    {
        CheckScope sc(rep, "pivotal.inner", "g S^2(h) = h g");
        for (int i = 0; i < H.dim(); ++i)
            if (vcmp(H, sc, {i}, H.mul(g, S2(H, H.e(i))), H.mul(H.e(i), g))) break;
    }
    {
        CheckScope sc(rep, "pivotal.invertible", "g g^-1 = g^-1 g = 1");
        try {
            H.inverse(g);
        } catch (const Error& e) {
            sc.fail({{}, H.show(g), e.what()});
        }
    }
    {
        CheckScope sc(rep, "pivotal.coproduct", "Delta(g) = (g (x) g)(S (x) S)(f_21^-1) f");
        DrinfeldTwist tw = drinfeld_twist(H);
        Tensor r = H.t({g, g}) * pivotal_defect_factor(H, tw);
        Tensor l = H.delta(g);
        if (l != r) sc.fail({{}, H.show(l), H.show(r)});
    }
    {
        CheckScope sc(rep, "pivotal.counit", "eps(g) = 1");
        Scalar e = H.eps(g);
        if (!e.is_one()) sc.fail({{}, format(e), "1"});
    }
    return rep;
}

std::vector<PivotalElement> pivotal_elements(const QuasiHopfAlgebra& H) {
    const FieldSpec& f = H.field();
    const int n = H.dim();
    // linear part: g S^2(e_b) - e_b g = 0
    RowReducer lin(f, sz(n));
    for (int b = 0; b < n; ++b) {
        Vec s2 = S2(H, H.e(b));
        std::vector<Vec> rows(sz(n), zero_vec(f, sz(n)));
        for (int k = 0; k < n; ++k) {
            Vec d = vsub(H.mul(H.e(k), s2), H.mul(H.e(b), H.e(k)));
            for (int c = 0; c < n; ++c) rows[sz(c)][sz(k)] = d[sz(c)];
        }
        for (auto& r : rows)
            if (!is_zero_vec(r)) lin.add_equation(r);
    }
    std::vector<Vec> space = lin.solve().kernel;
    if (space.size() > 2)
        throw Error(ErrorKind::SolutionSpaceTooLarge, "g S^2(h) = h g has a solution space of dimension " +
                                                          std::to_string(space.size()));
    std::vector<PivotalElement> out;
    if (space.empty()) return out;

    // eps(g) = 1 is forced; it cuts the space to an affine line or point g = P + s Q.
    RowReducer eq(f, space.size());
    Vec row;
    for (const auto& v : space) row.push_back(H.eps(v));
    eq.add_equation(row, Scalar::one(f));
    SolutionSet s = eq.solve();
    if (!s.consistent) return out;
    auto combine = [&](const Vec& coeffs) {
        Vec g = H.zero();
        for (std::size_t k = 0; k < space.size(); ++k) g = vadd(g, vscale(coeffs[k], space[k]));
        return g;
    };
    Vec P = combine(s.particular);
    std::optional<Vec> Q;
    if (!s.kernel.empty()) Q = combine(s.kernel[0]);

    DrinfeldTwist tw = drinfeld_twist(H);
    Tensor C = pivotal_defect_factor(H, tw);
    auto defect = [&](const Vec& g) { return H.delta(g) - H.t({g, g}) * C; };

    std::vector<Vec> cands;
    if (!Q) {
        cands.push_back(P);
    } else {
        Scalar half = Scalar::from_ratio(f, 1, 2);
        auto at = [&](std::int64_t t) { return defect(vadd(P, vscale(Scalar(f, t), *Q))); };
        Tensor d0 = at(0), d1 = at(1), d2 = at(2);
        Tensor c2 = half * (d2 - Scalar(f, 2) * d1 + d0);
        Tensor c1 = d1 - d0 - c2;
        std::optional<std::array<Scalar, 3>> quad;
        std::optional<std::array<Scalar, 2>> linear;
        for (std::size_t k = 0; k < c2.size(); ++k) {
            if (!c2.at(k).is_zero()) {
                quad = std::array<Scalar, 3>{d0.at(k), c1.at(k), c2.at(k)};
                break;
            }
            if (!linear && !c1.at(k).is_zero()) linear = std::array<Scalar, 2>{d0.at(k), c1.at(k)};
        }
        std::vector<Scalar> roots;
        if (quad) {
            const auto& [a0, a1, a2] = *quad;
            auto sq = sqrt_exact(a1 * a1 - Scalar(f, 4) * a2 * a0);
            if (sq) {
                roots.push_back((-a1 + *sq) / (Scalar(f, 2) * a2));
                if (!sq->is_zero()) roots.push_back((-a1 - *sq) / (Scalar(f, 2) * a2));
            }
        } else if (linear) {
            roots.push_back(-(*linear)[0] / (*linear)[1]);
        } else if (d0.nnz() == 0) {
            throw Error(ErrorKind::SolutionSpaceTooLarge, "a one-parameter family of pivotal elements");
        }
        for (const auto& t : roots) cands.push_back(vadd(P, vscale(t, *Q)));
    }
    for (const Vec& g : cands) {
        if (defect(g).nnz() != 0) continue;
        VerificationReport rep = certify_pivotal(H, g);
        if (!rep.all_passed()) continue;
        out.push_back({g, H.inverse(g), rep});
    }
    return out;
}

IntegralPivotal pivotal_from_integral(const QuasiHopfAlgebra& H) {
    IntegralInfo ii = integrals(H);
    if (!ii.normalized) throw Error(ErrorKind::NoNormalizedIntegral, "no two-sided integral with eps = 1");
    PQElements pq = pq_elements(H);
    Tensor dl = H.delta(*ii.normalized);
    IntegralPivotal out;
    out.g = contract(H.alg, {&pq.qR, &dl, &pq.pR},
                     {{L(0, 2), L(1, 2), L(2, 2), M(H.S, {L(0, 1), L(1, 1), L(2, 1)})}})
                .as_vec();
    if (is_involutory(H).holds) out.equals_beta_S_alpha = out.g == H.mul(H.beta, H.antipode(H.alpha));
    return out;
}

CategoricalDimension categorical_dimension(const QuasiHopfAlgebra& H, const Vec& g, const HModule& M) {
    Vec first = H.mul({H.inverse(g), H.beta, H.antipode(H.alpha)});
    Vec second = H.mul({g, H.antipode(H.beta), H.alpha});
    auto tr = [&](const Vec& h) {
        Matrix m = M.act(h);
        Scalar t = Scalar::zero(H.field());
        for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
        return t;
    };
    return {tr(first), tr(second)};
}

Scalar trace_operator(const QuasiHopfAlgebra& H) {
    Vec u = H.mul(H.antipode(H.beta), H.alpha);
    Vec v = H.mul(H.beta, H.antipode(H.alpha));
    Scalar t = Scalar::zero(H.field());
    for (int i = 0; i < H.dim(); ++i) t += H.antipode_inv(H.antipode_inv(H.mul({u, H.e(i), v})))[sz(i)];
    return t;
}

VerificationReport double_involutivity_condition(const QuasiHopfAlgebra& H) {
    InvolutoryCertificate c = is_involutory(H);
    if (!c.holds) throw Error(ErrorKind::NotInvolutory, "S^2 is not conjugation by S(beta) alpha");
    VerificationReport rep;
    CheckScope sc(rep, "double.condition", "Delta(S(beta) alpha) = f^-1 (S(x)S)(f_21)(S(beta) alpha (x) S(beta) alpha)");
    DrinfeldTwist tw = drinfeld_twist(H);
    Tensor r = tw.f_inv * H.apply(tw.f.permuted({1, 0}), {LegOp::lin(H.S), LegOp::lin(H.S)}) * H.t({c.u, c.u});
    Tensor l = H.delta(c.u);
    if (l != r) sc.fail({{}, H.show(l), H.show(r)});
    return rep;
}

VerificationReport involutory_double_theorem(const QuasiHopfAlgebra& H, const QuantumDouble* D) {
    VerificationReport rep = double_involutivity_condition(H);
    if (!rep.all_passed()) return rep;
    std::optional<QuantumDouble> own;
    if (!D) {
        own = quantum_double(H);
        D = &*own;
    }
    InvolutoryCertificate c = is_involutory(D->D);
    rep.merge(c.report, "double");
    return rep;
}

} // namespace qhopf
