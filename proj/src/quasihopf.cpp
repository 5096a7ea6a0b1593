#include "qhopf/quasihopf.hpp"

#include <sstream>

namespace qhopf {

namespace {

std::string scalar_str(const Scalar& s) { return format(s); }

} // namespace

Vec QuasiHopfAlgebra::mul(std::initializer_list<Vec> factors) const {
    Vec cur = one();
    for (const auto& f : factors) cur = mul(cur, f);
    return cur;
}

Tensor QuasiHopfAlgebra::delta_basis(int i) const { return apply(t(e(i)), {LegOp::delta()}); }

Tensor QuasiHopfAlgebra::delta(const Vec& v) const { return apply(t(v), {LegOp::delta()}); }

Vec QuasiHopfAlgebra::inverse(const Vec& v) const { return invert_in_tensor_power(t(v)).as_vec(); }

CoalgebraData coalgebra_from(const FieldSpec& f, int n, const std::vector<Tensor>& deltas, const Vec& counit) {
    CoalgebraData co;
    co.field = f;
    co.n = n;
    co.counit = counit;
    co.comult.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (const auto& t : deltas[static_cast<std::size_t>(i)].terms())
            co.comult[static_cast<std::size_t>(i)].emplace_back(t.idx[0], t.idx[1], t.coef);
    return co;
}

QuasiHopfAlgebra make_quasihopf(AlgebraPtr alg, CoalgebraData co, Tensor phi, std::optional<Tensor> phi_inv,
                                Matrix S, Vec alpha, Vec beta, std::vector<std::string> names) {
    const int n = alg->n;
    auto bad = [](const std::string& m) { throw Error(ErrorKind::InvalidArgument, m); };
    if (co.n != n || static_cast<int>(co.comult.size()) != n || static_cast<int>(co.counit.size()) != n)
        bad("coalgebra dimension differs from algebra dimension");
    if (phi.arity() != 3 || phi.dim() != n) bad("reassociator must be an element of H(x)H(x)H");
    if (static_cast<int>(S.rows()) != n || static_cast<int>(S.cols()) != n) bad("antipode must be an n x n matrix");
    if (static_cast<int>(alpha.size()) != n || static_cast<int>(beta.size()) != n) bad("alpha/beta length");
    if (!(co.field == alg->field) || !(phi.field() == alg->field)) throw Error(ErrorKind::FieldMismatch, "structure over mixed fields");

    QuasiHopfAlgebra H;
    H.alg = alg;
    H.co = std::move(co);
    H.phi = phi.rebound(alg);
    Tensor one3 = Tensor::unit(alg, 3);
    if (phi_inv) {
        Tensor pi = phi_inv->rebound(alg);
        if (H.phi * pi != one3 || pi * H.phi != one3)
            throw Error(ErrorKind::NotInvertible, "declared inverse of the reassociator is not a two-sided inverse");
        H.phi_inv = pi;
    } else {
        H.phi_inv = invert_in_tensor_power(H.phi);
    }
    auto Sinv = inverse(S);
    if (!Sinv) throw Error(ErrorKind::AntipodeNotInvertible, "antipode matrix is singular");
    H.S = std::move(S);
    H.S_inv = std::move(*Sinv);
    H.alpha = std::move(alpha);
    H.beta = std::move(beta);
    if (names.empty())
        for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    H.names = std::move(names);

    Scalar ea = H.eps(H.alpha);
    if (!ea.is_zero() && !ea.is_one()) {
        H.alpha = vscale(ea.inv(), H.alpha);
        H.beta = vscale(ea, H.beta);
        H.notes.push_back("rescaled alpha by 1/" + scalar_str(ea) + " and beta by " + scalar_str(ea) +
                          " so that eps(alpha) = 1");
    }
    return H;
}

bool same_structure(const QuasiHopfAlgebra& a, const QuasiHopfAlgebra& b) { return structure_difference(a, b).empty(); }

std::string structure_difference(const QuasiHopfAlgebra& a, const QuasiHopfAlgebra& b) {
    if (a.dim() != b.dim()) return "dimension";
    if (!(a.field() == b.field())) return "field";
    if (!(a.alg->mult == b.alg->mult)) return "multiplication";
    if (a.alg->unit != b.alg->unit) return "unit";
    for (int i = 0; i < a.dim(); ++i)
        if (a.delta_basis(i) != b.delta_basis(i)) return "comultiplication";
    if (a.co.counit != b.co.counit) return "counit";
    if (a.phi.coeffs() != b.phi.coeffs()) return "reassociator";
    if (a.S != b.S) return "antipode";
    if (a.alpha != b.alpha) return "alpha";
    if (a.beta != b.beta) return "beta";
    return "";
}

// ---------------------------------------------------------------------------

namespace {

struct Checker {
    const QuasiHopfAlgebra& H;
    VerificationReport& rep;
    bool exhaustive;

    // Compares two tensors; records a witness on mismatch and returns true
    // when the scan over basis tuples should stop.
    bool cmp(CheckScope& sc, const std::vector<int>& basis, const Tensor& l, const Tensor& r) const {
        if (l == r) return false;
        return sc.fail({basis, H.show(l), H.show(r)});
    }
};

} // namespace

VerificationReport verify_algebra(const QuasiHopfAlgebra& H, const VerifyOptions& opt) {
    VerificationReport rep;
    Checker c{H, rep, opt.exhaustive};
    const int n = H.dim();
    {
        CheckScope sc(rep, "algebra.associative", "(e_i e_j) e_k = e_i (e_j e_k)", opt.exhaustive);
        bool stop = false;
        for (int i = 0; i < n && !stop; ++i)
            for (int j = 0; j < n && !stop; ++j) {
                Vec ij = H.mul(H.e(i), H.e(j));
                for (int k = 0; k < n && !stop; ++k)
                    stop = c.cmp(sc, {i, j, k}, H.t(H.mul(ij, H.e(k))), H.t(H.mul(H.e(i), H.mul(H.e(j), H.e(k)))));
            }
    }
    {
        CheckScope sc(rep, "algebra.unit", "1 e_i = e_i 1 = e_i", opt.exhaustive);
        bool stop = false;
        for (int i = 0; i < n && !stop; ++i) {
            stop = c.cmp(sc, {i}, H.t(H.mul(H.one(), H.e(i))), H.t(H.e(i)));
            if (!stop) stop = c.cmp(sc, {i}, H.t(H.mul(H.e(i), H.one())), H.t(H.e(i)));
        }
    }
    return rep;
}

VerificationReport verify_quasibialgebra(const QuasiHopfAlgebra& H, const VerifyOptions& opt) {
    VerificationReport rep = verify_algebra(H, opt);
    Checker c{H, rep, opt.exhaustive};
    const int n = H.dim();
    const bool ex = opt.exhaustive;
    const LegOp I = LegOp::id(), D = LegOp::delta(), E = LegOp::eps();

    std::vector<Tensor> dl;
    for (int i = 0; i < n; ++i) dl.push_back(H.delta_basis(i));

    {
        CheckScope sc(rep, "delta.multiplicative", "Delta(e_i e_j) = Delta(e_i) Delta(e_j)", ex);
        bool stop = false;
        for (int i = 0; i < n && !stop; ++i)
            for (int j = 0; j < n && !stop; ++j)
                stop = c.cmp(sc, {i, j}, H.delta(H.mul(H.e(i), H.e(j))), dl[static_cast<std::size_t>(i)] * dl[static_cast<std::size_t>(j)]);
    }
    {
        CheckScope sc(rep, "delta.unital", "Delta(1) = 1(x)1", ex);
        c.cmp(sc, {}, H.delta(H.one()), H.unit(2));
    }
    {
        CheckScope sc(rep, "counit.multiplicative", "eps(e_i e_j) = eps(e_i) eps(e_j)", ex);
        bool stop = false;
        for (int i = 0; i < n && !stop; ++i)
            for (int j = 0; j < n && !stop; ++j) {
                Scalar l = H.eps(H.mul(H.e(i), H.e(j)));
                Scalar r = H.co.counit[static_cast<std::size_t>(i)] * H.co.counit[static_cast<std::size_t>(j)];
                if (l != r) stop = sc.fail({{i, j}, format(l), format(r)});
            }
    }
    {
        CheckScope sc(rep, "counit.unital", "eps(1) = 1", ex);
        Scalar e1 = H.eps(H.one());
        if (!e1.is_one()) sc.fail({{}, format(e1), "1"});
    }
    {
        CheckScope sc(rep, "phi.invertible", "Phi Phi^-1 = Phi^-1 Phi = 1(x)1(x)1", ex);
        Tensor one3 = H.unit(3);
        if (!c.cmp(sc, {0}, H.phi * H.phi_inv, one3)) c.cmp(sc, {1}, H.phi_inv * H.phi, one3);
    }
    {
        CheckScope sc(rep, "quasi_coassociativity",
                      "(id(x)Delta)Delta(h) Phi = Phi (Delta(x)id)Delta(h)", ex);
        bool stop = false;
        for (int i = 0; i < n && !stop; ++i) {
            const Tensor& d = dl[static_cast<std::size_t>(i)];
            Tensor l = H.apply(d, {I, D}) * H.phi;
            Tensor r = H.phi * H.apply(d, {D, I});
            stop = c.cmp(sc, {i}, l, r);
        }
    }
    {
        CheckScope sc(rep, "counit.coproduct", "(id(x)eps)Delta(h) = (eps(x)id)Delta(h) = h", ex);
        bool stop = false;
        for (int i = 0; i < n && !stop; ++i) {
            const Tensor& d = dl[static_cast<std::size_t>(i)];
            stop = c.cmp(sc, {i}, H.apply(d, {I, E}), H.t(H.e(i)));
            if (!stop) stop = c.cmp(sc, {i}, H.apply(d, {E, I}), H.t(H.e(i)));
        }
    }
    {
        CheckScope sc(rep, "pentagon",
                      "(1(x)Phi)(id(x)Delta(x)id)(Phi)(Phi(x)1) = (id(x)id(x)Delta)(Phi)(Delta(x)id(x)id)(Phi)", ex);
        Tensor l = H.phi.embedded(4, {1, 2, 3}) * H.apply(H.phi, {I, D, I}) * H.phi.embedded(4, {0, 1, 2});
        Tensor r = H.apply(H.phi, {I, I, D}) * H.apply(H.phi, {D, I, I});
        c.cmp(sc, {}, l, r);
    }
    {
        CheckScope sc(rep, "phi.normalized", "(id(x)eps(x)id)(Phi) = (eps(x)id(x)id)(Phi) = (id(x)id(x)eps)(Phi) = 1(x)1", ex);
        Tensor one2 = H.unit(2);
        if (!c.cmp(sc, {1}, H.apply(H.phi, {I, E, I}), one2))
            if (!c.cmp(sc, {0}, H.apply(H.phi, {E, I, I}), one2)) c.cmp(sc, {2}, H.apply(H.phi, {I, I, E}), one2);
    }
    return rep;
}

VerificationReport verify_quasihopf(const QuasiHopfAlgebra& H, const VerifyOptions& opt, bool base) {
    VerificationReport rep;
    if (base) rep = verify_quasibialgebra(H, opt);
    Checker c{H, rep, opt.exhaustive};
    const int n = H.dim();
    const bool ex = opt.exhaustive;
    const Matrix& S = H.S;

    {
        CheckScope sc(rep, "antipode.antimultiplicative", "S(e_i e_j) = S(e_j) S(e_i), S(1) = 1", ex);
        bool stop = c.cmp(sc, {}, H.t(H.antipode(H.one())), H.t(H.one()));
        for (int i = 0; i < n && !stop; ++i)
            for (int j = 0; j < n && !stop; ++j)
                stop = c.cmp(sc, {i, j}, H.t(H.antipode(H.mul(H.e(i), H.e(j)))),
                             H.t(H.mul(H.antipode(H.e(j)), H.antipode(H.e(i)))));
    }
    {
        CheckScope sc(rep, "antipode.alpha", "S(h_1) alpha h_2 = eps(h) alpha", ex);
        bool stop = false;
        for (int i = 0; i < n && !stop; ++i) {
            Tensor d = H.delta_basis(i);
            Tensor l = contract(H.alg, {&d}, {{M(S, {L(0, 1)}), K(H.alpha), L(0, 2)}});
            stop = c.cmp(sc, {i}, l, H.t(vscale(H.co.counit[static_cast<std::size_t>(i)], H.alpha)));
        }
    }
    {
        CheckScope sc(rep, "antipode.beta", "h_1 beta S(h_2) = eps(h) beta", ex);
        bool stop = false;
        for (int i = 0; i < n && !stop; ++i) {
            Tensor d = H.delta_basis(i);
            Tensor l = contract(H.alg, {&d}, {{L(0, 1), K(H.beta), M(S, {L(0, 2)})}});
            stop = c.cmp(sc, {i}, l, H.t(vscale(H.co.counit[static_cast<std::size_t>(i)], H.beta)));
        }
    }
    {
        CheckScope sc(rep, "antipode.phi", "X^1 beta S(X^2) alpha X^3 = 1", ex);
        Tensor l = contract(H.alg, {&H.phi}, {{L(0, 1), K(H.beta), M(S, {L(0, 2)}), K(H.alpha), L(0, 3)}});
        c.cmp(sc, {}, l, H.t(H.one()));
    }
    {
        CheckScope sc(rep, "antipode.phi_inv", "S(x^1) alpha x^2 beta S(x^3) = 1", ex);
        Tensor l = contract(H.alg, {&H.phi_inv}, {{M(S, {L(0, 1)}), K(H.alpha), L(0, 2), K(H.beta), M(S, {L(0, 3)})}});
        c.cmp(sc, {}, l, H.t(H.one()));
    }
    {
        CheckScope sc(rep, "antipode.counit", "eps(S(h)) = eps(h)", ex);
        for (int i = 0; i < n; ++i) {
            Scalar l = H.eps(H.antipode(H.e(i)));
            if (l != H.co.counit[static_cast<std::size_t>(i)] &&
                sc.fail({{i}, format(l), format(H.co.counit[static_cast<std::size_t>(i)])}))
                break;
        }
    }
    {
        CheckScope sc(rep, "alpha_beta.normalized", "eps(alpha) = eps(beta) = 1", ex);
        Scalar a = H.eps(H.alpha), b = H.eps(H.beta);
        if (!a.is_one()) sc.fail({{0}, format(a), "1"});
        else if (!b.is_one()) sc.fail({{1}, format(b), "1"});
    }
    for (const auto& note : H.notes) rep.note(note);
    return rep;
}

// ---------------------------------------------------------------------------

TwistData make_twist(const QuasiHopfAlgebra& H, const Tensor& F, std::optional<Tensor> F_inv) {
    if (F.arity() != 2 || F.dim() != H.dim()) throw Error(ErrorKind::InvalidTwist, "a twist is an element of H(x)H");
    Tensor one1 = H.t(H.one());
    if (H.apply(F, {LegOp::eps(), LegOp::id()}) != one1 || H.apply(F, {LegOp::id(), LegOp::eps()}) != one1)
        throw Error(ErrorKind::InvalidTwist, "twist is not counit-normalized: (eps(x)id)(F) = (id(x)eps)(F) = 1 fails");
    Tensor one2 = H.unit(2);
    Tensor Fi;
    if (F_inv) {
        Fi = *F_inv;
        if (F * Fi != one2 || Fi * F != one2) throw Error(ErrorKind::InvalidTwist, "declared twist inverse is not an inverse");
    } else {
        try {
            Fi = invert_in_tensor_power(F);
        } catch (const Error&) {
            throw Error(ErrorKind::InvalidTwist, "twist is not invertible");
        }
    }
    return {F, Fi};
}

DrinfeldTwist drinfeld_twist(const QuasiHopfAlgebra& H) {
    const LegOp I = LegOp::id(), D = LegOp::delta();
    const Matrix& S = H.S;
    DrinfeldTwist out;

    Tensor A = H.phi.embedded(4, {0, 1, 2}) * H.apply(H.phi_inv, {D, I, I});
    Tensor B = H.apply(H.phi, {D, I, I}) * H.phi_inv.embedded(4, {0, 1, 2});
    out.gamma = contract(H.alg, {&A}, {{M(S, {L(0, 2)}), K(H.alpha), L(0, 3)}, {M(S, {L(0, 1)}), K(H.alpha), L(0, 4)}});
    out.delta = contract(H.alg, {&B}, {{L(0, 1), K(H.beta), M(S, {L(0, 4)})}, {L(0, 2), K(H.beta), M(S, {L(0, 3)})}});

    // f = (S(x)S)(Delta^op(x^1)) gamma Delta(x^2 beta S(x^3))
    Tensor w = contract(H.alg, {&H.phi_inv}, {{L(0, 1)}, {L(0, 2), K(H.beta), M(S, {L(0, 3)})}});
    Tensor w4 = H.apply(w, {D, D});
    out.f = contract(H.alg, {&w4, &out.gamma},
                     {{M(S, {L(0, 2)}), L(1, 1), L(0, 3)}, {M(S, {L(0, 1)}), L(1, 2), L(0, 4)}});
    // f^-1 = Delta(S(x^1) alpha x^2) delta (S(x)S)(Delta^cop(x^3))
    Tensor v = contract(H.alg, {&H.phi_inv}, {{M(S, {L(0, 1)}), K(H.alpha), L(0, 2)}, {L(0, 3)}});
    Tensor v4 = H.apply(v, {D, D});
    out.f_inv = contract(H.alg, {&v4, &out.delta},
                         {{L(0, 1), L(1, 1), M(S, {L(0, 4)})}, {L(0, 2), L(1, 2), M(S, {L(0, 3)})}});

    VerificationReport& rep = out.report;
    Checker c{H, rep, false};
    Tensor one2 = H.unit(2);
    {
        CheckScope sc(rep, "twist.inverse", "f f^-1 = f^-1 f = 1(x)1");
        if (!c.cmp(sc, {0}, out.f * out.f_inv, one2)) c.cmp(sc, {1}, out.f_inv * out.f, one2);
    }
    {
        CheckScope sc(rep, "twist.normalized", "(eps(x)id)(f) = (id(x)eps)(f) = 1");
        Tensor one1 = H.t(H.one());
        if (!c.cmp(sc, {0}, H.apply(out.f, {LegOp::eps(), I}), one1)) c.cmp(sc, {1}, H.apply(out.f, {I, LegOp::eps()}), one1);
    }
    {
        CheckScope sc(rep, "twist.anti_coalgebra", "f Delta(S(h)) f^-1 = (S(x)S)(Delta^cop(h))");
        bool stop = false;
        for (int i = 0; i < H.dim() && !stop; ++i) {
            Tensor l = out.f * H.delta(H.antipode(H.e(i))) * out.f_inv;
            Tensor r = H.apply(H.delta_basis(i).permuted({1, 0}), {LegOp::lin(S), LegOp::lin(S)});
            stop = c.cmp(sc, {i}, l, r);
        }
    }
    {
        CheckScope sc(rep, "twist.gamma", "f Delta(alpha) = gamma");
        c.cmp(sc, {}, out.f * H.delta(H.alpha), out.gamma);
    }
    {
        CheckScope sc(rep, "twist.delta", "Delta(beta) f^-1 = delta");
        c.cmp(sc, {}, H.delta(H.beta) * out.f_inv, out.delta);
    }
    {
        CheckScope sc(rep, "twist.phi",
                      "(1(x)f)(id(x)Delta)(f) Phi (Delta(x)id)(f^-1)(f^-1(x)1) = (S(x)S(x)S)(X^3(x)X^2(x)X^1)");
        Tensor l = out.f.embedded(3, {1, 2}) * H.apply(out.f, {I, D}) * H.phi * H.apply(out.f_inv, {D, I}) *
                   out.f_inv.embedded(3, {0, 1});
        Tensor r = H.apply(H.phi.permuted({2, 1, 0}), {LegOp::lin(S), LegOp::lin(S), LegOp::lin(S)});
        c.cmp(sc, {}, l, r);
    }
    if (!rep.all_passed()) {
        auto ids = rep.failed_ids();
        throw Error(ErrorKind::InternalInconsistency, "twist identities fail: " + ids.front());
    }
    return out;
}

PQElements pq_elements(const QuasiHopfAlgebra& H) {
    const Matrix& S = H.S;
    const Matrix& Si = H.S_inv;
    const LegOp I = LegOp::id(), D = LegOp::delta();
    PQElements out;
    out.pR = contract(H.alg, {&H.phi_inv}, {{L(0, 1)}, {L(0, 2), K(H.beta), M(S, {L(0, 3)})}});
    out.qR = contract(H.alg, {&H.phi}, {{L(0, 1)}, {M(Si, {K(H.alpha), L(0, 3)}), L(0, 2)}});
    out.pL = contract(H.alg, {&H.phi}, {{L(0, 2), M(Si, {L(0, 1), K(H.beta)})}, {L(0, 3)}});
    out.qL = contract(H.alg, {&H.phi_inv}, {{M(S, {L(0, 1)}), K(H.alpha), L(0, 2)}, {L(0, 3)}});

    VerificationReport& rep = out.report;
    Checker c{H, rep, false};
    const int n = H.dim();
    {
        CheckScope sc(rep, "pq.right_p", "Delta(h_1) p_R (1(x)S(h_2)) = p_R (h(x)1)");
        bool stop = false;
        for (int i = 0; i < n && !stop; ++i) {
            Tensor T = H.apply(H.delta_basis(i), {D, I});
            Tensor l = contract(H.alg, {&T, &out.pR}, {{L(0, 1), L(1, 1)}, {L(0, 2), L(1, 2), M(S, {L(0, 3)})}});
            stop = c.cmp(sc, {i}, l, out.pR * H.t({H.e(i), H.one()}));
        }
    }
    {
        CheckScope sc(rep, "pq.right_q", "(1(x)S^-1(h_2)) q_R Delta(h_1) = (h(x)1) q_R");
        bool stop = false;
        for (int i = 0; i < n && !stop; ++i) {
            Tensor T = H.apply(H.delta_basis(i), {D, I});
            Tensor l = contract(H.alg, {&T, &out.qR}, {{L(1, 1), L(0, 1)}, {M(Si, {L(0, 3)}), L(1, 2), L(0, 2)}});
            stop = c.cmp(sc, {i}, l, H.t({H.e(i), H.one()}) * out.qR);
        }
    }
    {
        CheckScope sc(rep, "pq.left_p", "Delta(h_2) p_L (S^-1(h_1)(x)1) = p_L (1(x)h)");
        bool stop = false;
        for (int i = 0; i < n && !stop; ++i) {
            Tensor T = H.apply(H.delta_basis(i), {I, D});
            Tensor l = contract(H.alg, {&T, &out.pL}, {{L(0, 2), L(1, 1), M(Si, {L(0, 1)})}, {L(0, 3), L(1, 2)}});
            stop = c.cmp(sc, {i}, l, out.pL * H.t({H.one(), H.e(i)}));
        }
    }
    {
        CheckScope sc(rep, "pq.left_q", "(S(h_1)(x)1) q_L Delta(h_2) = (1(x)h) q_L");
        bool stop = false;
        for (int i = 0; i < n && !stop; ++i) {
            Tensor T = H.apply(H.delta_basis(i), {I, D});
            Tensor l = contract(H.alg, {&T, &out.qL}, {{M(S, {L(0, 1)}), L(1, 1), L(0, 2)}, {L(1, 2), L(0, 3)}});
            stop = c.cmp(sc, {i}, l, H.t({H.one(), H.e(i)}) * out.qL);
        }
    }
    Tensor one2 = H.unit(2);
    {
        CheckScope sc(rep, "pq.right_qp", "(1(x)S^-1(p^2)) q_R Delta(p^1) = 1(x)1");
        Tensor T = H.apply(out.pR, {D, I});
        c.cmp(sc, {}, contract(H.alg, {&T, &out.qR}, {{L(1, 1), L(0, 1)}, {M(Si, {L(0, 3)}), L(1, 2), L(0, 2)}}), one2);
    }
    {
        CheckScope sc(rep, "pq.right_pq", "Delta(q^1) p_R (1(x)S(q^2)) = 1(x)1");
        Tensor T = H.apply(out.qR, {D, I});
        c.cmp(sc, {}, contract(H.alg, {&T, &out.pR}, {{L(0, 1), L(1, 1)}, {L(0, 2), L(1, 2), M(S, {L(0, 3)})}}), one2);
    }
    {
        CheckScope sc(rep, "pq.left_qp", "(S(p~^1)(x)1) q_L Delta(p~^2) = 1(x)1");
        Tensor T = H.apply(out.pL, {I, D});
        c.cmp(sc, {}, contract(H.alg, {&T, &out.qL}, {{M(S, {L(0, 1)}), L(1, 1), L(0, 2)}, {L(1, 2), L(0, 3)}}), one2);
    }
    {
        CheckScope sc(rep, "pq.left_pq", "Delta(q~^2) p_L (S^-1(q~^1)(x)1) = 1(x)1");
        Tensor T = H.apply(out.qL, {I, D});
        c.cmp(sc, {}, contract(H.alg, {&T, &out.pL}, {{L(0, 2), L(1, 1), M(Si, {L(0, 1)})}, {L(0, 3), L(1, 2)}}), one2);
    }
    return out;
}

// ---------------------------------------------------------------------------

QuasiHopfAlgebra gauge_twist(const QuasiHopfAlgebra& H, const TwistData& T) {
    const LegOp I = LegOp::id(), D = LegOp::delta();
    const Tensor& F = T.F;
    const Tensor& G = T.F_inv;
    std::vector<Tensor> deltas;
    for (int i = 0; i < H.dim(); ++i) deltas.push_back(F * H.delta_basis(i) * G);
    Tensor phi = F.embedded(3, {1, 2}) * H.apply(F, {I, D}) * H.phi * H.apply(G, {D, I}) * G.embedded(3, {0, 1});
    Tensor phi_inv = F.embedded(3, {0, 1}) * H.apply(F, {D, I}) * H.phi_inv * H.apply(G, {I, D}) * G.embedded(3, {1, 2});
    Vec alpha = contract(H.alg, {&G}, {{M(H.S, {L(0, 1)}), K(H.alpha), L(0, 2)}}).as_vec();
    Vec beta = contract(H.alg, {&F}, {{L(0, 1), K(H.beta), M(H.S, {L(0, 2)})}}).as_vec();
    QuasiHopfAlgebra r = make_quasihopf(H.alg, coalgebra_from(H.field(), H.dim(), deltas, H.co.counit), phi, phi_inv,
                                        H.S, alpha, beta, H.names);
    return r;
}

QuasiHopfAlgebra antipode_transform(const QuasiHopfAlgebra& H, const Vec& U) {
    Vec Ui = H.inverse(U);
    const std::size_t n = static_cast<std::size_t>(H.dim());
    Matrix S(H.field(), n, n);
    for (std::size_t j = 0; j < n; ++j) S.set_column(j, H.mul({U, H.antipode(H.e(static_cast<int>(j))), Ui}));
    return make_quasihopf(H.alg, H.co, H.phi, H.phi_inv, S, H.mul(U, H.alpha), H.mul(H.beta, Ui), H.names);
}

namespace {

AlgebraPtr opposite_algebra(const AlgebraData& a) {
    auto r = std::make_shared<AlgebraData>(a);
    const std::size_t n = static_cast<std::size_t>(a.n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r->mult[i * n + j] = a.mult[j * n + i];
    return r;
}

CoalgebraData opposite_coalgebra(const CoalgebraData& c) {
    CoalgebraData r = c;
    for (auto& l : r.comult)
        for (auto& [j, k, v] : l) std::swap(j, k);
    return r;
}

} // namespace

QuasiHopfAlgebra variant(const QuasiHopfAlgebra& H, Variant which) {
    const std::vector<int> rev{2, 1, 0};
    switch (which) {
    case Variant::Op: {
        AlgebraPtr a = opposite_algebra(*H.alg);
        return make_quasihopf(a, H.co, H.phi_inv.rebound(a), H.phi.rebound(a), H.S_inv, H.antipode_inv(H.beta),
                              H.antipode_inv(H.alpha), H.names);
    }
    case Variant::Cop:
        return make_quasihopf(H.alg, opposite_coalgebra(H.co), H.phi_inv.permuted(rev), H.phi.permuted(rev), H.S_inv,
                              H.antipode_inv(H.alpha), H.antipode_inv(H.beta), H.names);
    case Variant::OpCop: {
        AlgebraPtr a = opposite_algebra(*H.alg);
        return make_quasihopf(a, opposite_coalgebra(H.co), H.phi.permuted(rev).rebound(a),
                              H.phi_inv.permuted(rev).rebound(a), H.S, H.beta, H.alpha, H.names);
    }
    }
    throw Error(ErrorKind::InvalidArgument, "unknown variant");
}

QuasiHopfAlgebra tensor_product(const QuasiHopfAlgebra& H, const QuasiHopfAlgebra& K) {
    if (!(H.field() == K.field())) throw Error(ErrorKind::FieldMismatch, "tensor factors over different fields");
    const FieldSpec& f = H.field();
    const int n = H.dim(), m = K.dim(), N = n * m;
    auto idx = [m](int i, int j) { return i * m + j; };

    std::vector<Scalar> dense(static_cast<std::size_t>(N) * N * N, Scalar::zero(f));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (const auto& [a, ca] : H.alg->mult[static_cast<std::size_t>(i * n + k)])
                for (int j = 0; j < m; ++j)
                    for (int l = 0; l < m; ++l)
                        for (const auto& [b, cb] : K.alg->mult[static_cast<std::size_t>(j * m + l)])
                            dense[(static_cast<std::size_t>(idx(i, j)) * N + static_cast<std::size_t>(idx(k, l))) * N +
                                  static_cast<std::size_t>(idx(a, b))] += ca * cb;
    AlgebraPtr alg = make_algebra(f, N, dense, kron(H.one(), K.one()));

    CoalgebraData co;
    co.field = f;
    co.n = N;
    co.counit = kron(H.co.counit, K.co.counit);
    co.comult.resize(static_cast<std::size_t>(N));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (const auto& [a, b, c] : H.co.comult[static_cast<std::size_t>(i)])
                for (const auto& [a2, b2, c2] : K.co.comult[static_cast<std::size_t>(j)])
                    co.comult[static_cast<std::size_t>(idx(i, j))].emplace_back(idx(a, a2), idx(b, b2), c * c2);

    auto interleave = [&](const Tensor& x, const Tensor& y) {
        Tensor r(alg, x.arity());
        for (const auto& tx : x.terms())
            for (const auto& ty : y.terms()) {
                std::vector<int> id(static_cast<std::size_t>(x.arity()));
                for (std::size_t l = 0; l < id.size(); ++l) id[l] = idx(tx.idx[l], ty.idx[l]);
                r(id) += tx.coef * ty.coef;
            }
        return r;
    };

    Matrix S(f, static_cast<std::size_t>(N), static_cast<std::size_t>(N));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            S.set_column(static_cast<std::size_t>(idx(i, j)), kron(H.antipode(H.e(i)), K.antipode(K.e(j))));

    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            names.push_back(H.names[static_cast<std::size_t>(i)] + "." + K.names[static_cast<std::size_t>(j)]);

    return make_quasihopf(alg, co, interleave(H.phi, K.phi), interleave(H.phi_inv, K.phi_inv), S,
                          kron(H.alpha, K.alpha), kron(H.beta, K.beta), names);
}

// ---------------------------------------------------------------------------

namespace {

// Integrals on one side: e_i t = eps(e_i) t (left) or t e_i = eps(e_i) t.
void integral_equations(const QuasiHopfAlgebra& H, bool left, RowReducer& red) {
    const int n = H.dim();
    for (int i = 0; i < n; ++i) {
        // column j of the map t -> e_i t - eps(e_i) t
        std::vector<Vec> cols;
        for (int j = 0; j < n; ++j) {
            Vec prod = left ? H.mul(H.e(i), H.e(j)) : H.mul(H.e(j), H.e(i));
            prod[static_cast<std::size_t>(j)] -= H.co.counit[static_cast<std::size_t>(i)];
            cols.push_back(std::move(prod));
        }
        for (int k = 0; k < n; ++k) {
            Vec row(static_cast<std::size_t>(n), Scalar::zero(H.field()));
            for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            red.add_equation(std::move(row));
        }
    }
}

std::vector<Vec> side_integrals(const QuasiHopfAlgebra& H, bool left) {
    RowReducer red(H.field(), static_cast<std::size_t>(H.dim()));
    integral_equations(H, left, red);
    return red.solve().kernel;
}

} // namespace

std::vector<Vec> left_integrals(const QuasiHopfAlgebra& H) { return side_integrals(H, true); }
std::vector<Vec> right_integrals(const QuasiHopfAlgebra& H) { return side_integrals(H, false); }

IntegralInfo integrals(const QuasiHopfAlgebra& H) {
    IntegralInfo info;
    info.left = left_integrals(H);
    info.right = right_integrals(H);
    RowReducer red(H.field(), static_cast<std::size_t>(H.dim()));
    integral_equations(H, true, red);
    integral_equations(H, false, red);
    red.add_equation(H.co.counit, Scalar::one(H.field()));
    SolutionSet s = red.solve();
    if (s.consistent) info.normalized = s.particular;
    return info;
}

bool is_semisimple(const QuasiHopfAlgebra& H) {
    for (const auto& t : left_integrals(H))
        if (!H.eps(t).is_zero()) return true;
    return false;
}

} // namespace qhopf
