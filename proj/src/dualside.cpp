#include "qhopf/dualside.hpp"

namespace qhopf {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

struct Term3 {
    int i, j, k;
    Scalar c;
};

class DualCtx {
public:
    explicit DualCtx(const DualQuasiHopf& a) : A(a), n(a.dim()), f(a.field()) {
        prod.resize(sz(n * n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) prod[sz(i * n + j)] = vmul(*A.alg, e(i), e(j));
        Svec.resize(sz(n));
        for (int i = 0; i < n; ++i) Svec[sz(i)] = A.S.column(sz(i));
    }

    const DualQuasiHopf& A;
    int n;
    FieldSpec f;
    std::vector<Vec> prod;
    std::vector<Vec> Svec;

    Vec e(int i) const { return basis_vec(f, sz(n), sz(i)); }
    Vec one() const { return A.alg->unit; }
    Vec zero() const { return zero_vec(f, sz(n)); }
    Scalar zs() const { return Scalar::zero(f); }
    Vec mul(const Vec& x, const Vec& y) const { return vmul(*A.alg, x, y); }
    Vec S(const Vec& v) const { return A.S.apply(v); }
    Scalar eps(const Vec& v) const { return apply_counit(A.co, v); }
    std::string show(const Vec& v) const { return Tensor::from_vec(A.alg, v).str(A.names); }

    static Scalar pair(const Vec& cov, const Vec& v) {
        Scalar s = Scalar::zero(v.front().field());
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero() && !cov[i].is_zero()) s.add_product(cov[i], v[i]);
        return s;
    }

    Scalar tri(const std::vector<Scalar>& form, const Vec& x, const Vec& y, const Vec& z) const {
        Scalar s = zs();
        for (int i = 0; i < n; ++i) {
            if (x[sz(i)].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (y[sz(j)].is_zero()) continue;
                Scalar xy = x[sz(i)] * y[sz(j)];
                for (int k = 0; k < n; ++k) {
                    if (z[sz(k)].is_zero()) continue;
                    const Scalar& p = form[(sz(i) * sz(n) + sz(j)) * sz(n) + sz(k)];
                    if (!p.is_zero()) s.add_product(xy * z[sz(k)], p);
                }
            }
        }
        return s;
    }

    const Scalar& phi(int i, int j, int k) const { return A.phi[(sz(i) * sz(n) + sz(j)) * sz(n) + sz(k)]; }
    const Scalar& mu(int i, int j, int k) const { return prod[sz(i * n + j)][sz(k)]; }

    // Terms of the iterated coproduct of e_a with `arity` legs.
    std::vector<Tensor::Term> iter(int a, int arity) const {
        Tensor t = Tensor::from_vec(A.alg, e(a));
        for (int k = 1; k < arity; ++k) t = apply_on_leg(t, 0, LegOp::delta(), A.co);
        return t.terms();
    }
    std::vector<Tensor::Term> iterv(const Vec& v, int arity) const {
        Tensor t = Tensor::from_vec(A.alg, v);
        for (int k = 1; k < arity; ++k) t = apply_on_leg(t, 0, LegOp::delta(), A.co);
        return t.terms();
    }
};

bool vcmp(const DualCtx& C, CheckScope& sc, const std::vector<int>& basis, const Vec& l, const Vec& r) {
    if (l == r) return false;
    return sc.fail({basis, C.show(l), C.show(r)});
}

bool scmp(CheckScope& sc, const std::vector<int>& basis, const Scalar& l, const Scalar& r) {
    if (l == r) return false;
    return sc.fail({basis, format(l), format(r)});
}

Tensor form_tensor(const AlgebraPtr& conv, const std::vector<Scalar>& c, int arity) {
    Tensor t(conv, arity);
    for (std::size_t i = 0; i < c.size(); ++i) t.at(i) = c[i];
    return t;
}

// p * q in the convolution algebra
Vec conv_mul(const DualCtx& C, const Vec& p, const Vec& q) {
    Vec out = C.zero();
    for (int k = 0; k < C.n; ++k)
        for (const auto& [i, j, d] : C.A.co.comult[sz(k)]) {
            if (p[sz(i)].is_zero() || q[sz(j)].is_zero()) continue;
            out[sz(k)].add_product(d, p[sz(i)] * q[sz(j)]);
        }
    return out;
}

std::optional<Vec> conv_inverse(const AlgebraPtr& conv, const Vec& p) {
    try {
        return invert_in_tensor_power(Tensor::from_vec(conv, p)).as_vec();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotInvertible) return std::nullopt;
        throw;
    }
}

} // namespace

AlgebraPtr convolution_algebra(const DualQuasiHopf& A) {
    const int n = A.dim();
    std::vector<Scalar> dense(sz(n) * sz(n) * sz(n), Scalar::zero(A.field()));
    for (int k = 0; k < n; ++k)
        for (const auto& [i, j, d] : A.co.comult[sz(k)]) dense[(sz(i) * sz(n) + sz(j)) * sz(n) + sz(k)] += d;
    return make_algebra(A.field(), n, dense, A.co.counit);
}

DualQuasiHopf make_dual(AlgebraPtr alg, CoalgebraData co, std::vector<Scalar> phi, std::optional<std::vector<Scalar>> phi_inv,
                        Matrix S, Vec alpha, Vec beta, std::vector<std::string> names) {
    const int n = alg->n;
    const std::size_t n3 = sz(n) * sz(n) * sz(n);
    if (co.n != n || S.rows() != sz(n) || S.cols() != sz(n) || alpha.size() != sz(n) || beta.size() != sz(n) || phi.size() != n3)
        throw Error(ErrorKind::ArityMismatch, "dual structure dimensions disagree");
    DualQuasiHopf A;
    A.alg = std::move(alg);
    A.co = std::move(co);
    A.phi = std::move(phi);
    A.S = std::move(S);
    A.alpha = std::move(alpha);
    A.beta = std::move(beta);
    A.names = std::move(names);
    if (A.names.empty())
        for (int i = 0; i < n; ++i) A.names.push_back("P" + std::to_string(i));
    if (phi_inv) {
        if (phi_inv->size() != n3) throw Error(ErrorKind::ArityMismatch, "phi_inv size");
        A.phi_inv = std::move(*phi_inv);
    } else {
        AlgebraPtr conv = convolution_algebra(A);
        A.phi_inv = invert_in_tensor_power(form_tensor(conv, A.phi, 3)).coeffs();
    }
    return A;
}

DualQuasiHopf dualize(const QuasiHopfAlgebra& H) {
    const int n = H.dim();
    const FieldSpec& f = H.field();
    std::vector<Scalar> dense(sz(n) * sz(n) * sz(n), Scalar::zero(f));
    for (int k = 0; k < n; ++k)
        for (const auto& [i, j, d] : H.co.comult[sz(k)]) dense[(sz(i) * sz(n) + sz(j)) * sz(n) + sz(k)] += d;
    AlgebraPtr alg = make_algebra(f, n, dense, H.co.counit);

    CoalgebraData co;
    co.field = f;
    co.n = n;
    co.comult.resize(sz(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [k, m] : H.alg->mult[sz(i * n + j)]) co.comult[sz(k)].emplace_back(i, j, m);
    co.counit = H.one();

    std::vector<std::string> names;
    for (const auto& s : H.names) names.push_back("P" + s);
    return make_dual(alg, co, H.phi.coeffs(), H.phi_inv.coeffs(), H.S.transpose(), H.alpha, H.beta, names);
}

QuasiHopfAlgebra predual(const DualQuasiHopf& A, std::vector<std::string> names) {
    const int n = A.dim();
    AlgebraPtr conv = convolution_algebra(A);
    CoalgebraData co;
    co.field = A.field();
    co.n = n;
    co.comult.resize(sz(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [k, m] : A.alg->mult[sz(i * n + j)]) co.comult[sz(k)].emplace_back(i, j, m);
    co.counit = A.alg->unit;
    if (names.empty())
        for (const auto& s : A.names) names.push_back(s.size() > 1 && s[0] == 'P' ? s.substr(1) : "Q" + s);
    return make_quasihopf(conv, co, form_tensor(conv, A.phi, 3), form_tensor(conv, A.phi_inv, 3), A.S.transpose(), A.alpha,
                          A.beta, names);
}

VerificationReport verify_dual(const DualQuasiHopf& A) {
    DualCtx C(A);
    const int n = C.n;
    VerificationReport rep;
    std::vector<std::vector<Tensor::Term>> d2(sz(n)), d3(sz(n)), d5(sz(n));
    for (int a = 0; a < n; ++a) {
        d2[sz(a)] = C.iter(a, 2);
        d3[sz(a)] = C.iter(a, 3);
    }
    auto delta = [&](const Vec& v) { return apply_on_leg(Tensor::from_vec(A.alg, v), 0, LegOp::delta(), A.co); };

    {
        CheckScope sc(rep, "dual.coassociativity", "(Delta (x) id) Delta = (id (x) Delta) Delta");
        for (int a = 0; a < n; ++a) {
            Tensor d = delta(C.e(a));
            Tensor l = apply_on_leg(d, 0, LegOp::delta(), A.co), r = apply_on_leg(d, 1, LegOp::delta(), A.co);
            if (l != r && sc.fail({{a}, l.str(A.names), r.str(A.names)})) break;
        }
    }
    {
        CheckScope sc(rep, "dual.counit", "(eps (x) id) Delta = id = (id (x) eps) Delta");
        for (int a = 0; a < n; ++a) {
            Tensor d = delta(C.e(a));
            Vec l = apply_on_leg(d, 0, LegOp::eps(), A.co).as_vec();
            Vec r = apply_on_leg(d, 1, LegOp::eps(), A.co).as_vec();
            if (vcmp(C, sc, {a, 0}, l, C.e(a)) || vcmp(C, sc, {a, 1}, r, C.e(a))) break;
        }
    }
    {
        CheckScope sc(rep, "dual.mult_comultiplicative", "Delta(ab) = Delta(a) Delta(b)");
        for (int a = 0; a < n && !sc.failed(); ++a)
            for (int b = 0; b < n; ++b) {
                Tensor l = delta(C.prod[sz(a * n + b)]);
                Tensor r = delta(C.e(a)) * delta(C.e(b));
                if (l != r && sc.fail({{a, b}, l.str(A.names), r.str(A.names)})) break;
            }
    }
    {
        CheckScope sc(rep, "dual.mult_counital", "eps(ab) = eps(a) eps(b)");
        for (int a = 0; a < n && !sc.failed(); ++a)
            for (int b = 0; b < n; ++b)
                if (scmp(sc, {a, b}, C.eps(C.prod[sz(a * n + b)]), A.co.counit[sz(a)] * A.co.counit[sz(b)])) break;
    }
    {
        CheckScope sc(rep, "dual.unit_grouplike", "Delta(1) = 1 (x) 1, eps(1) = 1");
        Tensor l = delta(C.one()), r = Tensor::pure(A.alg, {C.one(), C.one()});
        if (l != r)
            sc.fail({{0}, l.str(A.names), r.str(A.names)});
        else
            scmp(sc, {1}, C.eps(C.one()), Scalar::one(C.f));
    }
    {
        CheckScope sc(rep, "dual.unit", "1a = a1 = a");
        for (int a = 0; a < n; ++a)
            if (vcmp(C, sc, {a, 0}, C.mul(C.one(), C.e(a)), C.e(a)) || vcmp(C, sc, {a, 1}, C.mul(C.e(a), C.one()), C.e(a)))
                break;
    }
    {
        CheckScope sc(rep, "dual.quasi_associativity", "a_1(b_1 c_1) phi(a_2, b_2, c_2) = phi(a_1, b_1, c_1)(a_2 b_2)c_2");
        std::vector<Vec> left(sz(n * n * n)), right(sz(n * n * n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    left[sz((i * n + j) * n + k)] = C.mul(C.e(i), C.prod[sz(j * n + k)]);
                    right[sz((i * n + j) * n + k)] = C.mul(C.prod[sz(i * n + j)], C.e(k));
                }
        bool stop = false;
        for (int a = 0; a < n && !stop; ++a)
            for (int b = 0; b < n && !stop; ++b)
                for (int c = 0; c < n && !stop; ++c) {
                    Vec l = C.zero(), r = C.zero();
                    for (const auto& ta : d2[sz(a)])
                        for (const auto& tb : d2[sz(b)])
                            for (const auto& tc : d2[sz(c)]) {
                                Scalar co = ta.coef * tb.coef * tc.coef;
                                const Scalar& pl = C.phi(ta.idx[1], tb.idx[1], tc.idx[1]);
                                if (!pl.is_zero())
                                    l = vadd(l, vscale(co * pl, left[sz((ta.idx[0] * n + tb.idx[0]) * n + tc.idx[0])]));
                                const Scalar& pr = C.phi(ta.idx[0], tb.idx[0], tc.idx[0]);
                                if (!pr.is_zero())
                                    r = vadd(r, vscale(co * pr, right[sz((ta.idx[1] * n + tb.idx[1]) * n + tc.idx[1])]));
                            }
                    stop = vcmp(C, sc, {a, b, c}, l, r);
                }
    }
    {
        CheckScope sc(rep, "dual.cocycle",
                      "phi(a_1, b_1, c_1 d_1) phi(a_2 b_2, c_2, d_2) = phi(b_1, c_1, d_1) phi(a_1, b_2 c_2, d_2) phi(a_2, b_3, c_3)");
        const std::size_t N = sz(n);
        // Lp[a,b](u, w) = phi(a_1, b_1, u) mu(a_2, b_2, w);  Lq[c,d](u, w) = mu(c_1, d_1, u) phi(w, c_2, d_2)
        auto stage_left = [&](int a, int b, bool first) {
            std::vector<Scalar> out(N * N, C.zs());
            for (const auto& ta : d2[sz(a)])
                for (const auto& tb : d2[sz(b)]) {
                    Scalar co = ta.coef * tb.coef;
                    for (int u = 0; u < n; ++u)
                        for (int w = 0; w < n; ++w) {
                            Scalar x = first ? C.phi(ta.idx[0], tb.idx[0], u) * C.mu(ta.idx[1], tb.idx[1], w)
                                             : C.mu(ta.idx[0], tb.idx[0], u) * C.phi(w, ta.idx[1], tb.idx[1]);
                            if (!x.is_zero()) out[sz(u) * N + sz(w)].add_product(co, x);
                        }
                }
            return out;
        };
        std::vector<std::vector<Scalar>> P(N * N), Q(N * N), E(N * N);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                P[sz(a) * N + sz(b)] = stage_left(a, b, true);
                Q[sz(a) * N + sz(b)] = stage_left(a, b, false);
                // E[b,c](d1, w, a2) = phi(b_1, c_1, d1) mu(b_2, c_2, w) phi(a2, b_3, c_3)
                std::vector<Scalar> e(N * N * N, C.zs());
                for (const auto& tb : d3[sz(a)])
                    for (const auto& tc : d3[sz(b)]) {
                        Scalar co = tb.coef * tc.coef;
                        for (int d1 = 0; d1 < n; ++d1) {
                            const Scalar& p1 = C.phi(tb.idx[0], tc.idx[0], d1);
                            if (p1.is_zero()) continue;
                            for (int w = 0; w < n; ++w) {
                                const Scalar& m = C.mu(tb.idx[1], tc.idx[1], w);
                                if (m.is_zero()) continue;
                                Scalar pm = co * p1 * m;
                                for (int a2 = 0; a2 < n; ++a2) {
                                    const Scalar& p3 = C.phi(a2, tb.idx[2], tc.idx[2]);
                                    if (!p3.is_zero()) e[(sz(d1) * N + sz(w)) * N + sz(a2)].add_product(pm, p3);
                                }
                            }
                        }
                    }
                E[sz(a) * N + sz(b)] = std::move(e);
            }
        bool stop = false;
        for (int a = 0; a < n && !stop; ++a)
            for (int b = 0; b < n && !stop; ++b)
                for (int c = 0; c < n && !stop; ++c)
                    for (int d = 0; d < n && !stop; ++d) {
                        Scalar l = C.zs(), r = C.zs();
                        const auto& p = P[sz(a) * N + sz(b)];
                        const auto& q = Q[sz(c) * N + sz(d)];
                        for (std::size_t x = 0; x < N * N; ++x)
                            if (!p[x].is_zero() && !q[x].is_zero()) l.add_product(p[x], q[x]);
                        const auto& e = E[sz(b) * N + sz(c)];
                        for (const auto& ta : d2[sz(a)])
                            for (const auto& td : d2[sz(d)]) {
                                Scalar co = ta.coef * td.coef;
                                for (int w = 0; w < n; ++w) {
                                    const Scalar& ev = e[(sz(td.idx[0]) * N + sz(w)) * N + sz(ta.idx[1])];
                                    if (ev.is_zero()) continue;
                                    const Scalar& ph = C.phi(ta.idx[0], w, td.idx[1]);
                                    if (!ph.is_zero()) r.add_product(co * ev, ph);
                                }
                            }
                        stop = scmp(sc, {a, b, c, d}, l, r);
                    }
    }
    const Vec one = C.one();
    {
        CheckScope sc(rep, "dual.phi_normalized", "phi(a, 1, b) = eps(a) eps(b)");
        for (int a = 0; a < n && !sc.failed(); ++a)
            for (int b = 0; b < n; ++b)
                if (scmp(sc, {a, b}, C.tri(A.phi, C.e(a), one, C.e(b)), A.co.counit[sz(a)] * A.co.counit[sz(b)])) break;
    }
    {
        CheckScope sc(rep, "dual.phi_unit_legs", "phi(1, a, b) = phi(a, b, 1) = eps(a) eps(b)");
        for (int a = 0; a < n && !sc.failed(); ++a)
            for (int b = 0; b < n; ++b) {
                Scalar r = A.co.counit[sz(a)] * A.co.counit[sz(b)];
                if (scmp(sc, {a, b, 0}, C.tri(A.phi, one, C.e(a), C.e(b)), r) ||
                    scmp(sc, {a, b, 1}, C.tri(A.phi, C.e(a), C.e(b), one), r))
                    break;
            }
    }
    {
        CheckScope sc(rep, "dual.phi_invertible", "phi * phi^-1 = phi^-1 * phi = eps (x) eps (x) eps");
        AlgebraPtr conv = convolution_algebra(A);
        Tensor p = form_tensor(conv, A.phi, 3), q = form_tensor(conv, A.phi_inv, 3), u = Tensor::unit(conv, 3);
        Tensor pq = p * q, qp = q * p;
        if (pq != u)
            sc.fail({{0}, pq.str(), u.str()});
        else if (qp != u)
            sc.fail({{1}, qp.str(), u.str()});
    }
    {
        CheckScope sc(rep, "dual.antipode_anticomultiplicative", "Delta(S(a)) = S(a_2) (x) S(a_1), eps(S(a)) = eps(a)");
        for (int a = 0; a < n; ++a) {
            Tensor l = delta(C.Svec[sz(a)]);
            Tensor r = apply_legs(delta(C.e(a)).permuted({1, 0}), {LegOp::lin(A.S), LegOp::lin(A.S)}, A.co);
            if (l != r) {
                if (sc.fail({{a, 0}, l.str(A.names), r.str(A.names)})) break;
                continue;
            }
            if (scmp(sc, {a, 1}, C.eps(C.Svec[sz(a)]), A.co.counit[sz(a)])) break;
        }
    }
    {
        CheckScope sc(rep, "dual.antipode_alpha", "S(a_1) alpha(a_2) a_3 = alpha(a) 1");
        for (int a = 0; a < n; ++a) {
            Vec l = C.zero();
            for (const auto& t : d3[sz(a)]) {
                Scalar co = t.coef * A.alpha[sz(t.idx[1])];
                if (!co.is_zero()) l = vadd(l, vscale(co, C.mul(C.Svec[sz(t.idx[0])], C.e(t.idx[2]))));
            }
            if (vcmp(C, sc, {a}, l, vscale(A.alpha[sz(a)], one))) break;
        }
    }
    {
        CheckScope sc(rep, "dual.antipode_beta", "a_1 beta(a_2) S(a_3) = beta(a) 1");
        for (int a = 0; a < n; ++a) {
            Vec l = C.zero();
            for (const auto& t : d3[sz(a)]) {
                Scalar co = t.coef * A.beta[sz(t.idx[1])];
                if (!co.is_zero()) l = vadd(l, vscale(co, C.mul(C.e(t.idx[0]), C.Svec[sz(t.idx[2])])));
            }
            if (vcmp(C, sc, {a}, l, vscale(A.beta[sz(a)], one))) break;
        }
    }
    {
        CheckScope sc(rep, "dual.antipode_phi",
                      "phi(a_1 beta(a_2), S(a_3), alpha(a_4) a_5) = phi^-1(S(a_1), alpha(a_2) a_3, beta(a_4) S(a_5)) = eps(a)");
        for (int a = 0; a < n; ++a) {
            auto t5 = C.iter(a, 5);
            Scalar l = C.zs(), r = C.zs();
            for (const auto& t : t5) {
                const auto& x = t.idx;
                Scalar c1 = t.coef * A.beta[sz(x[1])] * A.alpha[sz(x[3])];
                if (!c1.is_zero()) l.add_product(c1, C.tri(A.phi, C.e(x[0]), C.Svec[sz(x[2])], C.e(x[4])));
                Scalar c2 = t.coef * A.alpha[sz(x[1])] * A.beta[sz(x[3])];
                if (!c2.is_zero()) r.add_product(c2, C.tri(A.phi_inv, C.Svec[sz(x[0])], C.e(x[2]), C.Svec[sz(x[4])]));
            }
            if (scmp(sc, {a, 0}, l, A.co.counit[sz(a)]) || scmp(sc, {a, 1}, r, A.co.counit[sz(a)])) break;
        }
    }
    {
        CheckScope sc(rep, "dual.normalized", "S(1) = 1, alpha(1) = beta(1) = 1");
        if (!vcmp(C, sc, {0}, C.S(one), one) && !scmp(sc, {1}, DualCtx::pair(A.alpha, one), Scalar::one(C.f)))
            scmp(sc, {2}, DualCtx::pair(A.beta, one), Scalar::one(C.f));
    }
    return rep;
}

DualInvolutoryCertificate is_involutory_dual(const DualQuasiHopf& A) {
    DualCtx C(A);
    const int n = C.n;
    AlgebraPtr conv = convolution_algebra(A);
    DualInvolutoryCertificate c;
    // (beta o S) and (alpha o S) as functionals
    Vec bS = A.S.transpose().apply(A.beta), aS = A.S.transpose().apply(A.alpha);
    c.u = conv_mul(C, bS, A.alpha);
    c.v = conv_mul(C, A.beta, aS);
    VerificationReport& rep = c.report;
    {
        CheckScope sc(rep, "dual.involutory", "S^2(a) = beta(S(a_1)) alpha(a_2) a_3 beta(a_4) alpha(S(a_5))");
        bool ok = true;
        for (int a = 0; a < n; ++a) {
            Vec l = C.S(C.Svec[sz(a)]);
            Vec r = C.zero();
            for (const auto& t : C.iter(a, 5)) {
                const auto& x = t.idx;
                Scalar co = t.coef * bS[sz(x[0])] * A.alpha[sz(x[1])] * A.beta[sz(x[3])] * aS[sz(x[4])];
                if (!co.is_zero()) r[sz(x[2])] += co;
            }
            if (l != r) {
                ok = false;
                if (sc.fail({{a}, C.show(l), C.show(r)})) break;
            }
        }
        c.holds = ok;
    }
    if (!c.holds) return c;
    const Vec& eps = A.co.counit;
    {
        CheckScope sc(rep, "dual.uv_inverse", "((beta o S) alpha) * (beta (alpha o S)) = (beta (alpha o S)) * ((beta o S) alpha) = eps");
        if (!vcmp(C, sc, {0}, conv_mul(C, c.u, c.v), eps)) vcmp(C, sc, {1}, conv_mul(C, c.v, c.u), eps);
    }
    c.alpha_inv = conv_inverse(conv, A.alpha);
    c.beta_inv = conv_inverse(conv, A.beta);
    {
        CheckScope sc(rep, "dual.alpha_invertible", "alpha * alpha^-1 = alpha^-1 * alpha = eps");
        if (!c.alpha_inv) sc.fail({{0}, "alpha", "not invertible"});
    }
    {
        CheckScope sc(rep, "dual.beta_invertible", "beta * beta^-1 = beta^-1 * beta = eps");
        if (!c.beta_inv) sc.fail({{0}, "beta", "not invertible"});
    }
    if (c.alpha_inv) {
        CheckScope sc(rep, "dual.alpha_inverse_antipode", "S(a_3) alpha^-1(a_2) a_1 = alpha^-1(a) 1");
        for (int a = 0; a < n; ++a) {
            Vec l = C.zero();
            for (const auto& t : C.iter(a, 3)) {
                Scalar co = t.coef * (*c.alpha_inv)[sz(t.idx[1])];
                if (!co.is_zero()) l = vadd(l, vscale(co, C.mul(C.Svec[sz(t.idx[2])], C.e(t.idx[0]))));
            }
            if (vcmp(C, sc, {a}, l, vscale((*c.alpha_inv)[sz(a)], C.one()))) break;
        }
    }
    if (c.beta_inv) {
        CheckScope sc(rep, "dual.beta_inverse_antipode", "a_3 beta^-1(a_2) S(a_1) = beta^-1(a) 1");
        for (int a = 0; a < n; ++a) {
            Vec l = C.zero();
            for (const auto& t : C.iter(a, 3)) {
                Scalar co = t.coef * (*c.beta_inv)[sz(t.idx[1])];
                if (!co.is_zero()) l = vadd(l, vscale(co, C.mul(C.e(t.idx[2]), C.Svec[sz(t.idx[0])])));
            }
            if (vcmp(C, sc, {a}, l, vscale((*c.beta_inv)[sz(a)], C.one()))) break;
        }
    }
    return c;
}

std::vector<Vec> dual_integrals(const DualQuasiHopf& A) {
    const int n = A.dim();
    RowReducer rr(A.field(), sz(n));
    // (P_i * T)(e_k) = P_i(1) T(e_k) for all i, k
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            Vec row = zero_vec(A.field(), sz(n));
            for (const auto& [a, b, d] : A.co.comult[sz(k)])
                if (a == i) row[sz(b)] += d;
            row[sz(k)] -= A.alg->unit[sz(i)];
            if (!is_zero_vec(row)) rr.add_equation(row);
        }
    return rr.solve().kernel;
}

bool cosemisimple_check(const DualQuasiHopf& A) {
    std::vector<Vec> ints = dual_integrals(A);
    if (ints.empty()) throw Error(ErrorKind::NoIntegral, "no nonzero left integral on A");
    for (const auto& T : ints)
        if (!DualCtx::pair(T, A.alg->unit).is_zero()) return true;
    return false;
}

DualPQ dual_pq(const DualQuasiHopf& A) {
    DualCtx C(A);
    const int n = C.n;
    std::optional<Matrix> Si = inverse(A.S);
    if (!Si) throw Error(ErrorKind::AntipodeNotInvertible, "S is not bijective");
    DualPQ r{Matrix(C.f, sz(n), sz(n)), Matrix(C.f, sz(n), sz(n))};
    for (int b = 0; b < n; ++b) {
        auto t3 = C.iter(b, 3);
        for (int a = 0; a < n; ++a) {
            Scalar p = C.zs(), q = C.zs();
            for (const auto& t : t3) {
                const auto& x = t.idx;
                Scalar cp = t.coef * A.beta[sz(x[1])];
                if (!cp.is_zero()) p.add_product(cp, C.tri(A.phi_inv, C.e(a), C.e(x[0]), C.Svec[sz(x[2])]));
                Scalar cq = t.coef * DualCtx::pair(A.alpha, Si->column(sz(x[1])));
                if (!cq.is_zero()) q.add_product(cq, C.tri(A.phi, C.e(a), C.e(x[2]), Si->column(sz(x[0]))));
            }
            r.pR(sz(a), sz(b)) = p;
            r.qR(sz(a), sz(b)) = q;
        }
    }
    return r;
}

namespace {

// x^T M y
Scalar bilinear(const Matrix& m, const Vec& x, const Vec& y) {
    Scalar s = Scalar::zero(m.field());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero() && !m(i, j).is_zero()) s.add_product(x[i] * y[j], m(i, j));
    }
    return s;
}

} // namespace

Matrix omega_T(const DualQuasiHopf& A, const Vec& T) {
    DualCtx C(A);
    const int n = C.n;
    DualPQ pq = dual_pq(A);
    std::vector<std::vector<Tensor::Term>> t3(sz(n));
    for (int a = 0; a < n; ++a) t3[sz(a)] = C.iter(a, 3);
    Matrix W(C.f, sz(n), sz(n));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            Scalar s = C.zs();
            for (const auto& tb : t3[sz(b)])
                for (const auto& ta : t3[sz(a)]) {
                    const Scalar& q = pq.qR(sz(tb.idx[0]), sz(ta.idx[0]));
                    const Scalar& p = pq.pR(sz(tb.idx[2]), sz(ta.idx[2]));
                    if (q.is_zero() || p.is_zero()) continue;
                    Scalar tv = DualCtx::pair(T, C.prod[sz(tb.idx[1] * n + ta.idx[1])]);
                    if (!tv.is_zero()) s.add_product(tb.coef * ta.coef * q * p, tv);
                }
            W(sz(b), sz(a)) = s;
        }
    return W;
}

VerificationReport omega_identity_check(const DualQuasiHopf& A, const Vec& T) {
    DualCtx C(A);
    Matrix W = omega_T(A, T);
    Scalar T1 = DualCtx::pair(T, C.one());
    Vec bS = A.S.transpose().apply(A.beta);
    VerificationReport rep;
    CheckScope sc(rep, "dual.integral_form", "omega_T(a_2, S(a_1)) = T(1) beta(S(a_1)) alpha(a_2)");
    for (int a = 0; a < C.n; ++a) {
        Scalar l = C.zs(), r = C.zs();
        for (const auto& t : C.iter(a, 2)) {
            l.add_product(t.coef, bilinear(W, C.e(t.idx[1]), C.Svec[sz(t.idx[0])]));
            r.add_product(t.coef, bS[sz(t.idx[0])] * A.alpha[sz(t.idx[1])]);
        }
        if (scmp(sc, {a}, l, T1 * r)) break;
    }
    return rep;
}

ThetaStar theta_star(const DualQuasiHopf& A, const Vec& T) {
    DualCtx C(A);
    const int n = C.n;
    DualPQ pq = dual_pq(A);
    ThetaStar th{Matrix(C.f, sz(n), sz(n)), Matrix(C.f, sz(n), sz(n)), {}};
    Vec bS = A.S.transpose().apply(A.beta);
    std::vector<std::vector<Tensor::Term>> t3(sz(n));
    for (int a = 0; a < n; ++a) t3[sz(a)] = C.iter(a, 3);

    // F_k = sigma(S(r_1) (x) alpha(r_2) r_3), G_k = T <- e_k, K_k = sigma^-1(S(p_3) (x) beta(S(p_2)) S^2(p_1)) for e_k
    std::vector<Vec> F(sz(n), C.zero()), G(sz(n), C.zero()), K(sz(n), C.zero());
    for (int k = 0; k < n; ++k)
        for (int c = 0; c < n; ++c) {
            G[sz(k)][sz(c)] = DualCtx::pair(T, C.mul(C.e(c), C.Svec[sz(k)]));
            for (const auto& t : t3[sz(k)]) {
                const auto& x = t.idx;
                Scalar cf = t.coef * A.alpha[sz(x[1])];
                if (!cf.is_zero()) F[sz(k)][sz(c)].add_product(cf, C.tri(A.phi, C.e(c), C.Svec[sz(x[0])], C.e(x[2])));
                Scalar ck = t.coef * bS[sz(x[1])];
                if (!ck.is_zero())
                    K[sz(k)][sz(c)].add_product(ck, C.tri(A.phi_inv, C.e(c), C.Svec[sz(x[2])], C.S(C.Svec[sz(x[0])])));
            }
        }
    for (int a = 0; a < n; ++a) {
        Vec s = C.zero();
        for (const auto& t : t3[sz(a)]) {
            const auto& x = t.idx;
            s = vadd(s, vscale(t.coef, conv_mul(C, conv_mul(C, F[sz(x[2])], G[sz(x[1])]), K[sz(x[0])])));
        }
        th.via_sigma.set_column(sz(a), s);
        for (int b = 0; b < n; ++b) {
            Scalar v = C.zs();
            for (const auto& ta : t3[sz(a)])
                for (const auto& tb : t3[sz(b)]) {
                    Scalar q = bilinear(pq.qR, C.e(tb.idx[0]), C.Svec[sz(ta.idx[2])]);
                    if (q.is_zero()) continue;
                    Scalar p = bilinear(pq.pR, C.e(tb.idx[2]), C.Svec[sz(ta.idx[0])]);
                    if (p.is_zero()) continue;
                    Scalar tv = DualCtx::pair(T, C.mul(C.e(tb.idx[1]), C.Svec[sz(ta.idx[1])]));
                    if (!tv.is_zero()) v.add_product(ta.coef * tb.coef * q * p, tv);
                }
            th.via_pq(sz(b), sz(a)) = v;
        }
    }
    VerificationReport& rep = th.report;
    {
        CheckScope sc(rep, "dual.theta_forms_agree",
                      "sigma(S(a_5) (x) alpha(a_6) a_7)(T <- a_4) sigma^-1(S(a_3) (x) beta(S(a_2)) S^2(a_1)) = "
                      "q_R(b_1, S(a_3)) T(b_2 S(a_2)) p_R(b_3, S(a_1))");
        for (int a = 0; a < n; ++a)
            if (th.via_sigma.column(sz(a)) != th.via_pq.column(sz(a)) &&
                sc.fail({{a}, C.show(th.via_sigma.column(sz(a))), C.show(th.via_pq.column(sz(a)))}))
                break;
    }
    {
        CheckScope sc(rep, "dual.theta_bijective", "a -> theta*(T (x) a) is bijective");
        std::size_t r = rank(th.via_pq);
        if (r != sz(n)) sc.fail({{static_cast<int>(r)}, "rank " + std::to_string(r), "rank " + std::to_string(n)});
    }
    {
        // A^* is a right A-comodule through p * f = f_0 p(f_1), i.e. f_0(b) f_1 = b_1 f(b_2).
        CheckScope sc(rep, "dual.theta_colinear", "rho(theta*(T (x) a)) = theta*(T (x) a_1) (x) a_2");
        bool stop = false;
        for (int a = 0; a < n && !stop; ++a) {
            Vec f = th.via_pq.column(sz(a));
            for (int b = 0; b < n && !stop; ++b) {
                Vec l = C.zero(), r = C.zero();
                for (const auto& tb : C.iter(b, 2)) {
                    Scalar co = tb.coef * f[sz(tb.idx[1])];
                    if (!co.is_zero()) l[sz(tb.idx[0])] += co;
                }
                for (const auto& ta : C.iter(a, 2)) {
                    Scalar co = ta.coef * th.via_pq(sz(b), sz(ta.idx[0]));
                    if (!co.is_zero()) r[sz(ta.idx[1])] += co;
                }
                stop = vcmp(C, sc, {a, b}, l, r);
            }
        }
    }
    return th;
}

VerificationReport omega_representation_check(const DualQuasiHopf& A, const Vec& T) {
    DualCtx C(A);
    const int n = C.n;
    Matrix W = omega_T(A, T);
    // column a: b -> omega_T(b, S(e_a))
    Matrix WS = W * A.S;
    VerificationReport rep;
    CheckScope sc(rep, "dual.omega_representation", "every a^* equals omega_T(-, S(a)) for some a");
    for (int j = 0; j < n; ++j) {
        SolutionSet s = solve_linear(WS, C.e(j));
        if (!s.consistent && sc.fail({{j}, A.names[sz(j)], "no solution"})) break;
    }
    return rep;
}

} // namespace qhopf
