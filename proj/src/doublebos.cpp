#include "qhopf/doublebos.hpp"

#include <array>

namespace qhopf {

namespace {

const LegOp I = LegOp::id();
const LegOp D = LegOp::delta();
const LegOp E = LegOp::eps();

bool cmp(const QuasiHopfAlgebra& H, CheckScope& sc, const std::vector<int>& basis, const Tensor& l, const Tensor& r) {
    if (l == r) return false;
    return sc.fail({basis, H.show(l), H.show(r)});
}

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

} // namespace

// ---------------------------------------------------------------------------

VerificationReport verify_qt(const QuasiHopfAlgebra& H, const Tensor& R) {
    VerificationReport rep;
    {
        CheckScope sc(rep, "qt.invertible", "R R^-1 = R^-1 R = 1(x)1");
        try {
            invert_in_tensor_power(R);
        } catch (const Error& e) {
            sc.fail({{}, H.show(R), e.what()});
        }
    }
    {
        CheckScope sc(rep, "qt.delta_left", "(Delta(x)id)(R) = X^2 R^1 x^1 Y^1 (x) X^3 x^3 r^1 Y^2 (x) X^1 R^2 x^2 r^2 Y^3");
        Tensor r = H.phi.permuted({1, 2, 0}) * R.embedded(3, {0, 2}) * H.phi_inv.permuted({0, 2, 1}) *
                   R.embedded(3, {1, 2}) * H.phi;
        cmp(H, sc, {}, H.apply(R, {D, I}), r);
    }
    {
        CheckScope sc(rep, "qt.delta_right", "(id(x)Delta)(R) = x^3 R^1 X^2 r^1 y^1 (x) x^1 X^1 r^2 y^2 (x) x^2 R^2 X^3 y^3");
        Tensor r = H.phi_inv.permuted({2, 0, 1}) * R.embedded(3, {0, 2}) * H.phi.permuted({1, 0, 2}) *
                   R.embedded(3, {0, 1}) * H.phi_inv;
        cmp(H, sc, {}, H.apply(R, {I, D}), r);
    }
    {
        CheckScope sc(rep, "qt.quasi_cocommutative", "Delta^cop(h) R = R Delta(h)");
        bool stop = false;
        for (int i = 0; i < H.dim() && !stop; ++i) {
            Tensor d = H.delta_basis(i);
            stop = cmp(H, sc, {i}, d.permuted({1, 0}) * R, R * d);
        }
    }
    {
        CheckScope sc(rep, "qt.counit", "(eps(x)id)(R) = (id(x)eps)(R) = 1");
        Tensor one = H.t(H.one());
        if (!cmp(H, sc, {0}, H.apply(R, {E, I}), one)) cmp(H, sc, {1}, H.apply(R, {I, E}), one);
    }
    return rep;
}

QTStructure make_qt(const QuasiHopfAlgebra& H, const Tensor& R) {
    VerificationReport rep = verify_qt(H, R);
    if (!rep.all_passed()) throw Error(ErrorKind::InvalidArgument, "not an R-matrix: " + rep.failed_ids().front());
    return {R, invert_in_tensor_power(R)};
}

Tensor h2_rmatrix_candidate(const QuasiHopfAlgebra& H, const Scalar& w) {
    const FieldSpec& f = H.field();
    Scalar half = Scalar::from_ratio(f, 1, 2);
    Vec pm = vscale(half, vsub(H.one(), H.e(1)));
    return H.unit(2) - w * H.t({pm, pm});
}

namespace {

// Coefficient tensors of p(t) = c0 + c1 t + c2 t^2 from the values at t = 0, 1, 2.
std::array<Tensor, 3> interpolate(const Tensor& v0, const Tensor& v1, const Tensor& v2) {
    const FieldSpec& f = v0.field();
    Scalar half = Scalar::from_ratio(f, 1, 2);
    Scalar two(f, 2);
    Tensor c2 = half * (v2 - two * v1 + v0);
    Tensor c1 = v1 - v0 - c2;
    return {v0, c1, c2};
}

} // namespace

RMatrixEnumeration enumerate_rmatrices_h2(const QuasiHopfAlgebra& H) {
    RMatrixEnumeration out;
    const FieldSpec& f = H.field();
    if (H.dim() != 2) throw Error(ErrorKind::InvalidArgument, "enumeration applies to the two-dimensional algebra only");
    if (characteristic(f) == 2) throw Error(ErrorKind::CharTwo, "p_- needs 1/2");

    // (qt4): (eps(x)id)(R) = (id(x)eps)(R) = 1 is linear in the coefficients of R.
    RowReducer red(f, 4);
    for (int j = 0; j < 2; ++j) {
        Vec row(4, Scalar::zero(f)), row2(4, Scalar::zero(f));
        for (int i = 0; i < 2; ++i) {
            row[sz(i * 2 + j)] = H.co.counit[sz(i)];
            row2[sz(j * 2 + i)] = H.co.counit[sz(i)];
        }
        red.add_equation(row, H.one()[sz(j)]);
        red.add_equation(row2, H.one()[sz(j)]);
    }
    SolutionSet s = red.solve();
    if (!s.consistent || s.kernel.size() != 1) {
        out.diagnostic = "counit conditions do not leave a one-parameter family";
        return out;
    }
    auto family = [&](const Scalar& t) {
        Tensor R(H.alg, 2);
        for (std::size_t k = 0; k < 4; ++k) R.at(k) = s.particular[k] + t * s.kernel[0][k];
        return R;
    };
    // (qt1) and (qt2) are quadratic in the parameter.
    auto defect = [&](const Scalar& t) {
        Tensor R = family(t);
        Tensor l1 = H.apply(R, {D, I});
        Tensor r1 = H.phi.permuted({1, 2, 0}) * R.embedded(3, {0, 2}) * H.phi_inv.permuted({0, 2, 1}) *
                    R.embedded(3, {1, 2}) * H.phi;
        Tensor l2 = H.apply(R, {I, D});
        Tensor r2 = H.phi_inv.permuted({2, 0, 1}) * R.embedded(3, {0, 2}) * H.phi.permuted({1, 0, 2}) *
                    R.embedded(3, {0, 1}) * H.phi_inv;
        return std::make_pair(l1 - r1, l2 - r2);
    };
    auto d0 = defect(Scalar(f, 0)), d1 = defect(Scalar(f, 1)), d2 = defect(Scalar(f, 2));
    auto q1 = interpolate(d0.first, d1.first, d2.first);
    auto q2 = interpolate(d0.second, d1.second, d2.second);

    // Pick a coordinate with a genuine quadratic and solve it.
    std::optional<std::array<Scalar, 3>> quad;
    for (std::size_t k = 0; k < q1[0].size() && !quad; ++k)
        if (!q1[2].at(k).is_zero()) quad = std::array<Scalar, 3>{q1[0].at(k), q1[1].at(k), q1[2].at(k)};
    std::vector<Scalar> roots;
    if (!quad) {
        out.diagnostic = "no quadratic constraint found";
        return out;
    }
    const auto& [c0, c1, c2] = *quad;
    Scalar disc = c1 * c1 - Scalar(f, 4) * c2 * c0;
    auto sq = sqrt_exact(disc);
    if (!sq) {
        out.diagnostic = "discriminant " + format(disc) + " is not a square in " + f.name();
        return out;
    }
    Scalar den = Scalar(f, 2) * c2;
    roots.push_back((-c1 + *sq) / den);
    if (!sq->is_zero()) roots.push_back((-c1 - *sq) / den);

    for (const Scalar& t : roots) {
        bool ok = true;
        for (const auto* q : {&q1, &q2})
            for (std::size_t k = 0; k < (*q)[0].size(); ++k)
                if (!((*q)[0].at(k) + t * (*q)[1].at(k) + t * t * (*q)[2].at(k)).is_zero()) ok = false;
        if (!ok) continue;
        Tensor R = family(t);
        VerificationReport rep = verify_qt(H, R);
        if (!rep.all_passed()) continue;
        // R = 1 - w p_- (x) p_-, and p_-(x)p_- has coefficient 1/4 on g(x)g.
        Scalar w = Scalar(f, -4) * (R({1, 1}) - H.unit(2)({1, 1}));
        out.omegas.push_back(w);
        out.found.push_back({R, invert_in_tensor_power(R)});
        out.reports.push_back(std::move(rep));
    }
    if (out.found.empty()) out.diagnostic = "no root satisfies all constraints";
    return out;
}

NonIsoProbe h2_rmatrix_isomorphism_probe(const QuasiHopfAlgebra& H, const Tensor& R_from, const Tensor& R_to) {
    const FieldSpec& f = H.field();
    Scalar half = Scalar::from_ratio(f, 1, 2);
    Vec pm = vscale(half, vsub(H.one(), H.e(1)));
    Vec pp = vscale(half, vadd(H.one(), H.e(1)));
    NonIsoProbe out;
    // nu(p_-) = a p_- + b p_+ is idempotent iff a^2 = a and b^2 = b; both
    // equations t^2 - t = 0 have exactly the roots 0 and 1 in any field.
    std::vector<Scalar> roots{Scalar(f, 0), Scalar(f, 1)};
    for (const auto& a : roots)
        for (const auto& b : roots) {
            Vec nm = vadd(vscale(a, pm), vscale(b, pp));
            Vec np = vsub(H.one(), nm);
            // nu in the basis {1, g}: nu(1) = 1, nu(g) = nu(p_+) - nu(p_-)
            Matrix nu(f, 2, 2);
            nu.set_column(0, H.one());
            nu.set_column(1, vsub(np, nm));
            NonIsoCandidate c{a, b, false, false};
            bool mult = H.mul(nm, nm) == nm;
            c.algebra_automorphism = mult && rank(nu) == 2;
            c.maps_R = map_all_legs(R_from, nu, H.alg) == R_to;
            if (c.algebra_automorphism && c.maps_R) out.isomorphism_found = true;
            out.candidates.push_back(c);
        }
    return out;
}

// ---------------------------------------------------------------------------

Tensor omega_element(const QuasiHopfAlgebra& H, const DrinfeldTwist& tw) {
    const Matrix& Si = H.S_inv;
    Tensor Xd = H.apply(H.apply(H.phi, {D, I, I}), {D, I, I, I});
    Tensor xd = H.apply(H.phi_inv, {I, D, I});
    // staged pairwise so the term count stays a product of two factors
    Tensor a = contract(H.alg, {&Xd, &H.phi_inv},
                        {{L(0, 1), L(1, 1)}, {L(0, 2), L(1, 2)}, {L(0, 3), L(1, 3)}, {L(0, 4)}, {L(0, 5)}});
    Tensor b = contract(H.alg, {&a, &xd},
                        {{L(0, 1), L(1, 1)}, {L(0, 2), L(1, 2)}, {L(0, 3), L(1, 3)}, {L(0, 4), L(1, 4)}, {L(0, 5)}});
    return contract(H.alg, {&b, &tw.f},
                    {{L(0, 1)}, {L(0, 2)}, {L(0, 3)}, {M(Si, {L(1, 1), L(0, 4)})}, {M(Si, {L(1, 2), L(0, 5)})}});
}

Tensor u_element(const QuasiHopfAlgebra& H, const DrinfeldTwist& tw, const PQElements& pq) {
    return contract(H.alg, {&tw.f_inv, &pq.qR}, {{L(0, 1), M(H.S, {L(1, 2)})}, {L(0, 2), M(H.S, {L(1, 1)})}});
}

QuantumDouble quantum_double(const QuasiHopfAlgebra& H) {
    const FieldSpec& f = H.field();
    const int n = H.dim();
    const int N = n * n;
    const Matrix& Si = H.S_inv;
    QuantumDouble Q;
    Q.twist = drinfeld_twist(H);
    Q.pq = pq_elements(H);
    if (!Q.pq.report.all_passed())
        throw Error(ErrorKind::InternalInconsistency, "p/q identities fail: " + Q.pq.report.failed_ids().front());
    Q.omega = omega_element(H, Q.twist);
    Q.U = u_element(H, Q.twist, Q.pq);

    // sw[(u*n + z)*n + v] = e_u e_z e_v
    std::vector<Vec> sw(sz(n * n * n));
    for (int u = 0; u < n; ++u)
        for (int z = 0; z < n; ++z) {
            Vec uz = H.mul(H.e(u), H.e(z));
            for (int v = 0; v < n; ++v) sw[sz((u * n + z) * n + v)] = vmul_right_basis(*H.alg, uz, v);
        }
    auto SW = [&](int u, int z, int v) -> const Vec& { return sw[sz((u * n + z) * n + v)]; };

    // Multiplication:
    // (phi |><| h)(psi |><| h') = [(O^1 -> phi <- O^5)(O^2 h_(1,1) -> psi <- S^-1(h_2) O^4)] |><| O^3 h_(1,2) h'
    std::vector<Scalar> dense(sz(N) * sz(N) * sz(N), Scalar::zero(f));
    for (int c = 0; c < n; ++c) {
        Tensor D3 = H.apply(H.delta_basis(c), {D, I});
        Tensor W = contract(H.alg, {&Q.omega, &D3},
                            {{L(0, 1)}, {L(0, 5)}, {L(0, 2), L(1, 1)}, {M(Si, {L(1, 3)}), L(0, 4)}, {L(0, 3), L(1, 2)}});
        // G[((k*n + a)*n + b)*n + w5]
        std::vector<Scalar> G(sz(n * n * n * n), Scalar::zero(f));
        for (const auto& t : W.terms()) {
            const auto& w = t.idx;
            for (int k = 0; k < n; ++k)
                for (const auto& [k1, k2, d] : H.co.comult[sz(k)]) {
                    const Vec& A = SW(w[1], k1, w[0]);
                    const Vec& B = SW(w[3], k2, w[2]);
                    Scalar cd = t.coef * d;
                    for (int a = 0; a < n; ++a) {
                        if (A[sz(a)].is_zero()) continue;
                        Scalar ca = cd * A[sz(a)];
                        for (int b = 0; b < n; ++b)
                            if (!B[sz(b)].is_zero()) G[sz(((k * n + a) * n + b) * n + w[4])].add_product(ca, B[sz(b)]);
                    }
                }
        }
        for (int k = 0; k < n; ++k)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int w5 = 0; w5 < n; ++w5) {
                        const Scalar& g = G[sz(((k * n + a) * n + b) * n + w5)];
                        if (g.is_zero()) continue;
                        for (int dd = 0; dd < n; ++dd) {
                            Vec v = H.mul(H.e(w5), H.e(dd));
                            std::size_t row = (sz(a * n + c) * sz(N) + sz(b * n + dd)) * sz(N);
                            for (int l = 0; l < n; ++l)
                                if (!v[sz(l)].is_zero()) dense[row + sz(k * n + l)].add_product(g, v[sz(l)]);
                        }
                    }
    }
    Vec unit = zero_vec(f, sz(N));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) unit[sz(i * n + j)] = H.co.counit[sz(i)] * H.one()[sz(j)];
    AlgebraPtr Dalg = make_algebra(f, N, dense, unit);

    Q.iD = Matrix(f, sz(N), sz(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Q.iD(sz(i * n + j), sz(j)) = H.co.counit[sz(i)];
    auto iD = [&](const Vec& h) { return Q.iD.apply(h); };

    // Comultiplication:
    // Delta_D(phi |><| h) = (eps |><| X^1 Y^1) (p^1_1 x^1 -> phi_2 <- Y^2 S^-1(p^2) |><| p^1_2 x^2 h_1)
    //                      (x) (X^2_1 -> phi_1 <- S^-1(X^3) |><| X^2_2 Y^3 x^3 h_2)
    Tensor Xm = H.apply(H.phi, {I, D, I});
    Tensor P3 = H.apply(Q.pq.pR, {D, I});
    std::vector<Tensor> deltas(sz(N));
    for (int c = 0; c < n; ++c) {
        Tensor hc = H.delta_basis(c);
        // Xm^1 X^1, X^2, Xm^2, S^-1(Xm^4), Xm^3 X^3  and  p^1_1 x^1, p^2, p^1_2 x^2 h_1, x^3 h_2
        Tensor Ea = contract(H.alg, {&Xm, &H.phi}, {{L(0, 1), L(1, 1)}, {L(1, 2)}, {L(0, 2)}, {M(Si, {L(0, 4)})}, {L(0, 3), L(1, 3)}});
        Tensor Eb = contract(H.alg, {&P3, &H.phi_inv, &hc}, {{L(0, 1), L(1, 1)}, {L(0, 3)}, {L(0, 2), L(1, 2), L(2, 1)}, {L(1, 3), L(2, 2)}});
        Tensor Ec = contract(H.alg, {&Ea, &Eb},
                             {{L(0, 1)}, {L(1, 1)}, {L(0, 2), M(Si, {L(1, 2)})}, {L(1, 3)}, {L(0, 3)}, {L(0, 4)}, {L(0, 5), L(1, 4)}});
        // per (a, u): arity-2 tensor over D
        std::vector<Tensor> part(sz(n * n), Tensor(Dalg, 2));
        for (const auto& t : Ec.terms()) {
            const auto& w = t.idx;   // u, l1, r1, k1, l2, r2, k2
            for (int z = 0; z < n; ++z) {
                const Vec& first = SW(w[2], z, w[1]);
                if (is_zero_vec(first)) continue;
                for (int ww = 0; ww < n; ++ww) {
                    const Vec& second = SW(w[5], ww, w[4]);
                    if (is_zero_vec(second)) continue;
                    Vec prod = H.mul(second, first);
                    std::size_t flat = sz(z * n + w[3]) * sz(N) + sz(ww * n + w[6]);
                    for (int a = 0; a < n; ++a)
                        if (!prod[sz(a)].is_zero()) part[sz(a * n + w[0])].at(flat).add_product(t.coef, prod[sz(a)]);
                }
            }
        }
        for (int a = 0; a < n; ++a) {
            Tensor sum(Dalg, 2);
            for (int u = 0; u < n; ++u) {
                const Tensor& p = part[sz(a * n + u)];
                if (p.nnz() == 0) continue;
                sum += Tensor::pure(Dalg, {iD(H.e(u)), unit}) * p;
            }
            deltas[sz(a * n + c)] = sum;
        }
    }
    Vec Sia = H.antipode_inv(H.alpha);
    Vec counit = zero_vec(f, sz(N));
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) counit[sz(a * n + c)] = H.co.counit[sz(c)] * Sia[sz(a)];
    CoalgebraData co = coalgebra_from(f, N, deltas, counit);

    Tensor phiD = map_all_legs(H.phi, Q.iD, Dalg);
    Tensor phiDi = map_all_legs(H.phi_inv, Q.iD, Dalg);

    // Antipode:
    // S_D(phi |><| h) = (eps |><| S(h) f^1)(p^1_1 U^1 -> S*^-1(phi) <- f^2 S^-1(p^2) |><| p^1_2 U^2)
    Tensor Es = contract(H.alg, {&Q.twist.f, &P3, &Q.U},
                         {{L(0, 1)}, {L(1, 1), L(2, 1)}, {L(0, 2), M(Si, {L(1, 3)})}, {L(1, 2), L(2, 2)}});
    // V[a*n + f1]: vector over D
    std::vector<Vec> V(sz(n * n), zero_vec(f, sz(N)));
    for (const auto& t : Es.terms()) {
        const auto& w = t.idx;   // f1, l, r, k
        for (int z = 0; z < n; ++z) {
            Vec img = H.antipode_inv(SW(w[2], z, w[1]));
            for (int a = 0; a < n; ++a)
                if (!img[sz(a)].is_zero()) V[sz(a * n + w[0])][sz(z * n + w[3])].add_product(t.coef, img[sz(a)]);
        }
    }
    Matrix SD(f, sz(N), sz(N));
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            Vec col = zero_vec(f, sz(N));
            Vec Sc = H.antipode(H.e(c));
            for (int f1 = 0; f1 < n; ++f1) {
                const Vec& v = V[sz(a * n + f1)];
                if (is_zero_vec(v)) continue;
                col = vadd(col, vmul(*Dalg, iD(vmul_right_basis(*H.alg, Sc, f1)), v));
            }
            SD.set_column(sz(a * n + c), col);
        }

    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) names.push_back("P" + H.names[sz(i)] + "|" + H.names[sz(j)]);

    Q.D = make_quasihopf(Dalg, co, phiD, phiDi, SD, iD(H.alpha), iD(H.beta), names);

    // R_D = sum_i (eps |><| S^-1(p^2) e_i p^1_1) (x) (e^i |><| p^1_2)
    Tensor RD(Dalg, 2);
    for (const auto& t : P3.terms()) {
        const auto& w = t.idx;   // p^1_1, p^1_2, p^2
        for (int i = 0; i < n; ++i) {
            Vec left = iD(vmul_right_basis(*H.alg, vmul_right_basis(*H.alg, H.antipode_inv(H.e(w[2])), i), w[0]));
            Vec right = basis_vec(f, sz(N), sz(i * n + w[1]));
            RD += t.coef * Tensor::pure(Dalg, {left, right});
        }
    }
    Q.R = {RD, invert_in_tensor_power(RD)};

    VerificationReport& rep = Q.report;
    {
        CheckScope sc(rep, "embedding.multiplicative", "i_D(e_i e_j) = i_D(e_i) i_D(e_j), i_D(1) = 1");
        bool stop = Q.D.t(iD(H.one())) != Q.D.t(Q.D.one()) && sc.fail({{}, Q.D.show(iD(H.one())), Q.D.show(Q.D.one())});
        for (int i = 0; i < n && !stop; ++i)
            for (int j = 0; j < n && !stop; ++j) {
                Vec l = iD(H.mul(H.e(i), H.e(j)));
                Vec r = Q.D.mul(iD(H.e(i)), iD(H.e(j)));
                if (l != r) stop = sc.fail({{i, j}, Q.D.show(l), Q.D.show(r)});
            }
    }
    {
        CheckScope sc(rep, "embedding.counit", "eps_D(i_D(h)) = eps(h)");
        for (int i = 0; i < n; ++i) {
            Scalar l = Q.D.eps(iD(H.e(i)));
            if (l != H.co.counit[sz(i)] && sc.fail({{i}, format(l), format(H.co.counit[sz(i)])})) break;
        }
    }
    {
        CheckScope sc(rep, "embedding.injective", "rank i_D = dim H");
        std::size_t r = rank(Q.iD);
        if (r != sz(n)) sc.fail({{}, std::to_string(r), std::to_string(n)});
    }
    return Q;
}

// ---------------------------------------------------------------------------

Factorizability factorizability_map(const QuasiHopfAlgebra& H, const QTStructure& R) {
    DrinfeldTwist tw = drinfeld_twist(H);
    PQElements pq = pq_elements(H);
    Tensor U = u_element(H, tw, pq);
    Tensor Xm = H.apply(H.phi, {I, D, I});   // X^1, X^2_1, X^2_2, X^3
    const Matrix& S = H.S;
    // Q(chi) = < chi, S(X^2_2 p~^2) f^1 R^2 r^1 U^1 X^3 > X^1 S(X^2_1 p~^1) f^2 R^1 r^2 U^2
    Tensor T = contract(H.alg, {&Xm, &pq.pL, &tw.f, &R.R, &R.R, &U},
                        {{M(S, {L(0, 3), L(1, 2)}), L(2, 1), L(3, 2), L(4, 1), L(5, 1), L(0, 4)},
                         {L(0, 1), M(S, {L(0, 2), L(1, 1)}), L(2, 2), L(3, 1), L(4, 2), L(5, 2)}});
    const std::size_t n = sz(H.dim());
    Factorizability out;
    out.Q = Matrix(H.field(), n, n);
    for (const auto& t : T.terms()) out.Q(sz(t.idx[1]), sz(t.idx[0])) += t.coef;
    out.factorizable = rank(out.Q) == n;
    return out;
}

MorphismCertificate is_quasihopf_morphism(const Matrix& nu, const QuasiHopfAlgebra& H, const QuasiHopfAlgebra& K) {
    MorphismCertificate out;
    out.map = nu;
    VerificationReport& rep = out.checks;
    const int n = H.dim();
    if (static_cast<int>(nu.cols()) != n || static_cast<int>(nu.rows()) != K.dim()) {
        rep.fail("morphism.shape", "nu : H -> K", {{}, std::to_string(nu.rows()) + "x" + std::to_string(nu.cols()),
                                                    std::to_string(K.dim()) + "x" + std::to_string(n)});
        return out;
    }
    auto img = [&](const Vec& v) { return nu.apply(v); };
    std::vector<Vec> im(sz(n));
    for (int i = 0; i < n; ++i) im[sz(i)] = img(H.e(i));
    {
        CheckScope sc(rep, "morphism.multiplicative", "nu(e_i e_j) = nu(e_i) nu(e_j)");
        bool stop = false;
        for (int i = 0; i < n && !stop; ++i)
            for (int j = 0; j < n && !stop; ++j) {
                Vec l = img(H.mul(H.e(i), H.e(j)));
                Vec r = K.mul(im[sz(i)], im[sz(j)]);
                if (l != r) stop = sc.fail({{i, j}, K.show(l), K.show(r)});
            }
    }
    {
        CheckScope sc(rep, "morphism.unital", "nu(1) = 1");
        Vec l = img(H.one());
        if (l != K.one()) sc.fail({{}, K.show(l), K.show(K.one())});
    }
    {
        CheckScope sc(rep, "morphism.comultiplicative", "(nu(x)nu)(Delta(h)) = Delta(nu(h))");
        for (int i = 0; i < n; ++i) {
            Tensor l = map_all_legs(H.delta_basis(i), nu, K.alg);
            Tensor r = K.delta(im[sz(i)]);
            if (l != r && sc.fail({{i}, K.show(l), K.show(r)})) break;
        }
    }
    {
        CheckScope sc(rep, "morphism.counital", "eps(nu(h)) = eps(h)");
        for (int i = 0; i < n; ++i) {
            Scalar l = K.eps(im[sz(i)]);
            if (l != H.co.counit[sz(i)] && sc.fail({{i}, format(l), format(H.co.counit[sz(i)])})) break;
        }
    }
    {
        CheckScope sc(rep, "morphism.phi", "(nu(x)nu(x)nu)(Phi_H) = Phi_K");
        Tensor l = map_all_legs(H.phi, nu, K.alg);
        if (l != K.phi) sc.fail({{}, K.show(l), K.show(K.phi)});
    }
    {
        CheckScope sc(rep, "morphism.antipode", "nu(S(h)) = S(nu(h))");
        for (int i = 0; i < n; ++i) {
            Vec l = img(H.antipode(H.e(i)));
            Vec r = K.antipode(im[sz(i)]);
            if (l != r && sc.fail({{i}, K.show(l), K.show(r)})) break;
        }
    }
    {
        CheckScope sc(rep, "morphism.alpha", "nu(alpha_H) = alpha_K");
        Vec l = img(H.alpha);
        if (l != K.alpha) sc.fail({{}, K.show(l), K.show(K.alpha)});
    }
    {
        CheckScope sc(rep, "morphism.beta", "nu(beta_H) = beta_K");
        Vec l = img(H.beta);
        if (l != K.beta) sc.fail({{}, K.show(l), K.show(K.beta)});
    }
    {
        CheckScope sc(rep, "morphism.bijective", "nu invertible");
        std::size_t r = rank(nu);
        if (nu.rows() != nu.cols() || r != nu.cols()) sc.fail({{}, "rank " + std::to_string(r), std::to_string(nu.cols())});
    }
    return out;
}

// ---------------------------------------------------------------------------

Tensor double_twist_element(const QuasiHopfAlgebra& H, const QTStructure& R, const AlgebraPtr& hh) {
    Tensor Yd = H.apply(H.phi, {D, I, I});        // Y^1_1, Y^1_2, Y^2, Y^3
    Tensor yd = H.apply(H.phi_inv, {D, I, I});    // y^1_1, y^1_2, y^2, y^3
    // F = Y^1_1 x^1 X^1 y^1_1 (x) Y^1_2 x^2 R^2 X^3 y^2 (x) Y^2 x^3 R^1 X^2 y^1_2 (x) Y^3 y^3
    Tensor F4 = contract(H.alg, {&Yd, &H.phi_inv, &R.R, &H.phi, &yd},
                         {{L(0, 1), L(1, 1), L(3, 1), L(4, 1)},
                          {L(0, 2), L(1, 2), L(2, 2), L(3, 3), L(4, 3)},
                          {L(0, 3), L(1, 3), L(2, 1), L(3, 2), L(4, 2)},
                          {L(0, 4), L(4, 4)}});
    return F4.regrouped(hh, 2);
}

DoubleIso double_iso(const QuasiHopfAlgebra& H, const QTStructure& R, const QuantumDouble* Dp) {
    Factorizability fz = factorizability_map(H, R);
    if (!fz.factorizable) throw Error(ErrorKind::NotFactorizable, "the map Q is not bijective");
    const FieldSpec& f = H.field();
    const int n = H.dim();
    const int N = n * n;
    DoubleIso out;
    out.HH = tensor_product(H, H);
    out.F = make_twist(out.HH, double_twist_element(H, R, out.HH.alg));
    DrinfeldTwist tw = drinfeld_twist(H);
    PQElements pq = pq_elements(H);
    Tensor U2 = contract(H.alg, {&R.R_inv, &tw.f_inv}, {{L(0, 1), L(1, 2)}, {L(0, 2), L(1, 1)}});
    out.U = U2.regrouped(out.HH.alg, 1).as_vec();
    out.target = antipode_transform(gauge_twist(out.HH, out.F), out.U);

    // pi(phi |><| h) = phi(q^2 R^1) q^1 R^2 h,  pi~(phi |><| h) = phi(q^2 Rb^2) q^1 Rb^1 h
    Tensor T = contract(H.alg, {&pq.qR, &R.R}, {{L(0, 2), L(1, 1)}, {L(0, 1), L(1, 2)}});
    Tensor Tt = contract(H.alg, {&pq.qR, &R.R_inv}, {{L(0, 2), L(1, 2)}, {L(0, 1), L(1, 1)}});
    auto projection = [&](const Tensor& t) {
        Matrix m(f, sz(n), sz(N));
        for (const auto& term : t.terms()) {
            int a = term.idx[0];
            for (int c = 0; c < n; ++c) {
                Vec v = vmul_right_basis(*H.alg, H.e(term.idx[1]), c);
                for (int k = 0; k < n; ++k)
                    if (!v[sz(k)].is_zero()) m(sz(k), sz(a * n + c)).add_product(term.coef, v[sz(k)]);
            }
        }
        return m;
    };
    out.pi = projection(T);
    out.pi_tilde = projection(Tt);

    std::optional<QuantumDouble> own;
    if (!Dp) {
        own = quantum_double(H);
        Dp = &*own;
    }
    const QuasiHopfAlgebra& DD = Dp->D;

    auto build = [&](ZetaOrder order) {
        const Matrix& first = order == ZetaOrder::TildeFirst ? out.pi_tilde : out.pi;
        const Matrix& second = order == ZetaOrder::TildeFirst ? out.pi : out.pi_tilde;
        Matrix z(f, sz(N), sz(N));
        for (int b = 0; b < N; ++b) {
            Vec col = zero_vec(f, sz(N));
            for (const auto& t : DD.delta_basis(b).terms()) {
                Vec u = first.column(sz(t.idx[0]));
                Vec v = second.column(sz(t.idx[1]));
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) col[sz(i * n + j)].add_product(t.coef, u[sz(i)] * v[sz(j)]);
            }
            z.set_column(sz(b), col);
        }
        return z;
    };
    out.zeta = build(ZetaOrder::TildeFirst);
    out.cert = is_quasihopf_morphism(out.zeta, DD, out.target);
    out.zeta_swapped = build(ZetaOrder::PiFirst);
    out.cert_swapped = is_quasihopf_morphism(out.zeta_swapped, DD, out.target);
    if (!out.cert.valid()) out.notes.push_back("pi~(D_1)(x)pi(D_2) fails " + out.cert.checks.failed_ids().front());
    if (!out.cert_swapped.valid())
        out.notes.push_back("pi(D_1)(x)pi~(D_2) fails " + out.cert_swapped.checks.failed_ids().front());
    return out;
}

// ---------------------------------------------------------------------------

Bosonization bosonization(const QuasiHopfAlgebra& H, const QTStructure& R) {
    const FieldSpec& f = H.field();
    const int n = H.dim();
    const int N = n * n;
    const Matrix& S = H.S;
    DrinfeldTwist tw = drinfeld_twist(H);
    PQElements pq = pq_elements(H);
    Bosonization out;

    // h |> h' = h_1 h' S(h_2)
    out.action.assign(sz(n * n), Vec());
    for (int i = 0; i < n; ++i) {
        Tensor d = H.delta_basis(i);
        for (int j = 0; j < n; ++j)
            out.action[sz(i * n + j)] = contract(H.alg, {&d}, {{L(0, 1), K(H.e(j)), M(S, {L(0, 2)})}}).as_vec();
    }
    // h o h' = X^1 h S(x^1 X^2) alpha x^2 X^3_1 h' S(x^3 X^3_2)
    Tensor X4 = H.apply(H.phi, {I, I, D});
    out.circ.assign(sz(n * n), Vec());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.circ[sz(i * n + j)] =
                contract(H.alg, {&X4, &H.phi_inv},
                         {{L(0, 1), K(H.e(i)), M(S, {L(1, 1), L(0, 2)}), K(H.alpha), L(1, 2), L(0, 3), K(H.e(j)),
                           M(S, {L(1, 3), L(0, 4)})}})
                    .as_vec();
    out.circ_is_original = true;
    out.action_trivial = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (out.circ[sz(i * n + j)] != H.mul(H.e(i), H.e(j))) out.circ_is_original = false;
            if (out.action[sz(i * n + j)] != vscale(H.co.counit[sz(i)], H.e(j))) out.action_trivial = false;
        }
    const auto& act = out.action;
    const auto& circ = out.circ;

    // (b x h)(b' x h') = (x^1 |> b) o (x^2 h_1 |> b') x x^3 h_2 h'
    std::vector<Scalar> dense(sz(N) * sz(N) * sz(N), Scalar::zero(f));
    for (int h = 0; h < n; ++h) {
        Tensor dh = H.delta_basis(h);
        for (int b = 0; b < n; ++b)
            for (int b2 = 0; b2 < n; ++b2)
                for (int h2 = 0; h2 < n; ++h2) {
                    Tensor T = contract(H.alg, {&H.phi_inv, &dh},
                                        {{L(0, 1)}, {K(H.e(b))}, {L(0, 2), L(1, 1)}, {K(H.e(b2))}, {L(0, 3), L(1, 2), K(H.e(h2))}});
                    T = merge_legs(T, 0, 1, act);
                    T = merge_legs(T, 1, 2, act);
                    T = merge_legs(T, 0, 1, circ);
                    std::size_t row = (sz(b * n + h) * sz(N) + sz(b2 * n + h2)) * sz(N);
                    for (const auto& t : T.terms()) dense[row + sz(t.idx[0] * n + t.idx[1])] += t.coef;
                }
    }
    AlgebraPtr Balg = make_algebra(f, N, dense, kron(H.beta, H.one()));

    // Underlined comultiplication:
    // b_1 (x) b_2 = x^1 X^1 b_1 g^1 S(x^2 R^2 y^3 X^3_2) (x) x^3 R^1 |> y^1 X^2 b_2 g^2 S(y^2 X^3_1)
    std::vector<Tensor> und(sz(n));
    for (int b = 0; b < n; ++b) {
        Tensor db = H.delta_basis(b);
        Tensor T = contract(H.alg, {&H.phi_inv, &X4, &db, &R.R, &H.phi_inv, &tw.f_inv},
                            {{L(0, 1), L(1, 1), L(2, 1), L(5, 1), M(S, {L(0, 2), L(3, 2), L(4, 3), L(1, 4)})},
                             {L(0, 3), L(3, 1)},
                             {L(4, 1), L(1, 2), L(2, 2), L(5, 2), M(S, {L(4, 2), L(1, 3)})}});
        und[sz(b)] = merge_legs(T, 1, 2, act);
    }
    // Delta(b x h) = y^1 X^1 |> b_1 x y^2 Y^1 R^2 x^2 X^3_1 h_1 (x) y^3_1 Y^2 R^1 x^1 X^2 |> b_2 x y^3_2 Y^3 x^3 X^3_2 h_2
    Tensor y4 = H.apply(H.phi_inv, {I, I, D});
    std::vector<Tensor> deltas(sz(N));
    for (int b = 0; b < n; ++b)
        for (int h = 0; h < n; ++h) {
            Tensor dh = H.delta_basis(h);
            Tensor T = contract(H.alg, {&y4, &X4, &und[sz(b)], &H.phi, &R.R, &H.phi_inv, &dh},
                                {{L(0, 1), L(1, 1)},
                                 {L(2, 1)},
                                 {L(0, 2), L(3, 1), L(4, 2), L(5, 2), L(1, 3), L(6, 1)},
                                 {L(0, 3), L(3, 2), L(4, 1), L(5, 1), L(1, 2)},
                                 {L(2, 2)},
                                 {L(0, 4), L(3, 3), L(5, 3), L(1, 4), L(6, 2)}});
            T = merge_legs(T, 0, 1, act);
            T = merge_legs(T, 2, 3, act);
            deltas[sz(b * n + h)] = T.regrouped(Balg, 2);
        }
    CoalgebraData co = coalgebra_from(f, N, deltas, kron(H.co.counit, H.co.counit));

    // Phi = beta x X^1 (x) beta x X^2 (x) beta x X^3
    Tensor phiB(Balg, 3);
    for (const auto& t : H.phi.terms())
        phiB += t.coef * Tensor::pure(Balg, {kron(H.beta, H.e(t.idx[0])), kron(H.beta, H.e(t.idx[1])),
                                             kron(H.beta, H.e(t.idx[2]))});

    // S_H0(b) = X^1 R^2 p^2 S(q^1 (X^2 R^1 p^1 |> b) S(q^2) X^3)
    Tensor Ts = contract(H.alg, {&H.phi, &R.R, &pq.pR, &pq.qR},
                         {{L(0, 1), L(1, 2), L(2, 2)}, {L(0, 2), L(1, 1), L(2, 1)}, {L(3, 1)}, {M(S, {L(3, 2)}), L(0, 3)}});
    auto S_H0 = [&](int b) {
        Vec r = H.zero();
        for (const auto& t : Ts.terms()) {
            const Vec& moved = act[sz(t.idx[1] * n + b)];
            Vec inner = H.mul({H.e(t.idx[2]), moved, H.e(t.idx[3])});
            r = vadd(r, vscale(t.coef, H.mul(H.e(t.idx[0]), H.antipode(inner))));
        }
        return r;
    };
    // s(b x h) = (beta x S(X^1 x^1_1 R^2 h) alpha)(X^2 x^1_2 R^1 |> S_H0(b) x X^3 x^2 beta S(x^3))
    Tensor x4 = H.apply(H.phi_inv, {D, I, I});
    Matrix SB(f, sz(N), sz(N));
    for (int b = 0; b < n; ++b) {
        Vec sb = S_H0(b);
        for (int h = 0; h < n; ++h) {
            Tensor T = contract(H.alg, {&H.phi, &x4, &R.R},
                                {{M(S, {L(0, 1), L(1, 1), L(2, 2), K(H.e(h))}), K(H.alpha)},
                                 {L(0, 2), L(1, 2), L(2, 1)},
                                 {L(0, 3), L(1, 3), K(H.beta), M(S, {L(1, 4)})}});
            Vec col = zero_vec(f, sz(N));
            for (const auto& t : T.terms()) {
                Vec left = kron(H.beta, H.e(t.idx[0]));
                Vec moved = zero_vec(f, sz(n));
                for (int k = 0; k < n; ++k)
                    if (!sb[sz(k)].is_zero()) moved = vadd(moved, vscale(sb[sz(k)], act[sz(t.idx[1] * n + k)]));
                Vec right = kron(moved, H.e(t.idx[2]));
                col = vadd(col, vscale(t.coef, vmul(*Balg, left, right)));
            }
            SB.set_column(sz(b * n + h), col);
        }
    }

    std::vector<std::string> names;
    for (int b = 0; b < n; ++b)
        for (int h = 0; h < n; ++h) names.push_back(H.names[sz(b)] + "*" + H.names[sz(h)]);
    out.B = make_quasihopf(Balg, co, phiB, std::nullopt, SB, kron(H.beta, H.alpha), kron(H.beta, H.beta), names);
    return out;
}

} // namespace qhopf
