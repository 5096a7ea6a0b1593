#include "qhopf/repcat.hpp"

#include "qhopf/involutory_pivotal.hpp"

namespace qhopf {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

void add_scaled(Matrix& a, const Scalar& c, const Matrix& b) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!b(i, j).is_zero()) a(i, j).add_product(c, b(i, j));
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

Scalar trace(const Matrix& a) {
    Scalar t = Scalar::zero(a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

Matrix left_mult(const QuasiHopfAlgebra& H, const Vec& h) {
    Matrix m(H.field(), sz(H.dim()), sz(H.dim()));
    for (int j = 0; j < H.dim(); ++j) m.set_column(sz(j), H.mul(h, H.e(j)));
    return m;
}

std::string show_matrix(const Matrix& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + format(m(i, j));
    }
    return s + "]";
}

} // namespace

Matrix HModule::act(const Vec& h) const {
    Matrix r(h.empty() ? FieldSpec::gaussian() : h.front().field(), sz(dim), sz(dim));
    for (std::size_t b = 0; b < h.size(); ++b)
        if (!h[b].is_zero()) add_scaled(r, h[b], rho[b]);
    return r;
}

HModule trivial_module(const QuasiHopfAlgebra& H) {
    return character_module(H, H.co.counit);
}

HModule regular_module(const QuasiHopfAlgebra& H) {
    HModule M;
    M.dim = H.dim();
    for (int b = 0; b < H.dim(); ++b) M.rho.push_back(left_mult(H, H.e(b)));
    return M;
}

HModule character_module(const QuasiHopfAlgebra& H, const Vec& chi) {
    HModule M;
    M.dim = 1;
    for (int b = 0; b < H.dim(); ++b) {
        Matrix m(H.field(), 1, 1);
        m(0, 0) = chi[sz(b)];
        M.rho.push_back(m);
    }
    return M;
}

VerificationReport verify_module(const QuasiHopfAlgebra& H, const HModule& M) {
    VerificationReport rep;
    const FieldSpec& f = H.field();
    bool ok = M.rho.size() == sz(H.dim());
    for (const auto& m : M.rho) ok = ok && m.rows() == sz(M.dim) && m.cols() == sz(M.dim) && m.field() == f;
    if (!ok) {
        rep.fail("module.shape", "one dim x dim matrix per basis element",
                 {{}, std::to_string(M.rho.size()) + " matrices", std::to_string(H.dim())});
        return rep;
    }
    rep.pass("module.shape", "one dim x dim matrix per basis element");
    {
        CheckScope sc(rep, "module.unital", "rho(1) = id");
        Matrix one = M.act(H.one());
        if (!one.is_identity()) sc.fail({{}, show_matrix(one), "id"});
    }
    {
        CheckScope sc(rep, "module.multiplicative", "rho(e_a) rho(e_b) = rho(e_a e_b)");
        bool stop = false;
        for (int a = 0; a < H.dim() && !stop; ++a)
            for (int b = 0; b < H.dim() && !stop; ++b) {
                Matrix l = M.rho[sz(a)] * M.rho[sz(b)];
                Matrix r = M.act(H.mul(H.e(a), H.e(b)));
                if (l != r) stop = sc.fail({{a, b}, show_matrix(l), show_matrix(r)});
            }
    }
    return rep;
}

HModule dual_module(const QuasiHopfAlgebra& H, const HModule& M) {
    HModule D;
    D.dim = M.dim;
    for (int b = 0; b < H.dim(); ++b) D.rho.push_back(M.act(H.antipode(H.e(b))).transpose());
    return D;
}

HModule tensor_module(const QuasiHopfAlgebra& H, const HModule& M, const HModule& N) {
    HModule T;
    T.dim = M.dim * N.dim;
    for (int b = 0; b < H.dim(); ++b) {
        Matrix m(H.field(), sz(T.dim), sz(T.dim));
        for (const auto& [i, j, c] : H.co.comult[sz(b)]) add_scaled(m, c, kron(M.rho[sz(i)], N.rho[sz(j)]));
        T.rho.push_back(m);
    }
    return T;
}

EvCoev ev_coev(const QuasiHopfAlgebra& H, const HModule& M) {
    const FieldSpec& f = H.field();
    const std::size_t m = sz(M.dim);
    EvCoev out;
    Matrix a = M.act(H.alpha), b = M.act(H.beta);
    out.ev = Matrix(f, 1, m * m);
    out.coev = zero_vec(f, m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            out.ev(0, i * m + j) = a(i, j);       // e^i(alpha e_j)
            out.coev[j * m + i] = b(j, i);        // (beta e_i)_j (x) e^i
        }
    HModule Md = dual_module(H, M);
    HModule left = tensor_module(H, Md, M), right = tensor_module(H, M, Md);
    {
        CheckScope sc(out.report, "ev.linear", "ev(h.(phi (x) v)) = eps(h) ev(phi (x) v)");
        for (int c = 0; c < H.dim(); ++c) {
            Matrix l = out.ev * left.rho[sz(c)];
            Matrix r = out.ev;
            for (std::size_t k = 0; k < r.cols(); ++k) r(0, k) = H.co.counit[sz(c)] * r(0, k);
            if (l != r && sc.fail({{c}, show_matrix(l), show_matrix(r)})) break;
        }
    }
    {
        CheckScope sc(out.report, "coev.linear", "h.coev = eps(h) coev");
        for (int c = 0; c < H.dim(); ++c) {
            Vec l = right.rho[sz(c)].apply(out.coev);
            Vec r = vscale(H.co.counit[sz(c)], out.coev);
            if (l != r && sc.fail({{c}, "", ""})) break;
        }
    }
    // (id (x) ev) Phi (coev (x) id) = id and (ev (x) id) Phi^-1 (id (x) coev) = id
    {
        CheckScope sc(out.report, "rigidity.right", "X^1 beta S(X^2) alpha X^3 acts as id");
        Matrix acc(f, m, m);
        for (const auto& t : H.phi.terms()) {
            Matrix p = M.rho[sz(t.idx[0])] * b * M.act(H.antipode(H.e(t.idx[1]))) * a * M.rho[sz(t.idx[2])];
            add_scaled(acc, t.coef, p);
        }
        if (!acc.is_identity()) sc.fail({{}, show_matrix(acc), "id"});
    }
    {
        CheckScope sc(out.report, "rigidity.left", "S(x^1) alpha x^2 beta S(x^3) acts as id");
        Matrix acc(f, m, m);
        for (const auto& t : H.phi_inv.terms()) {
            Matrix p = M.act(H.antipode(H.e(t.idx[0]))) * a * M.rho[sz(t.idx[1])] * b * M.act(H.antipode(H.e(t.idx[2])));
            add_scaled(acc, t.coef, p);
        }
        if (!acc.is_identity()) sc.fail({{}, show_matrix(acc), "id"});
    }
    return out;
}

Scalar categorical_trace(const QuasiHopfAlgebra& H, const HModule& M, const Matrix& a) {
    // sum_i ev_{M*}(a(beta v_i) (x) v^i) = sum_i v^i(S(alpha) a(beta v_i))
    return trace(M.act(H.antipode(H.alpha)) * a * M.act(H.beta));
}

HomSpace hom_space(const QuasiHopfAlgebra& H, const HModule& M, const HModule& N) {
    const FieldSpec& f = H.field();
    const std::size_t m = sz(M.dim), n = sz(N.dim);
    HomSpace out;
    RowReducer red(f, n * m);
    for (int b = 0; b < H.dim(); ++b) {
        const Matrix& rn = N.rho[sz(b)];
        const Matrix& rm = M.rho[sz(b)];
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) {
                Vec row = zero_vec(f, n * m);
                for (std::size_t k = 0; k < n; ++k) row[k * m + c] += rn(r, k);
                for (std::size_t k = 0; k < m; ++k) row[r * m + k] -= rm(k, c);
                if (!is_zero_vec(row)) red.add_equation(row);
            }
    }
    for (const Vec& v : red.solve().kernel) {
        Matrix T(f, n, m);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < m; ++c) T(r, c) = v[r * m + c];
        out.basis.push_back(T);
    }
    HModule W = tensor_module(H, N, dual_module(H, M));
    RowReducer inv(f, sz(W.dim));
    for (int b = 0; b < H.dim(); ++b)
        for (std::size_t r = 0; r < sz(W.dim); ++r) {
            Vec row(W.dim, Scalar::zero(f));
            for (std::size_t k = 0; k < sz(W.dim); ++k) row[k] = W.rho[sz(b)](r, k);
            row[r] -= H.co.counit[sz(b)];
            if (!is_zero_vec(row)) inv.add_equation(row);
        }
    out.invariant_dim = inv.solve().kernel.size();
    return out;
}

MuIso mu_isomorphism(const QuasiHopfAlgebra& H) {
    const FieldSpec& f = H.field();
    const int n = H.dim();
    const std::size_t N = sz(n * n);
    PQElements pq = pq_elements(H);
    MuIso out;
    out.mu = Matrix(f, N, N);
    out.mu_inv = Matrix(f, N, N);
    for (int a = 0; a < n; ++a) {
        Tensor da = H.delta_basis(a);
        for (int b = 0; b < n; ++b) {
            Tensor db = H.delta_basis(b);
            Tensor m = contract(H.alg, {&pq.qL, &db}, {{L(0, 2), L(1, 2)}, {M(H.S_inv, {L(0, 1), L(1, 1)}), K(H.e(a))}});
            Tensor mi = contract(H.alg, {&da, &pq.pL}, {{L(0, 1), L(1, 1), K(H.e(b))}, {L(0, 2), L(1, 2)}});
            out.mu.set_column(sz(a * n + b), m.coeffs());
            out.mu_inv.set_column(sz(a * n + b), mi.coeffs());
        }
    }
    VerificationReport& rep = out.report;
    {
        CheckScope sc(rep, "mu.left_inverse", "mu^-1 o mu = id");
        Matrix p = out.mu_inv * out.mu;
        if (!p.is_identity()) sc.fail({{}, show_matrix(p), "id"});
    }
    {
        CheckScope sc(rep, "mu.right_inverse", "mu o mu^-1 = id");
        Matrix p = out.mu * out.mu_inv;
        if (!p.is_identity()) sc.fail({{}, show_matrix(p), "id"});
    }
    const Matrix I = Matrix::identity(f, sz(n));
    std::vector<Matrix> diag, first;
    for (int c = 0; c < n; ++c) {
        Matrix d(f, N, N);
        for (const auto& [i, j, k] : H.co.comult[sz(c)]) add_scaled(d, k, kron(left_mult(H, H.e(i)), left_mult(H, H.e(j))));
        diag.push_back(d);
        first.push_back(kron(left_mult(H, H.e(c)), I));
    }
    {
        CheckScope sc(rep, "mu.linear", "mu(h.(x (x) y)) = h mu(x (x) y)");
        for (int c = 0; c < n; ++c)
            if (out.mu * diag[sz(c)] != first[sz(c)] * out.mu && sc.fail({{c}, "", ""})) break;
    }
    {
        CheckScope sc(rep, "mu_inv.linear", "mu^-1(h x (x) y) = h.mu^-1(x (x) y)");
        for (int c = 0; c < n; ++c)
            if (out.mu_inv * first[sz(c)] != diag[sz(c)] * out.mu_inv && sc.fail({{c}, "", ""})) break;
    }
    return out;
}

std::vector<Scalar> roots_of_unity(const FieldSpec& f, int d) {
    std::vector<Scalar> out;
    if (d < 1) return out;
    if (f.kind == FieldKind::Prime) {
        const std::uint64_t p = f.modulus;
        if (p > (1u << 22)) throw Error(ErrorKind::FieldUnsuitable, "root search limited to small primes");
        for (std::uint64_t z = 1; z < p; ++z) {
            Scalar s(f, static_cast<std::int64_t>(z));
            if (s.pow(d).is_one()) out.push_back(s);
        }
        return out;
    }
    out.push_back(Scalar::one(f));
    if (d % 2 == 0) out.push_back(-Scalar::one(f));
    if (d % 4 == 0 && f.kind == FieldKind::Gaussian) {
        out.push_back(Scalar::imaginary_unit(f));
        out.push_back(-Scalar::imaginary_unit(f));
    }
    return out;
}

std::vector<Vec> characters(const QuasiHopfAlgebra& H, const std::vector<Vec>& gens, const std::vector<int>& orders) {
    const FieldSpec& f = H.field();
    const int n = H.dim();
    const std::size_t r = gens.size();
    // monomials g_1^a_1 ... g_r^a_r
    std::vector<std::vector<int>> exps{{}};
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<std::vector<int>> next;
        for (const auto& e : exps)
            for (int a = 0; a < orders[k]; ++a) {
                auto e2 = e;
                e2.push_back(a);
                next.push_back(e2);
            }
        exps = next;
    }
    std::vector<Vec> monos;
    for (const auto& e : exps) {
        Vec v = H.one();
        for (std::size_t k = 0; k < r; ++k)
            for (int a = 0; a < e[k]; ++a) v = H.mul(v, gens[k]);
        monos.push_back(v);
    }
    std::vector<std::vector<Scalar>> cand;
    for (std::size_t k = 0; k < r; ++k) cand.push_back(roots_of_unity(f, orders[k]));

    std::vector<Vec> out;
    std::vector<std::size_t> pick(r, 0);
    while (true) {
        bool empty = false;
        for (std::size_t k = 0; k < r; ++k) empty = empty || cand[k].empty();
        if (empty) break;
        RowReducer red(f, sz(n));
        for (std::size_t j = 0; j < monos.size(); ++j) {
            Scalar val = Scalar::one(f);
            for (std::size_t k = 0; k < r; ++k) val *= cand[k][pick[k]].pow(exps[j][k]);
            red.add_equation(monos[j], val);
        }
        SolutionSet s = red.solve();
        if (s.consistent) {
            if (!s.kernel.empty()) throw Error(ErrorKind::InvalidArgument, "generators do not span the algebra");
            const Vec& chi = s.particular;
            bool mult = true;
            for (int a = 0; a < n && mult; ++a)
                for (int b = 0; b < n && mult; ++b) {
                    Vec ab = H.mul(H.e(a), H.e(b));
                    Scalar v = Scalar::zero(f);
                    for (int c = 0; c < n; ++c) v.add_product(ab[sz(c)], chi[sz(c)]);
                    mult = v == chi[sz(a)] * chi[sz(b)];
                }
            Scalar one = Scalar::zero(f);
            for (int c = 0; c < n; ++c) one.add_product(H.one()[sz(c)], chi[sz(c)]);
            if (mult && one.is_one()) out.push_back(chi);
        }
        std::size_t k = 0;
        while (k < r && ++pick[k] == cand[k].size()) pick[k++] = 0;
        if (k == r) break;
    }
    return out;
}

std::optional<Generators> grouplike_generators(const QuasiHopfAlgebra& H) {
    Generators g;
    for (int i = 0; i < H.dim(); ++i) {
        if (H.delta_basis(i) != H.t({H.e(i), H.e(i)})) return std::nullopt;
        if (H.e(i) == H.one()) continue;
        Vec p = H.e(i);
        int order = 1;
        while (p != H.one() && order <= H.dim()) {
            p = H.mul(p, H.e(i));
            ++order;
        }
        if (p != H.one()) return std::nullopt;
        g.gens.push_back(H.e(i));
        g.orders.push_back(order);
    }
    return g;
}

DivisibilityReport divisibility_report(const QuasiHopfAlgebra& H, const std::vector<LabeledModule>& modules) {
    DivisibilityReport out;
    out.semisimple = is_semisimple(H);
    out.involutory = is_involutory(H).holds;
    out.characteristic = characteristic(H.field());
    const std::uint64_t p = out.characteristic;
    for (const auto& lm : modules) {
        DivisibilityEntry e;
        e.label = lm.label;
        e.dim = lm.M.dim;
        e.end_dim = hom_space(H, lm.M, lm.M).basis.size();
        e.absolutely_simple = e.end_dim == 1;
        e.projective = lm.projective;
        e.char_divides = p == 0 ? e.dim == 0 : static_cast<std::uint64_t>(e.dim) % p == 0;
        out.entries.push_back(e);
    }
    {
        CheckScope sc(out.report, "divisibility.absolutely_simple",
                      "semisimple involutory: char does not divide dim of absolutely simple modules");
        if (out.semisimple && out.involutory)
            for (const auto& e : out.entries)
                if (e.absolutely_simple && e.char_divides && sc.fail({{e.dim}, e.label, "char " + std::to_string(p)})) break;
    }
    {
        CheckScope sc(out.report, "divisibility.projective",
                      "non-semisimple involutory: char divides dim of projective modules");
        if (!out.semisimple && out.involutory)
            for (const auto& e : out.entries)
                if (e.projective && !e.char_divides && sc.fail({{e.dim}, e.label, "char " + std::to_string(p)})) break;
    }
    return out;
}

} // namespace qhopf
