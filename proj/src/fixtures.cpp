#include "qhopf/fixtures.hpp"

#include <numeric>

namespace qhopf {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

void require_odd(const FieldSpec& f) {
    if (characteristic(f) == 2) throw Error(ErrorKind::CharTwo, "p_- = (1 - g)/2 needs 1/2");
}

// p_-^v = (1 - v)/2 for a grouplike basis element v
Vec minus_projector(const QuasiHopfAlgebra& H, int v) {
    return vscale(Scalar::from_ratio(H.field(), 1, 2), vsub(H.one(), H.e(v)));
}

// 1 - 2 p (x) p (x) p
Tensor cube_cocycle(const QuasiHopfAlgebra& H, const Vec& p) {
    return H.unit(3) - H.scalar(2) * H.t({p, p, p});
}

QuasiHopfAlgebra with_cocycle(const QuasiHopfAlgebra& G, const Tensor& phi, const Vec& alpha) {
    return make_quasihopf(G.alg, G.co, phi, std::nullopt, Matrix::identity(G.field(), sz(G.dim())), alpha, G.one(),
                          G.names);
}

void require_valid(const std::string& name, const QuasiHopfAlgebra& H) {
    VerificationReport rep = verify_quasihopf(H);
    if (!rep.all_passed())
        throw Error(ErrorKind::InternalInconsistency, name + " fails " + rep.failed_ids().front());
}

} // namespace

QuasiHopfAlgebra group_hopf(const FieldSpec& f, const std::vector<int>& orders) {
    if (orders.empty()) throw Error(ErrorKind::InvalidArgument, "empty list of orders");
    int n = 1;
    for (int o : orders) {
        if (o < 1) throw Error(ErrorKind::InvalidArgument, "group orders must be positive");
        n *= o;
    }
    const std::size_t r = orders.size();
    auto digits = [&](int i) {
        std::vector<int> d(r);
        for (std::size_t k = r; k-- > 0;) {
            d[k] = i % orders[k];
            i /= orders[k];
        }
        return d;
    };
    auto index = [&](const std::vector<int>& d) {
        int i = 0;
        for (std::size_t k = 0; k < r; ++k) i = i * orders[k] + d[k];
        return i;
    };
    std::vector<Scalar> dense(sz(n) * sz(n) * sz(n), Scalar::zero(f));
    Matrix S(f, sz(n), sz(n));
    CoalgebraData co;
    co.field = f;
    co.n = n;
    co.comult.resize(sz(n));
    co.counit.assign(sz(n), Scalar::one(f));
    for (int i = 0; i < n; ++i) {
        auto a = digits(i);
        for (int j = 0; j < n; ++j) {
            auto b = digits(j);
            std::vector<int> c(r);
            for (std::size_t k = 0; k < r; ++k) c[k] = (a[k] + b[k]) % orders[k];
            dense[(sz(i) * sz(n) + sz(j)) * sz(n) + sz(index(c))] = Scalar::one(f);
        }
        std::vector<int> inv(r);
        for (std::size_t k = 0; k < r; ++k) inv[k] = (orders[k] - a[k]) % orders[k];
        S(sz(index(inv)), sz(i)) = Scalar::one(f);
        co.comult[sz(i)].push_back({i, i, Scalar::one(f)});
    }
    AlgebraPtr alg = make_algebra(f, n, dense, basis_vec(f, sz(n), 0));

    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) {
        auto d = digits(i);
        if (r == 1) {
            names.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
        } else if (orders == std::vector<int>{2, 2}) {
            static const char* k[] = {"1", "x", "y", "xy"};
            names.push_back(k[i]);
        } else {
            std::string s = "(";
            for (std::size_t k = 0; k < r; ++k) s += (k ? "," : "") + std::to_string(d[k]);
            names.push_back(s + ")");
        }
    }
    Tensor phi = Tensor::unit(alg, 3);
    return make_quasihopf(alg, co, phi, phi, S, alg->unit, alg->unit, names);
}

QuasiHopfAlgebra h2(const FieldSpec& f) {
    require_odd(f);
    QuasiHopfAlgebra G = group_hopf(f, {2});
    return with_cocycle(G, cube_cocycle(G, minus_projector(G, 1)), G.e(1));
}

QuasiHopfAlgebra klein(const FieldSpec& f, KleinCocycle c) {
    require_odd(f);
    QuasiHopfAlgebra G = group_hopf(f, {2, 2});
    Tensor phix = cube_cocycle(G, minus_projector(G, 1));
    Tensor phiy = cube_cocycle(G, minus_projector(G, 2));
    switch (c) {
    case KleinCocycle::X: return with_cocycle(G, phix, G.e(1));
    case KleinCocycle::XandY: return with_cocycle(G, phix * phiy, G.e(3));
    case KleinCocycle::XY: return with_cocycle(G, cube_cocycle(G, minus_projector(G, 3)), G.e(3));
    }
    throw Error(ErrorKind::InvalidArgument, "unknown cocycle");
}

std::optional<KleinCocycle> parse_klein_cocycle(const std::string& s) {
    if (s == "x") return KleinCocycle::X;
    if (s == "x_and_y" || s == "x_y") return KleinCocycle::XandY;
    if (s == "xy") return KleinCocycle::XY;
    return std::nullopt;
}

QuasiHopfAlgebra c4_hopf(const FieldSpec& f) {
    if (!fourth_root_of_unity(f)) throw Error(ErrorKind::FieldUnsuitable, f.name() + " has no primitive fourth root of unity");
    return group_hopf(f, {4});
}

Scalar h2_omega(const FieldSpec& f, int sign) {
    auto i = fourth_root_of_unity(f);
    if (!i) throw Error(ErrorKind::FieldUnsuitable, f.name() + " has no square root of -1");
    return sign > 0 ? Scalar::one(f) + *i : Scalar::one(f) - *i;
}

QTStructure h2_rmatrix(const QuasiHopfAlgebra& H, int sign) {
    return make_qt(H, h2_rmatrix_candidate(H, h2_omega(H.field(), sign)));
}

C4Chain c4_chain(const FieldSpec& f) {
    auto iu = fourth_root_of_unity(f);
    if (!iu) throw Error(ErrorKind::FieldUnsuitable, f.name() + " has no primitive fourth root of unity");
    C4Chain c{Matrix(f, 4, 4), Matrix(f, 4, 4), Matrix(f, 4, 4)};
    // e1..e4 receive g with the values 1, i, -1, -i
    Vec vals{Scalar::one(f), *iu, -Scalar::one(f), -*iu};
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 4; ++j) c.alpha(sz(j), sz(k)) = vals[sz(j)].pow(k);
    QuasiHopfAlgebra K = group_hopf(f, {2, 2});
    Vec pmx = minus_projector(K, 1), pmy = minus_projector(K, 2);
    Vec ppx = vsub(K.one(), pmx), ppy = vsub(K.one(), pmy);
    c.beta.set_column(0, K.mul(ppx, ppy));
    c.beta.set_column(1, K.mul(pmx, ppy));
    c.beta.set_column(2, K.mul(ppx, pmy));
    c.beta.set_column(3, K.mul(pmx, pmy));
    c.gamma.set_column(0, K.e(0));
    c.gamma.set_column(1, K.e(3));
    c.gamma.set_column(2, vscale(-Scalar::one(f), K.e(1)));
    c.gamma.set_column(3, vscale(-Scalar::one(f), K.e(2)));
    return c;
}

Matrix c4_into_double(const QuantumDouble& Q) {
    const QuasiHopfAlgebra& D = Q.D;
    const FieldSpec& f = D.field();
    if (D.dim() != 4) throw Error(ErrorKind::InvalidArgument, "expects the double of a two-dimensional algebra");
    Vec Y = D.zero();
    Y[0] = Scalar::one(f);
    Y[2] = -Scalar::one(f);
    Matrix m(f, 4, 4);
    Vec p = D.one();
    for (int k = 0; k < 4; ++k) {
        m.set_column(sz(k), p);
        p = D.mul(p, Y);
    }
    return m;
}

std::vector<std::string> fixture_names() {
    return {"h2", "klein_x", "klein_x_y", "klein_xy", "klein", "c2", "c3", "c4",
            "h2xh2", "d_h2", "bos_h2_plus", "bos_h2_minus"};
}

Fixture fixture(const std::string& name, const FieldSpec& f) {
    Fixture fx;
    fx.name = name;
    if (name == "h2") {
        fx.H = h2(f);
        fx.facts = {"involutory", "Phi^-1 = Phi", "f = f^-1 = g(x)p_- + 1(x)p_+"};
    } else if (name == "klein_x" || name == "klein_x_y" || name == "klein_xy") {
        fx.H = klein(f, *parse_klein_cocycle(name.substr(6)));
        if (name == "klein_x") fx.facts = {"equals bos(H(2), R_+-)"};
        if (name == "klein_x_y") fx.facts = {"equals H(2)(x)H(2)"};
        if (name == "klein_xy") fx.facts = {"Phi_xy = (Phi_x Phi_y)_F", "image of D(H(2)) under zeta"};
    } else if (name == "klein") {
        fx.H = group_hopf(f, {2, 2});
    } else if (name == "c2") {
        fx.H = group_hopf(f, {2});
        fx.facts = {"involutory with f = 1(x)1"};
    } else if (name == "c3") {
        fx.H = group_hopf(f, {3});
        fx.facts = {"not semisimple in characteristic 3"};
    } else if (name == "c4") {
        fx.H = c4_hopf(f);
        fx.facts = {"gamma o beta o alpha = zeta_+ as algebra maps"};
    } else if (name == "h2xh2") {
        QuasiHopfAlgebra H = h2(f);
        fx.H = tensor_product(H, H);
        fx.facts = {"equals klein_x_y"};
    } else if (name == "d_h2") {
        QuantumDouble Q = quantum_double(h2(f));
        fx.H = Q.D;
        fx.R = Q.R;
        fx.facts = {"X^2 = 1, Y^2 = X, XY = YX", "R_D = p_+^X(x)1 - p_-^X(x)XY", "involutory"};
    } else if (name == "bos_h2_plus" || name == "bos_h2_minus") {
        QuasiHopfAlgebra H = h2(f);
        Bosonization b = bosonization(H, h2_rmatrix(H, name == "bos_h2_plus" ? 1 : -1));
        fx.H = b.B;
        fx.facts = {"equals klein_x", "independent of the sign"};
    } else {
        throw Error(ErrorKind::InvalidArgument, "unknown fixture '" + name + "'");
    }
    require_valid(name, fx.H);
    if (fx.R) {
        VerificationReport rep = verify_qt(fx.H, fx.R->R);
        if (!rep.all_passed()) throw Error(ErrorKind::InternalInconsistency, name + " fails " + rep.failed_ids().front());
    }
    return fx;
}

} // namespace qhopf
