#include "qhopf/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace qhopf {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

struct Line {
    int number;
    std::vector<std::string> tok;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream is(text);
    std::string raw;
    int no = 0;
    while (std::getline(is, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line l{no, {}};
        std::string t;
        while (ls >> t) l.tok.push_back(t);
        if (!l.tok.empty()) out.push_back(std::move(l));
    }
    return out;
}

[[noreturn]] void perr(int line, const std::string& msg) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

int parse_index(const Line& l, const std::string& t, int n) {
    std::size_t used = 0;
    int v = -1;
    try {
        v = std::stoi(t, &used);
    } catch (const std::exception&) {
        perr(l.number, "expected an index, got '" + t + "'");
    }
    if (used != t.size()) perr(l.number, "expected an index, got '" + t + "'");
    if (v < 0 || v >= n) perr(l.number, "index " + t + " out of range 0.." + std::to_string(n - 1));
    return v;
}

Scalar parse_value(const Line& l, const FieldSpec& f, const std::string& t) {
    try {
        return parse_scalar(f, t);
    } catch (const Error& e) {
        perr(l.number, e.what());
    }
}

struct Entry {
    std::vector<int> idx;
    Scalar value;
};

const std::map<std::string, int>& section_arity() {
    static const std::map<std::string, int> m = {{"mult", 3},  {"unit", 1},    {"comult", 3},   {"counit", 1}, {"phi", 3},
                                                 {"phi_inv", 3}, {"antipode", 2}, {"alpha", 1}, {"beta", 1}};
    return m;
}

struct RawStructure {
    bool dual = false;
    FieldSpec field;
    int n = 0;
    std::vector<std::string> names;
    std::map<std::string, std::vector<Entry>> sections;
    int last_line = 0;

    bool has(const std::string& s) const { return sections.count(s) > 0; }
    const std::vector<Entry>& get(const std::string& s) const {
        auto it = sections.find(s);
        if (it == sections.end()) throw Error(ErrorKind::Parse, "line " + std::to_string(last_line) + ": missing section " + s);
        return it->second;
    }
};

RawStructure parse_raw(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    RawStructure r;
    std::size_t p = 0;
    auto expect = [&](const std::string& kw) -> const Line& {
        if (p >= lines.size()) perr(lines.empty() ? 1 : lines.back().number, "expected '" + kw + "'");
        const Line& l = lines[p];
        if (l.tok[0] != kw) perr(l.number, "expected '" + kw + "', got '" + l.tok[0] + "'");
        ++p;
        return l;
    };
    if (p < lines.size() && lines[p].tok[0] == "dual") {
        if (lines[p].tok.size() != 1) perr(lines[p].number, "unexpected tokens after 'dual'");
        r.dual = true;
        ++p;
    }
    {
        const Line& l = expect("field");
        std::string spec;
        for (std::size_t i = 1; i < l.tok.size(); ++i) spec += (i > 1 ? " " : "") + l.tok[i];
        try {
            r.field = parse_field(spec);
        } catch (const Error& e) {
            perr(l.number, e.what());
        }
    }
    {
        const Line& l = expect("dim");
        if (l.tok.size() != 2) perr(l.number, "expected 'dim n'");
        r.n = parse_index(l, l.tok[1], 1 << 20) ;
        if (r.n < 1) perr(l.number, "dimension must be positive");
    }
    {
        const Line& l = expect("basis");
        if (static_cast<int>(l.tok.size()) != r.n + 1) perr(l.number, "expected " + std::to_string(r.n) + " basis names");
        r.names.assign(l.tok.begin() + 1, l.tok.end());
    }
    std::vector<Entry>* cur = nullptr;
    int arity = 0;
    bool ended = false;
    for (; p < lines.size(); ++p) {
        const Line& l = lines[p];
        r.last_line = l.number;
        if (ended) perr(l.number, "content after 'end'");
        const std::string& head = l.tok[0];
        if (head == "end") {
            if (l.tok.size() != 1) perr(l.number, "unexpected tokens after 'end'");
            ended = true;
            continue;
        }
        auto sec = section_arity().find(head);
        if (sec != section_arity().end()) {
            if (l.tok.size() != 1) perr(l.number, "section keyword must stand alone");
            if (r.sections.count(head)) perr(l.number, "duplicate section " + head);
            cur = &r.sections[head];
            arity = sec->second;
            continue;
        }
        if (!cur) perr(l.number, "entry outside any section");
        if (static_cast<int>(l.tok.size()) != arity + 1)
            perr(l.number, "expected " + std::to_string(arity) + " indices and a scalar");
        Entry e;
        for (int i = 0; i < arity; ++i) e.idx.push_back(parse_index(l, l.tok[sz(i)], r.n));
        e.value = parse_value(l, r.field, l.tok[sz(arity)]);
        cur->push_back(std::move(e));
    }
    if (!ended) perr(lines.empty() ? 1 : lines.back().number, "missing 'end'");
    return r;
}

std::vector<Scalar> dense3(const RawStructure& r, const std::vector<Entry>& es) {
    std::vector<Scalar> d(sz(r.n) * sz(r.n) * sz(r.n), Scalar::zero(r.field));
    for (const auto& e : es) d[(sz(e.idx[0]) * sz(r.n) + sz(e.idx[1])) * sz(r.n) + sz(e.idx[2])] += e.value;
    return d;
}

Vec dense1(const RawStructure& r, const std::vector<Entry>& es) {
    Vec v = zero_vec(r.field, sz(r.n));
    for (const auto& e : es) v[sz(e.idx[0])] += e.value;
    return v;
}

Matrix dense2(const RawStructure& r, const std::vector<Entry>& es) {
    Matrix m(r.field, sz(r.n), sz(r.n));
    for (const auto& e : es) m(sz(e.idx[0]), sz(e.idx[1])) += e.value;
    return m;
}

// The two-sided unit of the product table, when not listed.
Vec derive_unit(const RawStructure& r, const std::vector<Scalar>& mult) {
    const std::size_t n = sz(r.n);
    RowReducer rr(r.field, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            Vec left(n, Scalar::zero(r.field)), right(n, Scalar::zero(r.field));
            for (std::size_t i = 0; i < n; ++i) {
                left[i] = mult[(i * n + j) * n + k];
                right[i] = mult[(j * n + i) * n + k];
            }
            Scalar rhs = j == k ? Scalar::one(r.field) : Scalar::zero(r.field);
            rr.add_equation(left, rhs);
            rr.add_equation(right, rhs);
        }
    SolutionSet s = rr.solve();
    if (!s.consistent) throw Error(ErrorKind::Parse, "line " + std::to_string(r.last_line) + ": product has no unit");
    return s.particular;
}

CoalgebraData coalgebra(const RawStructure& r) {
    CoalgebraData co;
    co.field = r.field;
    co.n = r.n;
    co.comult.resize(sz(r.n));
    std::vector<Scalar> d = dense3(r, r.get("comult"));
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j)
            for (int k = 0; k < r.n; ++k) {
                const Scalar& v = d[(sz(i) * sz(r.n) + sz(j)) * sz(r.n) + sz(k)];
                if (!v.is_zero()) co.comult[sz(i)].emplace_back(j, k, v);
            }
    co.counit = dense1(r, r.get("counit"));
    return co;
}

AlgebraPtr algebra(const RawStructure& r) {
    std::vector<Scalar> m = dense3(r, r.get("mult"));
    Vec unit = r.has("unit") ? dense1(r, r.get("unit")) : derive_unit(r, m);
    return make_algebra(r.field, r.n, m, unit);
}

class Writer {
public:
    explicit Writer(std::ostringstream& os) : os_(os) {}
    void section(const std::string& name) { os_ << name << "\n"; }
    void entry(std::initializer_list<std::size_t> idx, const Scalar& v) {
        if (v.is_zero()) return;
        for (std::size_t i : idx) os_ << i << " ";
        os_ << format(v) << "\n";
    }
    void vec(const std::string& name, const Vec& v) {
        section(name);
        for (std::size_t i = 0; i < v.size(); ++i) entry({i}, v[i]);
    }
    void cube(const std::string& name, const std::vector<Scalar>& c, std::size_t n) {
        section(name);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) entry({i, j, k}, c[(i * n + j) * n + k]);
    }
    void matrix(const std::string& name, const Matrix& m) {
        section(name);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) entry({i, j}, m(i, j));
    }

private:
    std::ostringstream& os_;
};

void header(std::ostringstream& os, const FieldSpec& f, int n, const std::vector<std::string>& names) {
    os << "field " << f.name() << "\n";
    os << "dim " << n << "\n";
    os << "basis";
    for (const auto& s : names) os << " " << s;
    os << "\n";
}

std::vector<Scalar> comult_cube(const CoalgebraData& co) {
    const std::size_t n = sz(co.n);
    std::vector<Scalar> d(n * n * n, Scalar::zero(co.field));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [j, k, v] : co.comult[i]) d[(i * n + sz(j)) * n + sz(k)] += v;
    return d;
}

void check_names(const std::vector<std::string>& names) {
    for (const auto& s : names)
        if (s.empty() || s.find_first_of(" \t\n#") != std::string::npos)
            throw Error(ErrorKind::InvalidArgument, "basis name '" + s + "' cannot be written");
}

} // namespace

std::string emit_structure(const QuasiHopfAlgebra& H) {
    check_names(H.names);
    std::ostringstream os;
    const std::size_t n = sz(H.dim());
    header(os, H.field(), H.dim(), H.names);
    Writer w(os);
    w.cube("mult", dense_mult(*H.alg), n);
    w.vec("unit", H.one());
    w.cube("comult", comult_cube(H.co), n);
    w.vec("counit", H.co.counit);
    w.cube("phi", H.phi.coeffs(), n);
    w.cube("phi_inv", H.phi_inv.coeffs(), n);
    w.matrix("antipode", H.S);
    w.vec("alpha", H.alpha);
    w.vec("beta", H.beta);
    os << "end\n";
    return os.str();
}

QuasiHopfAlgebra parse_structure(const std::string& text) {
    RawStructure r = parse_raw(text);
    if (r.dual) throw Error(ErrorKind::Parse, "line 1: dual structure where a quasi-Hopf algebra was expected");
    AlgebraPtr alg = algebra(r);
    CoalgebraData co = coalgebra(r);
    auto cube_tensor = [&](const std::vector<Entry>& es) {
        Tensor t(alg, 3);
        std::vector<Scalar> d = dense3(r, es);
        for (std::size_t i = 0; i < d.size(); ++i) t.at(i) = d[i];
        return t;
    };
    std::optional<Tensor> phi_inv;
    if (r.has("phi_inv")) phi_inv = cube_tensor(r.get("phi_inv"));
    return make_quasihopf(alg, co, cube_tensor(r.get("phi")), phi_inv, dense2(r, r.get("antipode")), dense1(r, r.get("alpha")),
                          dense1(r, r.get("beta")), r.names);
}

std::string emit_dual(const DualQuasiHopf& A) {
    check_names(A.names);
    std::ostringstream os;
    const std::size_t n = sz(A.dim());
    os << "dual\n";
    header(os, A.field(), A.dim(), A.names);
    Writer w(os);
    w.cube("mult", dense_mult(*A.alg), n);
    w.vec("unit", A.alg->unit);
    w.cube("comult", comult_cube(A.co), n);
    w.vec("counit", A.co.counit);
    w.cube("phi", A.phi, n);
    w.cube("phi_inv", A.phi_inv, n);
    w.matrix("antipode", A.S);
    w.vec("alpha", A.alpha);
    w.vec("beta", A.beta);
    os << "end\n";
    return os.str();
}

DualQuasiHopf parse_dual(const std::string& text) {
    RawStructure r = parse_raw(text);
    if (!r.dual) throw Error(ErrorKind::Parse, "line 1: expected the 'dual' header");
    std::optional<std::vector<Scalar>> phi_inv;
    if (r.has("phi_inv")) phi_inv = dense3(r, r.get("phi_inv"));
    return make_dual(algebra(r), coalgebra(r), dense3(r, r.get("phi")), phi_inv, dense2(r, r.get("antipode")),
                     dense1(r, r.get("alpha")), dense1(r, r.get("beta")), r.names);
}

bool is_dual_text(const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    return !lines.empty() && lines.front().tok[0] == "dual";
}

std::string emit_module(const QuasiHopfAlgebra& H, const HModule& M) {
    std::ostringstream os;
    os << "field " << H.field().name() << "\n";
    os << "module dim " << M.dim << "\n";
    for (std::size_t i = 0; i < M.rho.size(); ++i) {
        os << "act " << i << "\n";
        for (std::size_t r = 0; r < sz(M.dim); ++r) {
            for (std::size_t c = 0; c < sz(M.dim); ++c) os << (c ? " " : "") << format(M.rho[i](r, c));
            os << "\n";
        }
    }
    os << "end\n";
    return os.str();
}

HModule parse_module(const FieldSpec& expected, int algebra_dim, const std::string& text) {
    std::vector<Line> lines = tokenize(text);
    std::size_t p = 0;
    auto need = [&](const std::string& kw) -> const Line& {
        if (p >= lines.size()) perr(lines.empty() ? 1 : lines.back().number, "expected '" + kw + "'");
        if (lines[p].tok[0] != kw) perr(lines[p].number, "expected '" + kw + "', got '" + lines[p].tok[0] + "'");
        return lines[p++];
    };
    FieldSpec f;
    {
        const Line& l = need("field");
        std::string spec;
        for (std::size_t i = 1; i < l.tok.size(); ++i) spec += (i > 1 ? " " : "") + l.tok[i];
        try {
            f = parse_field(spec);
        } catch (const Error& e) {
            perr(l.number, e.what());
        }
        if (f != expected) throw Error(ErrorKind::FieldMismatch, "module over " + f.name() + ", algebra over " + expected.name());
    }
    HModule M;
    {
        const Line& l = need("module");
        if (l.tok.size() != 3 || l.tok[1] != "dim") perr(l.number, "expected 'module dim m'");
        M.dim = parse_index(l, l.tok[2], 1 << 20);
        if (M.dim < 1) perr(l.number, "module dimension must be positive");
    }
    std::vector<bool> seen(sz(algebra_dim), false);
    M.rho.assign(sz(algebra_dim), Matrix(f, sz(M.dim), sz(M.dim)));
    while (p < lines.size() && lines[p].tok[0] == "act") {
        const Line& l = lines[p++];
        if (l.tok.size() != 2) perr(l.number, "expected 'act i'");
        int i = parse_index(l, l.tok[1], algebra_dim);
        if (seen[sz(i)]) perr(l.number, "duplicate block for basis element " + l.tok[1]);
        seen[sz(i)] = true;
        for (int r = 0; r < M.dim; ++r) {
            if (p >= lines.size()) perr(l.number, "matrix block ends early");
            const Line& row = lines[p++];
            if (static_cast<int>(row.tok.size()) != M.dim) perr(row.number, "expected " + std::to_string(M.dim) + " scalars");
            for (int c = 0; c < M.dim; ++c) M.rho[sz(i)](sz(r), sz(c)) = parse_value(row, f, row.tok[sz(c)]);
        }
    }
    const Line& endl_ = need("end");
    if (p != lines.size()) perr(lines[p].number, "content after 'end'");
    for (int i = 0; i < algebra_dim; ++i)
        if (!seen[sz(i)]) perr(endl_.number, "missing block for basis element " + std::to_string(i));
    return M;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    out << text;
}

} // namespace qhopf
