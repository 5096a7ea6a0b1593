#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "criteria.hpp"
#include "qhopf/fixtures.hpp"
#include "qhopf/involutory_pivotal.hpp"
#include "qhopf/io.hpp"

using namespace qhopf;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string fixture;
    std::string field = "gaussian";
    std::string emit;
    std::string format = "text";
    bool verbose = false;
    bool field_given = false;
    bool machine() const { return format == "machine"; }
};

struct Input {
    QuasiHopfAlgebra H;
    std::optional<QTStructure> R;
    std::string label;
};

int rsign(const std::string& s) {
    if (s == "+" || s == "plus") return 1;
    if (s == "-" || s == "minus") return -1;
    throw UsageError("--sign must be + or -");
}

Input load(const Options& o, const std::string& file, int sign = 1) {
    if (o.fixture.empty() == file.empty()) throw UsageError("give exactly one input: --fixture <name> or a structure file");
    Input in;
    if (!o.fixture.empty()) {
        Fixture fx = fixture(o.fixture, parse_field(o.field));
        in.H = fx.H;
        in.R = fx.R;
        if (o.fixture == "h2") in.R = h2_rmatrix(in.H, sign);
        in.label = o.fixture;
        return in;
    }
    std::string text = read_file(file);
    if (is_dual_text(text)) throw UsageError(file + " holds a dual structure; use the dual command");
    in.H = parse_structure(text);
    if (o.field_given && parse_field(o.field) != in.H.field())
        throw UsageError("--field " + o.field + " does not match the file field " + in.H.field().name());
    in.label = file;
    return in;
}

DualQuasiHopf load_dual(const Options& o, const std::string& file) {
    if (o.fixture.empty() == file.empty()) throw UsageError("give exactly one input: --fixture <name> or a structure file");
    if (!o.fixture.empty()) return dualize(fixture(o.fixture, parse_field(o.field)).H);
    std::string text = read_file(file);
    DualQuasiHopf A = is_dual_text(text) ? parse_dual(text) : dualize(parse_structure(text));
    if (o.field_given && parse_field(o.field) != A.field())
        throw UsageError("--field " + o.field + " does not match the file field " + A.field().name());
    return A;
}

class Out {
public:
    explicit Out(const Options& o) : o_(o) {}

    // Returns 1 when the report has failures.
    int report(const VerificationReport& r) {
        std::cout << (o_.machine() ? r.machine() : r.text());
        return r.all_passed() ? 0 : 1;
    }
    void value(const std::string& key, const std::string& v) {
        if (o_.machine())
            std::cout << "VALUE " << key << " " << v << "\n";
        else
            std::cout << key << ": " << v << "\n";
    }
    void verbose(const std::string& s) {
        if (o_.verbose && !o_.machine()) std::cout << s << "\n";
    }
    void emit(const std::string& text) {
        if (o_.emit.empty()) return;
        if (o_.emit == "-")
            std::cout << text;
        else
            write_file(o_.emit, text);
    }

private:
    const Options& o_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string functional(const std::vector<std::string>& names, const Vec& v) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        os << (first ? "" : ", ") << names[i] << " -> " << format(v[i]);
        first = false;
    }
    return first ? "0" : os.str();
}

std::string basis_summary(const QuasiHopfAlgebra& H) {
    std::ostringstream os;
    os << "dim " << H.dim() << " over " << H.field().name() << "; basis";
    for (const auto& n : H.names) os << " " << n;
    os << "\nphi = " << H.show(H.phi) << "\nalpha = " << H.show(H.alpha) << "\nbeta = " << H.show(H.beta);
    return os.str();
}

int cmd_verify(const Options& o, const std::string& file) {
    Out out(o);
    if (o.fixture.empty() && !file.empty() && is_dual_text(read_file(file))) {
        DualQuasiHopf A = load_dual(o, file);
        return out.report(verify_dual(A));
    }
    Input in = load(o, file);
    out.verbose(basis_summary(in.H));
    VerificationReport r = verify_quasihopf(in.H);
    if (in.R) r.merge(verify_qt(in.H, in.R->R));
    for (const auto& n : in.H.notes) r.note(n);
    return out.report(r);
}

int cmd_analyze(const Options& o, const std::string& file) {
    Out out(o);
    Input in = load(o, file);
    const QuasiHopfAlgebra& H = in.H;
    int status = 0;
    InvolutoryCertificate inv = is_involutory(H);
    out.value("involutory", yes_no(inv.holds));
    if (inv.holds) {
        out.value("u", H.show(inv.u));
        out.value("v", H.show(inv.v));
        if (inv.alpha_inv) out.value("alpha^-1", H.show(*inv.alpha_inv));
        if (inv.beta_inv) out.value("beta^-1", H.show(*inv.beta_inv));
    }
    std::vector<PivotalElement> piv;
    std::string pivotal;
    try {
        piv = pivotal_elements(H);
        for (std::size_t k = 0; k < piv.size(); ++k) pivotal += (k ? ", " : "") + H.show(piv[k].g);
        if (piv.empty()) pivotal = "none";
    } catch (const Error& e) {
        pivotal = std::string("not computed (") + e.what() + ")";
    }
    out.value("pivotal", pivotal);
    if (inv.holds) {
        out.value("beta S(alpha)", H.show(inv.v));
        out.value("trace", format(trace_operator(H)));
        try {
            VerificationReport d = double_involutivity_condition(H);
            out.value("double involutivity condition", d.all_passed() ? "holds" : "fails");
            if (o.verbose) out.report(d);
        } catch (const Error& e) {
            out.value("double involutivity condition", std::string("not computed (") + e.what() + ")");
        }
    } else {
        out.value("trace", "not defined (not involutory)");
    }
    out.value("semisimple", yes_no(is_semisimple(H)));
    if (o.verbose || o.machine()) out.report(inv.report);
    VerificationReport certs;
    for (std::size_t k = 0; k < piv.size(); ++k) certs.merge(piv[k].certified, "pivotal." + std::to_string(k));
    if (!certs.all_passed()) status = 1;
    if (o.verbose || o.machine()) out.report(certs);
    return status;
}

int cmd_double(const Options& o, const std::string& file, bool quick) {
    Out out(o);
    Input in = load(o, file);
    QuantumDouble Q = quantum_double(in.H);
    out.verbose(basis_summary(Q.D));
    VerificationReport r = Q.report;
    if (!quick) r.merge(verify_quasihopf(Q.D), "double");
    r.merge(verify_qt(Q.D, Q.R.R), "double");
    int status = out.report(r);
    out.emit(emit_structure(Q.D));
    return status;
}

int cmd_bosonize(const Options& o, const std::string& file, const std::string& sign) {
    Out out(o);
    Input in = load(o, file, rsign(sign));
    if (!in.R) throw UsageError("bosonize needs a quasitriangular fixture (h2 or d_h2)");
    Bosonization b = bosonization(in.H, *in.R);
    out.verbose(basis_summary(b.B));
    VerificationReport r;
    if (b.circ_is_original)
        r.pass("bos.circ_original", "h o h' = h h'");
    else
        r.fail("bos.circ_original", "h o h' = h h'", {});
    if (b.action_trivial)
        r.pass("bos.action_trivial", "h |> h' = eps(h) h'");
    else
        r.fail("bos.action_trivial", "h |> h' = eps(h) h'", {});
    r.merge(verify_quasihopf(b.B), "bos");
    int status = out.report(r);
    out.emit(emit_structure(b.B));
    return status;
}

int cmd_zeta(const Options& o, const std::string& file, const std::string& sign, const std::string& order) {
    Out out(o);
    Input in = load(o, file, rsign(sign));
    if (!in.R) throw UsageError("zeta needs a quasitriangular fixture (h2 or d_h2)");
    ZetaOrder ord;
    if (order == "pi-first")
        ord = ZetaOrder::PiFirst;
    else if (order == "tilde-first")
        ord = ZetaOrder::TildeFirst;
    else
        throw UsageError("--order must be pi-first or tilde-first");
    QuantumDouble Q = quantum_double(in.H);
    DoubleIso z = double_iso(in.H, *in.R, &Q);
    const Matrix& m = z.map(ord);
    for (int j = 0; j < Q.D.dim(); ++j)
        out.verbose("zeta(" + Q.D.names[static_cast<std::size_t>(j)] + ") = " + z.target.show(m.column(static_cast<std::size_t>(j))));
    for (const auto& n : z.notes) out.verbose("note: " + n);
    int status = out.report(z.certificate(ord).checks);
    out.emit(emit_structure(z.target));
    return status;
}

int cmd_twist(const Options& o, const std::string& file) {
    Out out(o);
    Input in = load(o, file);
    DrinfeldTwist f = drinfeld_twist(in.H);
    out.value("f", in.H.show(f.f));
    out.value("f^-1", in.H.show(f.f_inv));
    out.value("gamma", in.H.show(f.gamma));
    out.value("delta", in.H.show(f.delta));
    return out.report(f.report);
}

int cmd_dual(const Options& o, const std::string& action, const std::string& file) {
    Out out(o);
    DualQuasiHopf A = load_dual(o, file);
    int status = 0;
    if (action == "verify") {
        status = out.report(verify_dual(A));
    } else if (action == "integrals") {
        std::vector<Vec> T = dual_integrals(A);
        out.value("integrals", std::to_string(T.size()));
        for (const auto& t : T) out.value("T", functional(A.names, t));
    } else if (action == "cosemisimple") {
        VerificationReport r;
        bool ok = false;
        std::string note;
        try {
            ok = cosemisimple_check(A);
        } catch (const Error& e) {
            note = e.what();
        }
        if (ok)
            r.pass("dual.cosemisimple", "some integral T has T(1) != 0");
        else
            r.fail("dual.cosemisimple", "some integral T has T(1) != 0", {}, note);
        status = out.report(r);
    } else {
        throw UsageError("dual action must be verify, integrals or cosemisimple");
    }
    out.emit(emit_dual(A));
    return status;
}

int cmd_rep(const Options& o, const std::string& action, const std::string& algebra, const std::vector<std::string>& files) {
    Out out(o);
    Input in = load(o, algebra);
    const QuasiHopfAlgebra& H = in.H;
    std::vector<LabeledModule> mods;
    for (const auto& f : files) mods.push_back({f, parse_module(H.field(), H.dim(), read_file(f)), false});
    if (action == "regular" || action == "trivial") {
        std::string text = emit_module(H, action == "regular" ? regular_module(H) : trivial_module(H));
        if (o.emit.empty())
            std::cout << text;
        else
            out.emit(text);
        return 0;
    }
    if (action == "verify") {
        if (mods.empty()) throw UsageError("rep verify needs at least one module file");
        VerificationReport r;
        for (const auto& m : mods) r.merge(verify_module(H, m.M), m.label);
        return out.report(r);
    }
    if (action == "hom") {
        if (mods.size() != 2) throw UsageError("rep hom needs exactly two module files M N");
        HomSpace h = hom_space(H, mods[0].M, mods[1].M);
        out.value("dim Hom(M, N)", std::to_string(h.basis.size()));
        out.value("dim Hom(k, N (x) M*)", std::to_string(h.invariant_dim));
        VerificationReport r;
        std::string anchor = "dim Hom(M, N) = dim Hom(k, N (x) M*)";
        if (h.dims_agree())
            r.pass("rep.hom_dims_agree", anchor);
        else
            r.fail("rep.hom_dims_agree", anchor, {{}, std::to_string(h.basis.size()), std::to_string(h.invariant_dim)});
        return out.report(r);
    }
    if (action == "dims") {
        if (mods.empty()) {
            mods.push_back({"trivial", trivial_module(H), false});
            mods.push_back({"regular", regular_module(H), true});
            if (auto gens = grouplike_generators(H)) {
                auto chars = characters(H, gens->gens, gens->orders);
                for (std::size_t k = 0; k < chars.size(); ++k)
                    mods.push_back({"character." + std::to_string(k), character_module(H, chars[k]), false});
            }
        }
        InvolutoryCertificate inv = is_involutory(H);
        for (const auto& m : mods) {
            std::string s = std::to_string(m.M.dim);
            if (inv.holds) {
                CategoricalDimension cd = categorical_dimension(H, inv.v, m.M);
                s += "; categorical " + format(cd.first);
                if (!cd.agree()) s += " / " + format(cd.second);
            }
            out.value("dim " + m.label, s);
        }
        DivisibilityReport d = divisibility_report(H, mods);
        for (const auto& e : d.entries)
            out.verbose(e.label + ": end " + std::to_string(e.end_dim) + ", absolutely simple " + yes_no(e.absolutely_simple) +
                        ", projective " + yes_no(e.projective) + ", characteristic divides dim " + yes_no(e.char_divides));
        return out.report(d.report);
    }
    throw UsageError("rep action must be verify, hom, dims, regular or trivial");
}

int cmd_fixture(const Options& o, std::string name, bool list) {
    Out out(o);
    if (name.empty()) name = o.fixture;
    if (list || name.empty()) {
        for (const auto& n : fixture_names()) std::cout << n << "\n";
        return 0;
    }
    Fixture fx = fixture(name, parse_field(o.field));
    for (const auto& f : fx.facts) out.verbose("fact: " + f);
    std::string text = emit_structure(fx.H);
    if (o.emit.empty())
        std::cout << text;
    else
        out.emit(text);
    return 0;
}

int cmd_suite(const Options& o, const std::string& name) {
    if (name != "paper" && name != "acceptance") throw UsageError("unknown suite '" + name + "'");
    bool ok = true;
    acceptance::run_all([&](const acceptance::Criterion& c) {
        ok = ok && c.passed();
        char num[8];
        std::snprintf(num, sizeof num, "%02d", c.number);
        if (o.machine()) {
            std::cout << "CHECK criterion." << num << "." << c.id << " " << (c.passed() ? "PASS" : "FAIL");
            auto f = c.failures();
            if (!f.empty()) std::cout << " " << f.front()->name;
            std::cout << std::endl;
            return;
        }
        std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << num << " " << c.id << " (" << c.checks.size()
                  << " checks)\n";
        for (const auto* f : c.failures()) std::cout << "     failed " << f->name << (f->detail.empty() ? "" : ": ") << f->detail << "\n";
        for (const auto& d : c.diagnostics) std::cout << "     diagnostic: " << d << "\n";
        if (o.verbose)
            for (const auto& s : c.checks) std::cout << "     " << (s.passed ? "ok   " : "FAIL ") << s.name << "\n";
        std::cout << std::flush;
    });
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification and construction of finite-dimensional quasi-Hopf algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--fixture", o.fixture, "Built-in structure name");
    auto* field_opt = app.add_option("--field", o.field, "rationals | gaussian | fp:<p>");
    app.add_option("--emit", o.emit, "Write the constructed structure to this path ('-' for stdout)");
    app.add_option("--format", o.format, "text | machine")->check(CLI::IsMember({"text", "machine"}));
    app.add_flag("--verbose", o.verbose, "Print structures and all intermediate reports");

    std::string file, action, sign = "+", order = "pi-first", name, algebra;
    std::vector<std::string> modules;
    bool list = false;

    auto* verify = app.add_subcommand("verify", "Check the quasi-Hopf axioms (dual files run the dual checks)");
    verify->add_option("file", file, "Structure file");
    auto* analyze = app.add_subcommand("analyze", "Involutory, pivotal, trace and semisimplicity analysis");
    analyze->add_option("file", file, "Structure file");
    auto* dbl = app.add_subcommand("double", "Build and check the quantum double");
    dbl->add_option("file", file, "Structure file");
    bool quick = false;
    dbl->add_flag("--quick", quick, "Skip the axiom checks of the double (slow from dimension 16 on)");
    auto* bos = app.add_subcommand("bosonize", "Bosonization with respect to an R-matrix");
    bos->add_option("file", file, "Structure file");
    bos->add_option("--sign", sign, "R-matrix of h2: + or -");
    auto* zeta = app.add_subcommand("zeta", "Certify zeta: D(H) -> (H (x) H)_F^U");
    zeta->add_option("file", file, "Structure file");
    zeta->add_option("--sign", sign, "R-matrix of h2: + or -");
    zeta->add_option("--order", order, "pi-first | tilde-first");
    auto* twist = app.add_subcommand("twist", "Drinfeld twist f with gamma and delta");
    twist->add_option("file", file, "Structure file");
    auto* dual = app.add_subcommand("dual", "Dual quasi-Hopf checks");
    dual->add_option("action", action, "verify | integrals | cosemisimple")->required();
    dual->add_option("file", file, "Dual or ordinary structure file");
    auto* rep = app.add_subcommand("rep", "Module checks");
    rep->add_option("action", action, "verify | hom | dims | regular | trivial")->required();
    rep->add_option("modules", modules, "Module files");
    rep->add_option("--algebra", algebra, "Structure file of the algebra");
    auto* fix = app.add_subcommand("fixture", "Emit a built-in structure");
    fix->add_option("name", name, "Fixture name");
    fix->add_flag("--list", list, "List fixture names");
    auto* suite = app.add_subcommand("suite", "Run an acceptance suite");
    suite->add_option("name", name, "acceptance (alias: paper)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    o.field_given = field_opt->count() > 0;

    try {
        if (*verify) return cmd_verify(o, file);
        if (*analyze) return cmd_analyze(o, file);
        if (*dbl) return cmd_double(o, file, quick);
        if (*bos) return cmd_bosonize(o, file, sign);
        if (*zeta) return cmd_zeta(o, file, sign, order);
        if (*twist) return cmd_twist(o, file);
        if (*dual) return cmd_dual(o, action, file);
        if (*rep) return cmd_rep(o, action, algebra, modules);
        if (*fix) return cmd_fixture(o, name, list);
        if (*suite) return cmd_suite(o, name);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        if (e.kind() == ErrorKind::Parse) return 3;
        return e.kind() == ErrorKind::InvalidArgument ? 2 : 1;
    }
    return 2;
}
