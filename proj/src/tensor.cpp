#include "qhopf/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace qhopf {

namespace {

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

void require(bool ok, ErrorKind k, const std::string& msg) {
    if (!ok) throw Error(k, msg);
}

} // namespace

Scalar AlgebraData::coeff(int i, int j, int k) const {
    for (const auto& [kk, c] : mult[static_cast<std::size_t>(i * n + j)])
        if (kk == k) return c;
    return Scalar::zero(field);
}

bool AlgebraData::operator==(const AlgebraData& o) const {
    return field == o.field && n == o.n && unit == o.unit && dense_mult(*this) == dense_mult(o);
}

AlgebraPtr make_algebra(const FieldSpec& f, int n, const std::vector<Scalar>& dense, const Vec& unit) {
    auto a = std::make_shared<AlgebraData>();
    a->field = f;
    a->n = n;
    a->unit = unit;
    a->mult.resize(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Scalar& c = dense[static_cast<std::size_t>((i * n + j) * n + k)];
                if (!c.is_zero()) a->mult[static_cast<std::size_t>(i * n + j)].emplace_back(k, c);
            }
    return a;
}

std::vector<Scalar> dense_mult(const AlgebraData& a) {
    std::size_t n = static_cast<std::size_t>(a.n);
    std::vector<Scalar> d(n * n * n, Scalar::zero(a.field));
    for (std::size_t ij = 0; ij < n * n; ++ij)
        for (const auto& [k, c] : a.mult[ij]) d[ij * n + static_cast<std::size_t>(k)] = c;
    return d;
}

Vec vmul(const AlgebraData& a, const Vec& x, const Vec& y) {
    Vec r = zero_vec(a.field, static_cast<std::size_t>(a.n));
    for (int i = 0; i < a.n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < a.n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar xy = x[i] * y[j];
            for (const auto& [k, c] : a.mult[static_cast<std::size_t>(i * a.n + j)]) r[k].add_product(xy, c);
        }
    }
    return r;
}

Vec vmul_right_basis(const AlgebraData& a, const Vec& x, int j) {
    Vec r = zero_vec(a.field, static_cast<std::size_t>(a.n));
    for (int i = 0; i < a.n; ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& [k, c] : a.mult[static_cast<std::size_t>(i * a.n + j)]) r[k].add_product(x[i], c);
    }
    return r;
}

Vec vadd(const Vec& x, const Vec& y) {
    Vec r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

Vec vsub(const Vec& x, const Vec& y) {
    Vec r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

Vec vscale(const Scalar& c, const Vec& x) {
    Vec r = x;
    for (auto& s : r) s = c * s;
    return r;
}

bool CoalgebraData::operator==(const CoalgebraData& o) const {
    if (field != o.field || n != o.n || counit != o.counit) return false;
    for (int i = 0; i < n; ++i) {
        std::vector<Scalar> a(static_cast<std::size_t>(n * n), Scalar::zero(field)), b = a;
        for (const auto& [j, k, c] : comult[i]) a[static_cast<std::size_t>(j * n + k)] = c;
        for (const auto& [j, k, c] : o.comult[i]) b[static_cast<std::size_t>(j * n + k)] = c;
        if (a != b) return false;
    }
    return true;
}

Scalar apply_counit(const CoalgebraData& c, const Vec& x) {
    Scalar r = Scalar::zero(c.field);
    for (int i = 0; i < c.n; ++i) r.add_product(c.counit[i], x[i]);
    return r;
}

// ---------------------------------------------------------------------------

Tensor::Tensor(AlgebraPtr alg, int arity) : alg_(std::move(alg)), arity_(arity) {
    c_.assign(ipow(static_cast<std::size_t>(alg_->n), arity), Scalar::zero(alg_->field));
}

Tensor Tensor::unit(const AlgebraPtr& alg, int arity) {
    return pure(alg, std::vector<Vec>(static_cast<std::size_t>(arity), alg->unit));
}

Tensor Tensor::scalar(const AlgebraPtr& alg, const Scalar& s) {
    Tensor t(alg, 0);
    t.c_[0] = s;
    return t;
}

Tensor Tensor::pure(const AlgebraPtr& alg, const std::vector<Vec>& legs) {
    Tensor t(alg, static_cast<int>(legs.size()));
    std::size_t n = static_cast<std::size_t>(alg->n);
    std::function<void(std::size_t, std::size_t, Scalar)> rec = [&](std::size_t leg, std::size_t flat, Scalar c) {
        if (leg == legs.size()) {
            t.c_[flat] += c;
            return;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (!legs[leg][i].is_zero()) rec(leg + 1, flat * n + i, c * legs[leg][i]);
    };
    rec(0, 0, Scalar::one(alg->field));
    return t;
}

std::size_t Tensor::flatten(const std::vector<int>& idx) const {
    require(static_cast<int>(idx.size()) == arity_, ErrorKind::ArityMismatch, "index length");
    std::size_t f = 0;
    for (int i : idx) f = f * static_cast<std::size_t>(alg_->n) + static_cast<std::size_t>(i);
    return f;
}

std::vector<int> Tensor::unflatten(std::size_t flat) const {
    std::vector<int> idx(static_cast<std::size_t>(arity_));
    for (int l = arity_ - 1; l >= 0; --l) {
        idx[static_cast<std::size_t>(l)] = static_cast<int>(flat % static_cast<std::size_t>(alg_->n));
        flat /= static_cast<std::size_t>(alg_->n);
    }
    return idx;
}

std::vector<Tensor::Term> Tensor::terms() const {
    std::vector<Term> out;
    for (std::size_t f = 0; f < c_.size(); ++f)
        if (!c_[f].is_zero()) out.push_back({unflatten(f), c_[f]});
    return out;
}

std::size_t Tensor::nnz() const {
    std::size_t k = 0;
    for (const auto& s : c_) k += !s.is_zero();
    return k;
}

Vec Tensor::as_vec() const {
    require(arity_ == 1, ErrorKind::ArityMismatch, "as_vec needs arity 1");
    return c_;
}

Scalar Tensor::as_scalar() const {
    require(arity_ == 0, ErrorKind::ArityMismatch, "as_scalar needs arity 0");
    return c_[0];
}

static void check_same(const Tensor& a, const Tensor& b) {
    require(a.arity() == b.arity(), ErrorKind::ArityMismatch,
            "arity " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
    require(a.algebra() == b.algebra() || *a.algebra() == *b.algebra(), ErrorKind::InvalidArgument,
            "tensors over different algebras");
}

Tensor& Tensor::operator+=(const Tensor& b) {
    check_same(*this, b);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!b.c_[i].is_zero()) c_[i] += b.c_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& b) {
    check_same(*this, b);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!b.c_[i].is_zero()) c_[i] -= b.c_[i];
    return *this;
}

Tensor operator*(const Scalar& s, const Tensor& a) {
    Tensor r = a;
    for (auto& c : r.c_)
        if (!c.is_zero()) c = s * c;
    return r;
}

Tensor Tensor::operator-() const {
    Tensor r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

bool Tensor::operator==(const Tensor& b) const { return arity_ == b.arity_ && alg_->n == b.alg_->n && c_ == b.c_; }

Tensor operator*(const Tensor& a, const Tensor& b) { return tensor_mul(a, b); }

namespace {

// out += c * (e_i on leg l) v
void left_on_leg(const AlgebraData& A, int k, int l, int i, const Scalar& c, const std::vector<Scalar>& v,
                 std::vector<Scalar>& out) {
    const std::size_t n = static_cast<std::size_t>(A.n);
    const std::size_t s = ipow(n, k - 1 - l);
    for (std::size_t f = 0; f < v.size(); ++f) {
        if (v[f].is_zero()) continue;
        const std::size_t j = (f / s) % n;
        const std::size_t base = f - j * s;
        const Scalar cv = c * v[f];
        for (const auto& [kk, m] : A.mult[static_cast<std::size_t>(i) * n + j])
            out[base + static_cast<std::size_t>(kk) * s] += cv * m;
    }
}

// Multiplies leg by leg: (a_1 (x) ... (x) a_k) b is built by acting on one leg at a
// time, sharing the partial products of common index prefixes of a.
Tensor staged_mul(const Tensor& a, const Tensor& b) {
    const AlgebraData& A = *a.algebra();
    const int k = a.arity();
    const std::size_t n = static_cast<std::size_t>(A.n);
    const std::size_t N = a.size();
    const Scalar one = Scalar::one(A.field), zero = Scalar::zero(A.field);
    // live[l][p]: some nonzero entry of a has index prefix p of length l + 1
    std::vector<std::vector<char>> live(static_cast<std::size_t>(k));
    for (int l = 0; l < k; ++l) live[static_cast<std::size_t>(l)].assign(ipow(n, l + 1), 0);
    for (std::size_t f = 0; f < N; ++f) {
        if (a.at(f).is_zero()) continue;
        std::size_t p = f;
        for (int l = k - 1; l >= 0; --l, p /= n) live[static_cast<std::size_t>(l)][p] = 1;
    }
    Tensor r(a.algebra(), k);
    std::vector<Scalar> out(N, zero);
    std::vector<std::vector<Scalar>> stack(static_cast<std::size_t>(k));
    std::function<void(int, std::size_t, const std::vector<Scalar>&)> rec = [&](int l, std::size_t prefix,
                                                                                 const std::vector<Scalar>& cur) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t p = prefix * n + i;
            if (!live[static_cast<std::size_t>(l)][p]) continue;
            if (l == k - 1) {
                left_on_leg(A, k, l, static_cast<int>(i), a.at(p), cur, out);
                continue;
            }
            auto& next = stack[static_cast<std::size_t>(l)];
            next.assign(N, zero);
            left_on_leg(A, k, l, static_cast<int>(i), one, cur, next);
            rec(l + 1, p, next);
        }
    };
    rec(0, 0, b.coeffs());
    for (std::size_t f = 0; f < N; ++f) r.at(f) = out[f];
    return r;
}

} // namespace

Tensor tensor_mul(const Tensor& a, const Tensor& b) {
    check_same(a, b);
    if (a.arity() >= 2) {
        const double n = a.dim();
        std::size_t entries = 0;
        for (const auto& l : a.algebra()->mult) entries += l.size();
        const double avg = static_cast<double>(entries) / (n * n);
        const double direct = static_cast<double>(a.nnz()) * static_cast<double>(b.nnz()) * std::pow(avg, a.arity());
        double prefixes = 0;
        for (int l = 1; l <= a.arity(); ++l) prefixes += std::min(std::pow(n, l), static_cast<double>(a.nnz()));
        const double staged = prefixes * static_cast<double>(a.size()) * avg;
        if (staged < direct) return staged_mul(a, b);
    }
    const AlgebraData& A = *a.alg_;
    const std::size_t n = static_cast<std::size_t>(A.n);
    const int k = a.arity_;
    Tensor r(a.alg_, k);
    if (k == 0) {
        r.c_[0] = a.c_[0] * b.c_[0];
        return r;
    }
    auto ta = a.terms();
    auto tb = b.terms();
    std::vector<const std::vector<std::pair<int, Scalar>>*> lists(static_cast<std::size_t>(k));
    std::function<void(int, std::size_t, const Scalar&)> rec = [&](int leg, std::size_t flat, const Scalar& c) {
        if (leg == k) {
            r.c_[flat] += c;
            return;
        }
        for (const auto& [kk, m] : *lists[static_cast<std::size_t>(leg)])
            rec(leg + 1, flat * n + static_cast<std::size_t>(kk), c * m);
    };
    for (const auto& x : ta)
        for (const auto& y : tb) {
            bool empty = false;
            for (int l = 0; l < k; ++l) {
                auto& li = A.mult[static_cast<std::size_t>(x.idx[l]) * n + static_cast<std::size_t>(y.idx[l])];
                if (li.empty()) { empty = true; break; }
                lists[static_cast<std::size_t>(l)] = &li;
            }
            if (empty) continue;
            rec(0, 0, x.coef * y.coef);
        }
    return r;
}

Tensor invert_in_tensor_power(const Tensor& a) {
    const AlgebraPtr& alg = a.algebra();
    std::size_t N = a.size();
    const FieldSpec& f = a.field();
    // column J holds a * e_J
    std::vector<Tensor> cols;
    cols.reserve(N);
    RowReducer red(f, N);
    std::vector<Vec> rows(N, zero_vec(f, N));
    for (std::size_t J = 0; J < N; ++J) {
        Tensor e(alg, a.arity());
        e.at(J) = Scalar::one(f);
        Tensor c = a * e;
        for (std::size_t K = 0; K < N; ++K)
            if (!c.at(K).is_zero()) rows[K][J] = c.at(K);
    }
    Tensor one = Tensor::unit(alg, a.arity());
    for (std::size_t K = 0; K < N; ++K) red.add_equation(std::move(rows[K]), one.at(K));
    SolutionSet sol = red.solve();
    if (!sol.consistent) throw Error(ErrorKind::NotInvertible, "no right inverse exists (a*x = 1 has no solution)");
    Tensor x(alg, a.arity());
    for (std::size_t J = 0; J < N; ++J) x.at(J) = sol.particular[J];
    if (x * a != one) throw Error(ErrorKind::NotInvertible, "right inverse is not a left inverse");
    return x;
}

Tensor Tensor::permuted(const std::vector<int>& perm) const {
    require(static_cast<int>(perm.size()) == arity_, ErrorKind::ArityMismatch, "permutation length");
    Tensor r(alg_, arity_);
    std::vector<int> out(static_cast<std::size_t>(arity_));
    for (const auto& t : terms()) {
        for (int k = 0; k < arity_; ++k) out[static_cast<std::size_t>(k)] = t.idx[static_cast<std::size_t>(perm[k])];
        r.c_[r.flatten(out)] += t.coef;
    }
    return r;
}

Tensor Tensor::embedded(int k, const std::vector<int>& legs) const {
    require(static_cast<int>(legs.size()) == arity_, ErrorKind::ArityMismatch, "embedding length");
    std::vector<int> slot(static_cast<std::size_t>(k), -1);
    for (int l = 0; l < arity_; ++l) slot[static_cast<std::size_t>(legs[l])] = l;
    std::vector<std::pair<int, Scalar>> unit_terms;
    for (int i = 0; i < alg_->n; ++i)
        if (!alg_->unit[i].is_zero()) unit_terms.emplace_back(i, alg_->unit[i]);
    Tensor r(alg_, k);
    std::size_t n = static_cast<std::size_t>(alg_->n);
    for (const auto& t : terms()) {
        std::function<void(int, std::size_t, const Scalar&)> rec = [&](int leg, std::size_t flat, const Scalar& c) {
            if (leg == k) {
                r.c_[flat] += c;
                return;
            }
            int s = slot[static_cast<std::size_t>(leg)];
            if (s >= 0) {
                rec(leg + 1, flat * n + static_cast<std::size_t>(t.idx[static_cast<std::size_t>(s)]), c);
            } else {
                for (const auto& [i, u] : unit_terms) rec(leg + 1, flat * n + static_cast<std::size_t>(i), c * u);
            }
        };
        rec(0, 0, t.coef);
    }
    return r;
}

Tensor Tensor::rebound(const AlgebraPtr& alg) const {
    require(alg->n == alg_->n, ErrorKind::InvalidArgument, "rebinding to an algebra of another dimension");
    Tensor r = *this;
    r.alg_ = alg;
    return r;
}

Tensor Tensor::regrouped(const AlgebraPtr& alg, int arity) const {
    require(ipow(static_cast<std::size_t>(alg->n), arity) == c_.size(), ErrorKind::ArityMismatch,
            "regrouping does not match sizes");
    Tensor r(alg, arity);
    r.c_ = c_;
    return r;
}

std::string Tensor::str(const std::vector<std::string>& names) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << format(t.coef) << ")";
        for (std::size_t l = 0; l < t.idx.size(); ++l) {
            os << (l == 0 ? " " : "(x)");
            int i = t.idx[l];
            if (static_cast<std::size_t>(i) < names.size()) os << names[static_cast<std::size_t>(i)];
            else os << "e" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------

Tensor apply_legs(const Tensor& t, const std::vector<LegOp>& ops, const CoalgebraData& co) {
    require(static_cast<int>(ops.size()) == t.arity(), ErrorKind::ArityMismatch, "one leg action per leg");
    const std::size_t n = static_cast<std::size_t>(t.dim());
    int out_arity = 0;
    for (const auto& op : ops) {
        if (op.kind == LegOp::Kind::Comult) out_arity += 2;
        else if (op.kind != LegOp::Kind::Counit) out_arity += 1;
    }
    Tensor r(t.algebra(), out_arity);
    const FieldSpec& f = t.field();
    struct Piece {
        std::size_t sub;
        Scalar c;
    };
    std::vector<std::vector<Piece>> pieces(ops.size());
    std::vector<std::size_t> width(ops.size());
    for (std::size_t l = 0; l < ops.size(); ++l) {
        switch (ops[l].kind) {
        case LegOp::Kind::Comult: width[l] = n * n; break;
        case LegOp::Kind::Counit: width[l] = 1; break;
        default: width[l] = n;
        }
    }
    for (const auto& term : t.terms()) {
        for (std::size_t l = 0; l < ops.size(); ++l) {
            int i = term.idx[l];
            auto& p = pieces[l];
            p.clear();
            switch (ops[l].kind) {
            case LegOp::Kind::Identity: p.push_back({static_cast<std::size_t>(i), Scalar::one(f)}); break;
            case LegOp::Kind::Comult:
                for (const auto& [j, k, c] : co.comult[static_cast<std::size_t>(i)])
                    p.push_back({static_cast<std::size_t>(j) * n + static_cast<std::size_t>(k), c});
                break;
            case LegOp::Kind::Counit:
                if (!co.counit[static_cast<std::size_t>(i)].is_zero()) p.push_back({0, co.counit[static_cast<std::size_t>(i)]});
                break;
            case LegOp::Kind::Linear:
                for (std::size_t rr = 0; rr < n; ++rr) {
                    const Scalar& m = (*ops[l].map)(rr, static_cast<std::size_t>(i));
                    if (!m.is_zero()) p.push_back({rr, m});
                }
                break;
            }
        }
        std::function<void(std::size_t, std::size_t, const Scalar&)> rec = [&](std::size_t leg, std::size_t flat,
                                                                               const Scalar& c) {
            if (leg == ops.size()) {
                r.at(flat) += c;
                return;
            }
            for (const auto& pc : pieces[leg]) rec(leg + 1, flat * width[leg] + pc.sub, c * pc.c);
        };
        rec(0, 0, term.coef);
    }
    return r;
}

Tensor apply_on_leg(const Tensor& t, int leg, LegOp op, const CoalgebraData& co) {
    std::vector<LegOp> ops(static_cast<std::size_t>(t.arity()), LegOp::id());
    ops[static_cast<std::size_t>(leg)] = op;
    return apply_legs(t, ops, co);
}

Tensor map_all_legs(const Tensor& t, const Matrix& m, const AlgebraPtr& target) {
    require(static_cast<int>(m.cols()) == t.dim() && static_cast<int>(m.rows()) == target->n,
            ErrorKind::ArityMismatch, "map shape");
    Tensor r(target, t.arity());
    const std::size_t n = static_cast<std::size_t>(target->n);
    for (const auto& term : t.terms()) {
        std::function<void(int, std::size_t, const Scalar&)> rec = [&](int leg, std::size_t flat, const Scalar& c) {
            if (leg == t.arity()) {
                r.at(flat) += c;
                return;
            }
            std::size_t i = static_cast<std::size_t>(term.idx[static_cast<std::size_t>(leg)]);
            for (std::size_t rr = 0; rr < n; ++rr)
                if (!m(rr, i).is_zero()) rec(leg + 1, flat * n + rr, c * m(rr, i));
        };
        rec(0, 0, term.coef);
    }
    return r;
}

Tensor merge_legs(const Tensor& t, int a, int b, const std::vector<Vec>& table) {
    require(a < b && b < t.arity(), ErrorKind::ArityMismatch, "merge_legs needs two distinct legs");
    const std::size_t n = static_cast<std::size_t>(t.dim());
    Tensor r(t.algebra(), t.arity() - 1);
    std::vector<int> out(static_cast<std::size_t>(t.arity() - 1));
    for (const auto& term : t.terms()) {
        const Vec& v = table[static_cast<std::size_t>(term.idx[static_cast<std::size_t>(a)]) * n +
                             static_cast<std::size_t>(term.idx[static_cast<std::size_t>(b)])];
        int o = 0;
        for (int l = 0; l < t.arity(); ++l)
            if (l != b) out[static_cast<std::size_t>(o++)] = term.idx[static_cast<std::size_t>(l)];
        for (std::size_t k = 0; k < n; ++k) {
            if (v[k].is_zero()) continue;
            out[static_cast<std::size_t>(a)] = static_cast<int>(k);
            r(out) += term.coef * v[k];
        }
    }
    return r;
}

// ---------------------------------------------------------------------------

Factor L(int input, int leg) {
    Factor f;
    f.kind = Factor::Kind::Leg;
    f.input = input;
    f.leg = leg;
    return f;
}

Factor K(const Vec& v) {
    Factor f;
    f.kind = Factor::Kind::Const;
    f.value = v;
    return f;
}

Factor M(const Matrix& m, Word w) {
    Factor f;
    f.kind = Factor::Kind::Map;
    f.map = &m;
    f.inner = std::move(w);
    return f;
}

namespace {

struct WordEval {
    const AlgebraData& A;
    const std::vector<const std::vector<int>*>& chosen;

    Vec eval(const Word& w) const {
        Vec cur;
        bool have = false;
        for (const auto& f : w) {
            if (f.kind == Factor::Kind::Leg) {
                int j = (*chosen[static_cast<std::size_t>(f.input)])[static_cast<std::size_t>(f.leg - 1)];
                if (!have) {
                    cur = basis_vec(A.field, static_cast<std::size_t>(A.n), static_cast<std::size_t>(j));
                    have = true;
                } else {
                    cur = vmul_right_basis(A, cur, j);
                }
                continue;
            }
            Vec v = f.kind == Factor::Kind::Const ? f.value : f.map->apply(eval(f.inner));
            if (!have) {
                cur = std::move(v);
                have = true;
            } else {
                cur = vmul(A, cur, v);
            }
            if (is_zero_vec(cur)) return cur;
        }
        if (!have) return A.unit;
        return cur;
    }
};

} // namespace

Tensor contract(const AlgebraPtr& alg, const std::vector<const Tensor*>& inputs, const std::vector<Word>& outputs) {
    const AlgebraData& A = *alg;
    const std::size_t n = static_cast<std::size_t>(A.n);
    const int k = static_cast<int>(outputs.size());
    Tensor r(alg, k);
    std::vector<std::vector<Tensor::Term>> terms;
    terms.reserve(inputs.size());
    for (const Tensor* t : inputs) terms.push_back(t->terms());
    std::vector<const std::vector<int>*> chosen(inputs.size());
    WordEval ev{A, chosen};
    std::vector<Vec> legs(static_cast<std::size_t>(k));

    std::function<void(int, std::size_t, const Scalar&)> emit = [&](int leg, std::size_t flat, const Scalar& c) {
        if (leg == k) {
            r.at(flat) += c;
            return;
        }
        const Vec& v = legs[static_cast<std::size_t>(leg)];
        for (std::size_t i = 0; i < n; ++i)
            if (!v[i].is_zero()) emit(leg + 1, flat * n + i, c * v[i]);
    };
    std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t in, const Scalar& c) {
        if (in == inputs.size()) {
            for (int l = 0; l < k; ++l) {
                legs[static_cast<std::size_t>(l)] = ev.eval(outputs[static_cast<std::size_t>(l)]);
                if (is_zero_vec(legs[static_cast<std::size_t>(l)])) return;
            }
            emit(0, 0, c);
            return;
        }
        for (const auto& t : terms[in]) {
            chosen[in] = &t.idx;
            rec(in + 1, c * t.coef);
        }
    };
    rec(0, Scalar::one(A.field));
    return r;
}

} // namespace qhopf
