#include "qhopf/field.hpp"

#include <cctype>
#include <climits>
#include <numeric>

namespace qhopf {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::AntipodeNotInvertible: return "AntipodeNotInvertible";
    case ErrorKind::InvalidTwist: return "InvalidTwist";
    case ErrorKind::NotFactorizable: return "NotFactorizable";
    case ErrorKind::NotInvolutory: return "NotInvolutory";
    case ErrorKind::SolutionSpaceTooLarge: return "SolutionSpaceTooLarge";
    case ErrorKind::NoNormalizedIntegral: return "NoNormalizedIntegral";
    case ErrorKind::NoIntegral: return "NoIntegral";
    case ErrorKind::CharTwo: return "CharTwo";
    case ErrorKind::FieldUnsuitable: return "FieldUnsuitable";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

bool fits64(i128 v) { return v > static_cast<i128>(INT64_MIN) && v <= static_cast<i128>(INT64_MAX); }

mpz_class mpz_from_i128(i128 v) {
    bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

} // namespace

// Build from a reduced fraction with positive denominator.
static Rational make_reduced(i128 n, i128 d) {
    if (fits64(n) && fits64(d)) return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    q.canonicalize();
    return Rational(q);
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
    if (n == INT64_MIN || d == INT64_MIN) {
        mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
        q.canonicalize();
        assign(q);
        return;
    }
    if (d < 0) { n = -n; d = -d; }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    if (n == 0) d = 1;
    n_ = n;
    d_ = d;
}

void Rational::assign(const mpq_class& q) {
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (num.fits_slong_p() && den.fits_slong_p() && num.get_si() != LONG_MIN) {
        n_ = num.get_si();
        d_ = den.get_si();
        big_.reset();
    } else {
        promote(q);
    }
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (n_ > 0) - (n_ < 0);
}

bool Rational::is_integer() const {
    if (big_) return big_->get_den() == 1;
    return d_ == 1;
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(n_)); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(d_)); }

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

Rational Rational::operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.n_ = -n_;
    r.d_ = d_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.n_ == 0) return b;
        if (b.n_ == 0) return a;
        if (a.d_ == b.d_) {
            i128 s = static_cast<i128>(a.n_) + b.n_;
            if (s == 0) return Rational();
            u128 g = gcd128(uabs(s), static_cast<u128>(a.d_));
            return make_reduced(s / static_cast<i128>(g), static_cast<i128>(a.d_) / static_cast<i128>(g));
        }
        std::int64_t g = std::gcd(a.d_, b.d_);
        i128 t = static_cast<i128>(a.n_) * (b.d_ / g) + static_cast<i128>(b.n_) * (a.d_ / g);
        if (t == 0) return Rational();
        i128 g2 = static_cast<i128>(gcd128(uabs(t), static_cast<u128>(g)));
        i128 den = static_cast<i128>(a.d_ / g) * (b.d_ / g2);
        return make_reduced(t / g2, den);
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.n_ == 0 || b.n_ == 0) return Rational();
        std::int64_t g1 = std::gcd(a.n_ < 0 ? -a.n_ : a.n_, b.d_);
        std::int64_t g2 = std::gcd(b.n_ < 0 ? -b.n_ : b.n_, a.d_);
        i128 n = static_cast<i128>(a.n_ / g1) * (b.n_ / g2);
        i128 d = static_cast<i128>(a.d_ / g2) * (b.d_ / g1);
        return make_reduced(n, d);
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
    if (!a.big_ && !b.big_) {
        if (a.n_ == 0) return Rational();
        std::int64_t bn = b.n_, bd = b.d_;
        i128 inn = bd, ind = bn;
        if (ind < 0) { inn = -inn; ind = -ind; }
        if (fits64(inn) && fits64(ind)) {
            Rational inv(static_cast<std::int64_t>(inn), static_cast<std::int64_t>(ind));
            return a * inv;
        }
    }
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical forms differ in size class
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return static_cast<i128>(a.n_) * b.d_ < static_cast<i128>(b.n_) * a.d_;
    return a.to_mpq() < b.to_mpq();
}

// ---------------------------------------------------------------------------

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be a prime");
    if (p >= (1ULL << 62)) throw Error(ErrorKind::InvalidArgument, "modulus too large (limit 2^62)");
    mpz_class z(static_cast<unsigned long>(p));
    if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
        throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    return {FieldKind::Prime, p};
}

std::string FieldSpec::name() const {
    switch (kind) {
    case FieldKind::Rationals: return "rationals";
    case FieldKind::Gaussian: return "gaussian";
    case FieldKind::Prime: return "fp " + std::to_string(modulus);
    }
    return "?";
}

std::uint64_t characteristic(const FieldSpec& f) { return f.kind == FieldKind::Prime ? f.modulus : 0; }

FieldSpec parse_field(const std::string& text) {
    if (text == "rationals") return FieldSpec::rationals();
    if (text == "gaussian") return FieldSpec::gaussian();
    if (text.rfind("fp", 0) == 0 && text.size() > 3 && (text[2] == ':' || text[2] == ' ')) {
        std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorKind::InvalidArgument, "bad field modulus '" + digits + "'");
        return FieldSpec::prime(std::stoull(digits));
    }
    throw Error(ErrorKind::InvalidArgument, "unknown field '" + text + "'");
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t mod_reduce(const mpz_class& z, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_ui();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    i128 t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        i128 q = r / nr;
        i128 tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint64_t>(t);
}

} // namespace

Scalar::Scalar(const FieldSpec& f, std::int64_t n) : f_(f) {
    if (f.kind == FieldKind::Prime) {
        std::int64_t p = static_cast<std::int64_t>(f.modulus);
        std::int64_t r = n % p;
        if (r < 0) r += p;
        re_ = Rational(r);
    } else {
        re_ = Rational(n);
    }
}

Scalar::Scalar(const FieldSpec& f, const Rational& re, const Rational& im) : f_(f) {
    if (f.kind == FieldKind::Prime) {
        if (!im.is_zero()) throw Error(ErrorKind::FieldMismatch, "imaginary part in prime field");
        std::uint64_t p = f.modulus;
        std::uint64_t num = mod_reduce(re.numerator(), p);
        std::uint64_t den = mod_reduce(re.denominator(), p);
        if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator divisible by the characteristic");
        re_ = residue_rational(mulmod(num, invmod(den, p), p));
    } else {
        if (f.kind == FieldKind::Rationals && !im.is_zero())
            throw Error(ErrorKind::FieldMismatch, "imaginary part in the rational field");
        re_ = re;
        im_ = im;
    }
}

Scalar Scalar::from_ratio(const FieldSpec& f, std::int64_t n, std::int64_t d) { return Scalar(f, Rational(n, d)); }

Scalar Scalar::imaginary_unit(const FieldSpec& f) {
    if (f.kind != FieldKind::Gaussian) throw Error(ErrorKind::FieldUnsuitable, "i requires gaussian rationals");
    return Scalar(f, Rational(0), Rational(1));
}

Scalar& Scalar::operator+=(const Scalar& b) {
    check(b);
    if (f_.kind == FieldKind::Prime) {
        std::uint64_t s = residue() + b.residue();
        if (s >= f_.modulus) s -= f_.modulus;
        re_ = residue_rational(s);
        return *this;
    }
    if (!b.re_.is_zero()) re_ = re_ + b.re_;
    if (!b.im_.is_zero()) im_ = im_ + b.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
    check(b);
    if (f_.kind == FieldKind::Prime) {
        std::uint64_t a = residue(), c = b.residue();
        re_ = residue_rational(a >= c ? a - c : a + f_.modulus - c);
        return *this;
    }
    if (!b.re_.is_zero()) re_ = re_ - b.re_;
    if (!b.im_.is_zero()) im_ = im_ - b.im_;
    return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check(b);
    Scalar r;
    r.f_ = a.f_;
    if (a.f_.kind == FieldKind::Prime) {
        r.re_ = Scalar::residue_rational(mulmod(a.residue(), b.residue(), a.f_.modulus));
        return r;
    }
    if (a.im_.is_zero() && b.im_.is_zero()) {
        r.re_ = a.re_ * b.re_;
        return r;
    }
    r.re_ = a.re_ * b.re_ - a.im_ * b.im_;
    r.im_ = a.re_ * b.im_ + a.im_ * b.re_;
    return r;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return;
    *this += a * b;
}

Scalar Scalar::operator-() const {
    Scalar r;
    r.f_ = f_;
    if (f_.kind == FieldKind::Prime) {
        std::uint64_t v = residue();
        r.re_ = residue_rational(v == 0 ? 0 : f_.modulus - v);
        return r;
    }
    r.re_ = -re_;
    r.im_ = -im_;
    return r;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    Scalar r;
    r.f_ = f_;
    if (f_.kind == FieldKind::Prime) {
        r.re_ = residue_rational(invmod(residue(), f_.modulus));
        return r;
    }
    if (im_.is_zero()) {
        r.re_ = Rational(1) / re_;
        return r;
    }
    Rational norm = re_ * re_ + im_ * im_;
    r.re_ = re_ / norm;
    r.im_ = -im_ / norm;
    return r;
}

Scalar Scalar::conj() const {
    Scalar r = *this;
    r.im_ = -im_;
    return r;
}

Scalar Scalar::pow(std::int64_t e) const {
    if (e < 0) return inv().pow(-e);
    Scalar base = *this, r = Scalar::one(f_);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
    return a.f_ == b.f_ && a.re_ == b.re_ && a.im_ == b.im_;
}

Rational Scalar::residue_rational(std::uint64_t r) { return Rational(static_cast<std::int64_t>(r)); }

// ---------------------------------------------------------------------------

std::string format(const Scalar& s) {
    const FieldSpec& f = s.field();
    if (f.kind != FieldKind::Gaussian || s.im().is_zero()) return s.re().str();
    std::string im;
    Rational a = s.im();
    bool neg = a.sign() < 0;
    if (neg) a = -a;
    im = a.is_one() ? "i" : a.str() + "*i";
    if (s.re().is_zero()) return neg ? "-" + im : im;
    return s.re().str() + (neg ? "-" : "+") + im;
}

namespace {

struct ScalarParser {
    const std::string& t;
    std::size_t pos = 0;

    bool at_end() const { return pos >= t.size(); }
    bool digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(t[pos])); }
    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::Parse, "bad scalar '" + t + "': " + why);
    }

    mpz_class integer() {
        std::size_t start = pos;
        while (digit()) ++pos;
        if (start == pos) fail("expected digits");
        return mpz_class(t.substr(start, pos - start));
    }

    mpq_class rational() {
        mpz_class n = integer();
        mpz_class d = 1;
        if (!at_end() && t[pos] == '/') {
            ++pos;
            d = integer();
            if (d == 0) fail("zero denominator");
        }
        mpq_class q(n, d);
        q.canonicalize();
        return q;
    }
};

} // namespace

Scalar parse_scalar(const FieldSpec& f, const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    ScalarParser p{text};
    if (text.empty()) p.fail("empty");
    mpq_class re = 0, im = 0;
    bool first = true;
    while (!p.at_end()) {
        int sign = 1;
        if (text[p.pos] == '+' || text[p.pos] == '-') {
            sign = text[p.pos] == '-' ? -1 : 1;
            ++p.pos;
        } else if (!first) {
            p.fail("expected sign");
        }
        first = false;
        if (!p.at_end() && text[p.pos] == 'i') {
            ++p.pos;
            im += sign;
            continue;
        }
        mpq_class q = p.rational();
        if (sign < 0) q = -q;
        if (!p.at_end() && text[p.pos] == '*') {
            ++p.pos;
            if (p.at_end() || text[p.pos] != 'i') p.fail("expected i after *");
            ++p.pos;
            im += q;
        } else if (!p.at_end() && text[p.pos] == 'i') {
            ++p.pos;
            im += q;
        } else {
            re += q;
        }
    }
    if (im != 0 && f.kind != FieldKind::Gaussian) p.fail("imaginary part outside gaussian field");
    return Scalar(f, Rational(re), Rational(im));
}

std::optional<Scalar> fourth_root_of_unity(const FieldSpec& f) {
    switch (f.kind) {
    case FieldKind::Gaussian: return Scalar::imaginary_unit(f);
    case FieldKind::Rationals: return std::nullopt;
    case FieldKind::Prime: {
        std::uint64_t p = f.modulus;
        if (p % 4 != 1) return std::nullopt;
        std::uint64_t a = 2;
        while (powmod(a, (p - 1) / 2, p) != p - 1) ++a;
        std::uint64_t x = powmod(a, (p - 1) / 4, p);
        return Scalar(f, static_cast<std::int64_t>(std::min(x, p - x)));
    }
    }
    return std::nullopt;
}

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    mpz_class n = q.numerator(), d = q.denominator();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    mpq_class r(sn, sd);
    r.canonicalize();
    return Rational(r);
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    std::uint64_t q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    std::uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return std::min(r, p - r);
}

} // namespace

std::optional<Scalar> sqrt_exact(const Scalar& s) {
    const FieldSpec& f = s.field();
    if (s.is_zero()) return s;
    if (f.kind == FieldKind::Prime) {
        auto r = sqrt_mod(s.residue(), f.modulus);
        if (!r) return std::nullopt;
        return Scalar(f, static_cast<std::int64_t>(*r));
    }
    const Rational& c = s.re();
    const Rational& d = s.im();
    if (d.is_zero()) {
        if (c.sign() >= 0) {
            auto r = rational_sqrt(c);
            if (!r) return std::nullopt;
            return Scalar(f, *r);
        }
        if (f.kind != FieldKind::Gaussian) return std::nullopt;
        auto r = rational_sqrt(-c);
        if (!r) return std::nullopt;
        return Scalar(f, Rational(0), *r);
    }
    auto norm = rational_sqrt(c * c + d * d);
    if (!norm) return std::nullopt;
    auto a = rational_sqrt((c + *norm) / Rational(2));
    if (!a || a->is_zero()) return std::nullopt;
    Rational b = d / (Rational(2) * *a);
    return Scalar(f, *a, b);
}

} // namespace qhopf
