#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "qhopf/error.hpp"

namespace qhopf {

// Exact rational number.  Values whose numerator and denominator fit in
// int64 stay inline; anything larger is held as a GMP rational.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : n_(n) { if (n == INT64_MIN) promote(mpq_class(mpz_class(std::to_string(n)))); }
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q) { assign(q); }

    Rational(const Rational& o) : n_(o.n_), d_(o.d_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            n_ = o.n_;
            d_ = o.d_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    int sign() const;
    bool is_integer() const;
    bool is_big() const { return big_ != nullptr; }
    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    Rational operator-() const;

    std::int64_t small_num() const { return n_; }

private:
    void assign(const mpq_class& q);
    void promote(const mpq_class& q) { big_ = std::make_unique<mpq_class>(q); n_ = 0; d_ = 1; }

    std::int64_t n_ = 0;
    std::int64_t d_ = 1;
    std::unique_ptr<mpq_class> big_;
};

enum class FieldKind : std::uint8_t { Rationals, Gaussian, Prime };

struct FieldSpec {
    FieldKind kind = FieldKind::Gaussian;
    std::uint64_t modulus = 0;

    static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
    static FieldSpec gaussian() { return {FieldKind::Gaussian, 0}; }
    static FieldSpec prime(std::uint64_t p);

    bool operator==(const FieldSpec& o) const { return kind == o.kind && modulus == o.modulus; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
    std::string name() const;   // "rationals", "gaussian", "fp 5"
};

std::uint64_t characteristic(const FieldSpec& f);

// Parses "rationals", "gaussian", "fp:<p>" or "fp <p>".
FieldSpec parse_field(const std::string& text);

class Scalar {
public:
    Scalar() = default;  // zero of Q(i)
    Scalar(const FieldSpec& f, std::int64_t n);
    Scalar(const FieldSpec& f, const Rational& re, const Rational& im = Rational());

    static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
    static Scalar from_ratio(const FieldSpec& f, std::int64_t n, std::int64_t d);
    static Scalar imaginary_unit(const FieldSpec& f);   // requires Q(i)

    const FieldSpec& field() const { return f_; }
    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    std::uint64_t residue() const { return static_cast<std::uint64_t>(re_.small_num()); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }

    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }
    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
    Scalar operator-() const;
    Scalar inv() const;
    Scalar pow(std::int64_t e) const;
    Scalar conj() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Adds a*b to this without a temporary when possible.
    void add_product(const Scalar& a, const Scalar& b);

private:
    static Rational residue_rational(std::uint64_t r);
    void check(const Scalar& b) const {
        if (f_ != b.f_) throw Error(ErrorKind::FieldMismatch, f_.name() + " vs " + b.f_.name());
    }
    FieldSpec f_;
    Rational re_, im_;
};

// Canonical text form: "a/b", "a/b+c/d*i", or a residue.
std::string format(const Scalar& s);
Scalar parse_scalar(const FieldSpec& f, const std::string& text);

std::optional<Scalar> fourth_root_of_unity(const FieldSpec& f);

// Some square root in the field if one exists (deterministic choice).
std::optional<Scalar> sqrt_exact(const Scalar& s);

} // namespace qhopf
