#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "scx/error.hpp"

namespace scx {

/// Exact rational scalar. Always kept in canonical form: positive
/// denominator, gcd(|num|, den) = 1. All geometry in this library runs on
/// these; nothing is ever rounded.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, mirrors numeric literals
    Rational(long num, long den) {
        if (den == 0) throw ValueError("zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}

    /// Accepts "p", "-p" or "p/q" with arbitrary-precision decimal digits.
    static Rational parse(std::string_view text) {
        auto bad = [&](const char* why) {
            throw ValueError("bad rational literal '" + std::string(text) + "': " + why);
        };
        if (text.empty()) bad("empty");
        std::size_t slash = text.find('/');
        std::string_view num = text.substr(0, slash == std::string_view::npos ? text.size() : slash);
        std::optional<std::string_view> den;
        if (slash != std::string_view::npos) {
            den = text.substr(slash + 1);
            if (den->find('/') != std::string_view::npos) bad("more than one '/'");
        }
        auto check_int = [&](std::string_view part) {
            if (part.empty()) bad("missing digits");
            std::size_t i = part[0] == '-' ? 1 : 0;
            if (i == part.size()) bad("missing digits");
            for (; i < part.size(); ++i)
                if (part[i] < '0' || part[i] > '9') bad("not a decimal integer");
        };
        check_int(num);
        mpz_class n(std::string(num), 10);
        if (!den) return Rational(mpq_class(n));
        check_int(*den);
        mpz_class d(std::string(*den), 10);
        if (d == 0) bad("zero denominator");
        Rational r;
        r.q_ = mpq_class(n) / mpq_class(d);
        return r;
    }

    const mpz_class& numerator() const { return q_.get_num(); }
    const mpz_class& denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ValueError("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// True iff this is the square of a rational (requires value >= 0).
    bool is_perfect_square() const {
        if (sign() < 0) return false;
        return mpz_perfect_square_p(q_.get_num().get_mpz_t()) != 0 &&
               mpz_perfect_square_p(q_.get_den().get_mpz_t()) != 0;
    }

    /// Exact square root; throws unless is_perfect_square().
    Rational sqrt() const {
        if (!is_perfect_square()) throw ValueError("not a perfect rational square");
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), q_.get_num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q_.get_den().get_mpz_t());
        Rational r;
        r.q_ = mpq_class(n) / mpq_class(d);
        return r;
    }

    /// Canonical text form: "p" when integral, otherwise "p/q".
    std::string to_string() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class q_;
};

inline Rational sq(const Rational& r) { return r * r; }

}  // namespace scx
