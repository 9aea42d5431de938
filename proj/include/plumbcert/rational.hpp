#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "plumbcert/errors.hpp"

namespace plumbcert {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational number, always stored reduced with denominator >= 1.
///
/// GMP's mpq only canonicalizes on request, so every constructor here
/// normalizes; arithmetic on canonical operands stays canonical.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}                       // NOLINT(google-explicit-constructor)
    Rational(const Int& n) : value_(n) {}                 // NOLINT(google-explicit-constructor)
    Rational(const Int& num, const Int& den) : value_(num, den) {
        if (den == 0) throw BadParams("Rational: zero denominator");
        value_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    const Int& numerator() const { return value_.get_num(); }
    const Int& denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    bool is_negative() const { return sgn(value_) < 0; }
    int sign() const { return sgn(value_); }

    /// Largest integer <= *this.
    Int floor() const {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
        return q;
    }

    Rational abs() const { return is_negative() ? -*this : *this; }

    /// Integer power; negative exponents invert (requires nonzero value).
    Rational pow(const Int& e) const {
        if (sgn(e) < 0 && is_zero()) throw BadParams("Rational::pow: 0 to a negative power");
        if (!e.fits_ulong_p() && !Int(-e).fits_ulong_p())
            throw BadParams("Rational::pow: exponent out of range");
        const bool invert = sgn(e) < 0;
        const unsigned long k = invert ? Int(-e).get_ui() : e.get_ui();
        Int num, den;
        mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), k);
        mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), k);
        return invert ? Rational(den, num) : Rational(num, den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw BadParams("Rational: division by zero");
        return Rational(a.value_ / b.value_);
    }
    Rational operator-() const { return Rational(-value_); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) >= 0; }

    /// Canonical string: "p" when the denominator is 1, else "p/q".
    std::string str() const { return value_.get_str(); }

    /// Parse "p" or "p/q" in base 10. Rejects anything else.
    static Rational parse(const std::string& text) {
        if (text.empty()) throw ParseError("Rational: empty string");
        const auto slash = text.find('/');
        const std::string num_part = text.substr(0, slash);
        auto valid_int = [](const std::string& s) {
            if (s.empty()) return false;
            std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        if (!valid_int(num_part)) throw ParseError("Rational: bad numerator in '" + text + "'");
        Int num(num_part);
        if (slash == std::string::npos) return Rational(num);
        const std::string den_part = text.substr(slash + 1);
        if (!valid_int(den_part) || den_part[0] == '-' || den_part[0] == '+')
            throw ParseError("Rational: bad denominator in '" + text + "'");
        Int den(den_part);
        if (den == 0) throw ParseError("Rational: zero denominator in '" + text + "'");
        return Rational(num, den);
    }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_;
};

inline Rational operator*(const Int& a, const Rational& b) { return Rational(a) * b; }
inline Rational operator*(const Rational& a, const Int& b) { return a * Rational(b); }

} // namespace plumbcert
