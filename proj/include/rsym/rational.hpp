#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rsym {

/// Arbitrary-precision rational, always reduced, denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(std::int64_t n) : v_(static_cast<long>(n)) {}
    Rational(std::int64_t num, std::int64_t den) : v_(static_cast<long>(num), static_cast<long>(den)) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    static Rational parse(std::string_view s) {
        try {
            mpq_class q(std::string(s), 10);
            q.canonicalize();
            return Rational(std::move(q));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
        }
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational inv() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1 / v_));
    }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return cmp(v_, o.v_) < 0; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    /// Prints "p/q", or just "p" for integers.
    friend std::string to_string(const Rational& r) { return r.v_.get_str(); }

    struct Context {
        Rational zero() const { return Rational(); }
        Rational one() const { return Rational(1); }
        Rational from_int(std::int64_t n) const { return Rational(n); }
        Rational from_mpz(const mpz_class& z) const { return Rational(z); }
        Rational parse(std::string_view s) const { return Rational::parse(s); }
        bool operator==(const Context&) const { return true; }
        std::string name() const { return "rationals"; }
    };

private:
    mpq_class v_;
};

}  // namespace rsym
