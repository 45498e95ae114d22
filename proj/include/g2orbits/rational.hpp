#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace g2orbits {

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0,
/// zero stored as 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    Rational(const mpz_class& numerator, const mpz_class& denominator);

    /// Parses "p", "p/q", "-p/q" (decimal integers, optional sign).
    /// Throws std::invalid_argument on malformed text or a zero denominator.
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const;

    Rational& operator+=(const Rational& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    Rational& operator-=(const Rational& rhs) {
        value_ -= rhs.value_;
        return *this;
    }
    Rational& operator*=(const Rational& rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) {
        Rational r;
        r.value_ = -x.value_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

private:
    mpq_class value_;
};

Rational abs(const Rational& x);

/// re + im·i with exact rational parts; i is identified with e1 in the octonions.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    [[nodiscard]] const Rational& re() const { return re_; }
    [[nodiscard]] const Rational& im() const { return im_; }
    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
    /// re² + im².
    [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }
    [[nodiscard]] std::string to_string() const;

    GaussianRational& operator+=(const GaussianRational& rhs) {
        re_ += rhs.re_;
        im_ += rhs.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& rhs) {
        re_ -= rhs.re_;
        im_ -= rhs.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& rhs);
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
    friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
    friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
    friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) { return lhs /= rhs; }
    friend GaussianRational operator-(const GaussianRational& x) { return {-x.re_, -x.im_}; }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.to_string(); }

private:
    Rational re_;
    Rational im_;
};

}  // namespace g2orbits
