#include "g2orbits/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace g2orbits {

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!valid_integer(s)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text), mpz_class(1));
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!den.empty() && (den.front() == '-' || den.front() == '+'))
        throw std::invalid_argument("sign not allowed in denominator: '" + std::string(text) + "'");
    const mpz_class d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    Rational re = re_ * rhs.re_ - im_ * rhs.im_;
    Rational im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
    const Rational n = rhs.norm();
    if (n.is_zero()) throw std::domain_error("gaussian rational division by zero");
    *this *= rhs.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    std::string out = re_.is_zero() ? std::string() : re_.to_string();
    if (im_.sign() > 0 && !out.empty()) out += "+";
    out += im_.to_string() + "i";
    return out;
}

}  // namespace g2orbits
