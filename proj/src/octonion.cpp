#include "g2orbits/octonion.hpp"

#include <stdexcept>

namespace g2orbits {

namespace {

using Quaternion = std::array<Rational, 4>;

Quaternion qmul(const Quaternion& a, const Quaternion& b) {
    return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Quaternion qconj(const Quaternion& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Quaternion lower(const Octonion& x) { return {x[0], x[1], x[2], x[3]}; }
Quaternion upper(const Octonion& x) { return {x[4], x[5], x[6], x[7]}; }

// Coordinates (x_{2k}, x_{2k+1}) hold the complex number p + q e1 placed at
// e0, e2, e4 and e6. For e6 the e1-part lands on e1e6 = -e7.
constexpr std::array<int, 4> kImagSign{1, 1, 1, -1};

GaussianRational complex_at(const Octonion& x, std::size_t slot) {
    return {x[2 * slot], kImagSign[slot] > 0 ? x[2 * slot + 1] : -x[2 * slot + 1]};
}

void set_complex_at(Octonion& x, std::size_t slot, const GaussianRational& z) {
    x[2 * slot] = z.re();
    x[2 * slot + 1] = kImagSign[slot] > 0 ? z.im() : -z.im();
}

GaussianRational scaled(const GaussianRational& z, int sign) { return sign > 0 ? z : -z; }

}  // namespace

Octonion Octonion::basis(std::size_t i) {
    if (i >= kOctonionDim) throw std::out_of_range("octonion basis index");
    Octonion x;
    x.coords_[i] = Rational(1);
    return x;
}

Octonion Octonion::scalar(const Rational& r) {
    Octonion x;
    x.coords_[0] = r;
    return x;
}

bool Octonion::is_zero() const {
    for (const auto& c : coords_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

Octonion& Octonion::operator+=(const Octonion& rhs) {
    for (std::size_t i = 0; i < kOctonionDim; ++i) coords_[i] += rhs.coords_[i];
    return *this;
}

Octonion& Octonion::operator-=(const Octonion& rhs) {
    for (std::size_t i = 0; i < kOctonionDim; ++i) coords_[i] -= rhs.coords_[i];
    return *this;
}

Octonion& Octonion::operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

Octonion operator*(const Octonion& x, const Octonion& y) {
    const Quaternion a = lower(x), b = upper(x), c = lower(y), d = upper(y);
    const Quaternion ac = qmul(a, c), db = qmul(qconj(d), b);
    const Quaternion bc = qmul(b, qconj(c)), da = qmul(d, a);
    Octonion out;
    for (std::size_t k = 0; k < 4; ++k) {
        out[k] = ac[k] - db[k];
        out[k + 4] = bc[k] + da[k];
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Octonion& x) {
    os << '[';
    for (std::size_t i = 0; i < kOctonionDim; ++i) os << (i ? ", " : "") << x[i];
    return os << ']';
}

Octonion oct_mul(const Octonion& x, const Octonion& y) { return x * y; }

Octonion oct_conj(const Octonion& x) {
    Octonion out = -x;
    out[0] = x[0];
    return out;
}

Rational inner(const Octonion& x, const Octonion& y) {
    Rational s;
    for (std::size_t i = 0; i < kOctonionDim; ++i) s += x[i] * y[i];
    return s;
}

Rational norm(const Octonion& x) { return inner(x, x); }

Octonion gamma(const Octonion& x) {
    Octonion out = x;
    for (std::size_t i = 4; i < kOctonionDim; ++i) out[i] = -x[i];
    return out;
}

Octonion gamma1(const Octonion& x) {
    Octonion out = x;
    for (std::size_t i = 1; i < kOctonionDim; i += 2) out[i] = -x[i];
    return out;
}

namespace {

template <typename Map>
Matrix<Rational> matrix_of(Map map) {
    Matrix<Rational> m(kOctonionDim, kOctonionDim);
    for (std::size_t j = 0; j < kOctonionDim; ++j) {
        const Octonion col = map(Octonion::basis(j));
        for (std::size_t i = 0; i < kOctonionDim; ++i) m(i, j) = col[i];
    }
    return m;
}

}  // namespace

Matrix<Rational> gamma_matrix() { return matrix_of(gamma); }
Matrix<Rational> gamma1_matrix() { return matrix_of(gamma1); }

const std::array<std::array<BasisProduct, kOctonionDim>, kOctonionDim>& multiplication_table() {
    static const auto table = [] {
        std::array<std::array<BasisProduct, kOctonionDim>, kOctonionDim> t{};
        for (std::size_t i = 0; i < kOctonionDim; ++i) {
            for (std::size_t j = 0; j < kOctonionDim; ++j) {
                const Octonion p = Octonion::basis(i) * Octonion::basis(j);
                bool found = false;
                for (std::size_t k = 0; k < kOctonionDim; ++k) {
                    if (p[k].is_zero()) continue;
                    if (found || (p[k] != Rational(1) && p[k] != Rational(-1)))
                        throw std::logic_error("octonion basis product is not a signed basis element");
                    t[i][j] = {p[k].sign(), k};
                    found = true;
                }
                if (!found) throw std::logic_error("octonion basis product vanished");
            }
        }
        return t;
    }();
    return table;
}

Octonion apply(const Matrix<Rational>& m, const Octonion& x) {
    if (m.rows() != kOctonionDim || m.cols() != kOctonionDim)
        throw std::invalid_argument("octonion map must be 8x8");
    Octonion out;
    for (std::size_t i = 0; i < kOctonionDim; ++i) {
        Rational s;
        for (std::size_t j = 0; j < kOctonionDim; ++j) {
            if (!m(i, j).is_zero() && !x[j].is_zero()) s += m(i, j) * x[j];
        }
        out[i] = std::move(s);
    }
    return out;
}

bool is_algebra_automorphism(const Matrix<Rational>& sigma) {
    if (sigma.rows() != kOctonionDim || sigma.cols() != kOctonionDim) return false;
    if (rank(sigma) != kOctonionDim) return false;
    std::array<Octonion, kOctonionDim> images;
    for (std::size_t i = 0; i < kOctonionDim; ++i) images[i] = apply(sigma, Octonion::basis(i));
    const auto& table = multiplication_table();
    for (std::size_t i = 0; i < kOctonionDim; ++i) {
        for (std::size_t j = 0; j < kOctonionDim; ++j) {
            const auto [sign, k] = table[i][j];
            const Octonion lhs = images[k] * Rational(sign);
            if (lhs != images[i] * images[j]) return false;
        }
    }
    return true;
}

ComplexModelElement to_complex_model(const Octonion& x, const ComplexModelConvention& conv) {
    ComplexModelElement u;
    u.a = complex_at(x, 0);
    for (std::size_t k = 0; k < 3; ++k) u.m[k] = scaled(complex_at(x, k + 1), conv.component_signs[k]);
    return u;
}

Octonion from_complex_model(const ComplexModelElement& u, const ComplexModelConvention& conv) {
    Octonion x;
    set_complex_at(x, 0, u.a);
    for (std::size_t k = 0; k < 3; ++k) set_complex_at(x, k + 1, scaled(u.m[k], conv.component_signs[k]));
    return x;
}

GaussianRational hermitian(const std::array<GaussianRational, 3>& m, const std::array<GaussianRational, 3>& n) {
    GaussianRational s;
    for (std::size_t k = 0; k < 3; ++k) s += m[k] * n[k].conj();
    return s;
}

std::array<GaussianRational, 3> exterior(const std::array<GaussianRational, 3>& m,
                                         const std::array<GaussianRational, 3>& n, int orientation) {
    std::array<GaussianRational, 3> out{m[1] * n[2] - m[2] * n[1], m[2] * n[0] - m[0] * n[2],
                                        m[0] * n[1] - m[1] * n[0]};
    if (orientation < 0)
        for (auto& z : out) z = -z;
    return out;
}

ComplexModelElement cx_mul(const ComplexModelElement& u, const ComplexModelElement& v,
                           const ComplexModelConvention& conv) {
    ComplexModelElement w;
    w.a = u.a * v.a - hermitian(u.m, v.m);
    const auto cross = exterior(u.m, v.m, conv.cross_orientation);
    const GaussianRational bbar = v.a.conj();
    for (std::size_t k = 0; k < 3; ++k) w.m[k] = u.a * v.m[k] + bbar * u.m[k] - cross[k].conj();
    return w;
}

bool models_agree(const ComplexModelConvention& conv) {
    for (std::size_t i = 0; i < kOctonionDim; ++i) {
        for (std::size_t j = 0; j < kOctonionDim; ++j) {
            const Octonion x = Octonion::basis(i), y = Octonion::basis(j);
            const Octonion via_model = from_complex_model(cx_mul(to_complex_model(x, conv), to_complex_model(y, conv), conv), conv);
            if (via_model != x * y) return false;
        }
    }
    return true;
}

}  // namespace g2orbits
