#pragma once

#include <array>
#include <cstddef>
#include <ostream>

#include "g2orbits/matrix.hpp"
#include "g2orbits/rational.hpp"

namespace g2orbits {

inline constexpr std::size_t kOctonionDim = 8;

/// Element of the Cayley algebra with rational coordinates in the basis
/// e0 = 1, e1, ..., e7.
///
/// The product is the doubling of the quaternions H = span{1, e1, e2, e3}
/// (e1e2 = e3, e2e3 = e1, e3e1 = e2) along e4:
///
///     (a + b e4)(c + d e4) = (ac - conj(d) b) + (b conj(c) + d a) e4
///
/// with e5 = e1e4, e6 = e2e4, e7 = e3e4.
class Octonion {
public:
    Octonion() = default;
    explicit Octonion(std::array<Rational, kOctonionDim> coords) : coords_(std::move(coords)) {}

    static Octonion basis(std::size_t i);
    static Octonion scalar(const Rational& r);

    [[nodiscard]] const std::array<Rational, kOctonionDim>& coords() const { return coords_; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }

    [[nodiscard]] bool is_zero() const;

    Octonion& operator+=(const Octonion& rhs);
    Octonion& operator-=(const Octonion& rhs);
    Octonion& operator*=(const Rational& s);

    friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
    friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
    friend Octonion operator-(Octonion a) { return a *= Rational(-1); }
    friend Octonion operator*(Octonion a, const Rational& s) { return a *= s; }
    friend Octonion operator*(const Rational& s, Octonion a) { return a *= s; }
    friend Octonion operator*(const Octonion& x, const Octonion& y);
    friend bool operator==(const Octonion&, const Octonion&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Octonion& x);

private:
    std::array<Rational, kOctonionDim> coords_{};
};

Octonion oct_mul(const Octonion& x, const Octonion& y);

/// conj(x) = 2(x, e0)e0 - x.
Octonion oct_conj(const Octonion& x);

/// Dot product making {e_i} orthonormal.
Rational inner(const Octonion& x, const Octonion& y);

/// N(x) = (x, x); multiplicative.
Rational norm(const Octonion& x);

/// gamma(a + b e4) = a - b e4.
Octonion gamma(const Octonion& x);

/// gamma1(a + m) = conj(a) + conj(m) in the C + C^3 model: negates e1, e3, e5, e7.
Octonion gamma1(const Octonion& x);

/// The automorphisms above as 8x8 matrices acting on coordinates.
Matrix<Rational> gamma_matrix();
Matrix<Rational> gamma1_matrix();

/// e_i e_j = sign * e_index.
struct BasisProduct {
    int sign;
    std::size_t index;
};

/// Structure table of the basis, derived from oct_mul once.
const std::array<std::array<BasisProduct, kOctonionDim>, kOctonionDim>& multiplication_table();

/// True if sigma(e_i e_j) = sigma(e_i) sigma(e_j) on all 64 basis pairs and
/// sigma is invertible.
bool is_algebra_automorphism(const Matrix<Rational>& sigma);

Octonion apply(const Matrix<Rational>& m, const Octonion& x);

// ---------------------------------------------------------------------------
// C + C^3 model.

/// a + (m1, m2, m3), standing for x = a + m1 e2 + m2 e4 + m3 e6 with complex
/// numbers p + q i = p + q e1 acting from the left.
struct ComplexModelElement {
    GaussianRational a;
    std::array<GaussianRational, 3> m;

    friend bool operator==(const ComplexModelElement&, const ComplexModelElement&) = default;
};

/// Sign choices pinning the identification of the two models.
///
/// component_signs[k] multiplies m_{k+1} in the identification; the exterior
/// product is cross_orientation times the standard cross product
/// (m2n3 - m3n2, m3n1 - m1n3, m1n2 - m2n1).
struct ComplexModelConvention {
    std::array<int, 3> component_signs;
    int cross_orientation;

    friend bool operator==(const ComplexModelConvention&, const ComplexModelConvention&) = default;
};

/// Literal identification with the exterior product reversed. Among the
/// conventions with component signs (+,+,+) this is the only one whose
/// product agrees with the doubling product.
inline constexpr ComplexModelConvention kComplexModel{{1, 1, 1}, -1};

ComplexModelElement to_complex_model(const Octonion& x, const ComplexModelConvention& conv = kComplexModel);
Octonion from_complex_model(const ComplexModelElement& u, const ComplexModelConvention& conv = kComplexModel);

/// <m, n> = sum m_k conj(n_k).
GaussianRational hermitian(const std::array<GaussianRational, 3>& m, const std::array<GaussianRational, 3>& n);

std::array<GaussianRational, 3> exterior(const std::array<GaussianRational, 3>& m,
                                         const std::array<GaussianRational, 3>& n, int orientation);

/// (a + m)(b + n) = (ab - <m, n>) + (a n + conj(b) m - conj(m x n)).
ComplexModelElement cx_mul(const ComplexModelElement& u, const ComplexModelElement& v,
                           const ComplexModelConvention& conv = kComplexModel);

/// Whether the model product under conv reproduces oct_mul on all 64 basis pairs.
bool models_agree(const ComplexModelConvention& conv);

}  // namespace g2orbits
