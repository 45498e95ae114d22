#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "g2orbits/matrix.hpp"
#include "g2orbits/octonion.hpp"
#include "g2orbits/rational.hpp"

namespace g2orbits {

inline constexpr std::size_t kG2Dim = 14;

/// Linear map D of the octonions with D(xy) = (Dx)y + x(Dy), stored as the
/// 8x8 matrix acting on coordinates (column j is D e_j).
class Derivation {
public:
    struct Trusted {};

    /// Zero derivation.
    Derivation() : matrix_(kOctonionDim, kOctonionDim) {}

    /// Validates the Leibniz rule on all basis pairs; throws Error(NotDerivation).
    explicit Derivation(Matrix<Rational> matrix);

    /// Skips validation. For results that are derivations by construction
    /// (brackets and linear combinations of derivations).
    Derivation(Matrix<Rational> matrix, Trusted) : matrix_(std::move(matrix)) {}

    [[nodiscard]] const Matrix<Rational>& matrix() const { return matrix_; }
    [[nodiscard]] Octonion apply(const Octonion& x) const { return g2orbits::apply(matrix_, x); }
    [[nodiscard]] bool is_zero() const { return matrix_.is_zero(); }

    /// Row-major 64-vector of matrix entries.
    [[nodiscard]] std::vector<Rational> flatten() const { return matrix_.entries(); }

    Derivation& operator+=(const Derivation& rhs) {
        matrix_ += rhs.matrix_;
        return *this;
    }
    Derivation& operator-=(const Derivation& rhs) {
        matrix_ -= rhs.matrix_;
        return *this;
    }
    Derivation& operator*=(const Rational& s) {
        matrix_ *= s;
        return *this;
    }
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
    friend Derivation operator*(const Rational& s, Derivation a) { return a *= s; }
    friend Derivation operator*(Derivation a, const Rational& s) { return a *= s; }
    friend bool operator==(const Derivation&, const Derivation&) = default;

private:
    Matrix<Rational> matrix_;
};

bool satisfies_leibniz(const Matrix<Rational>& m);

/// (Dx, y) + (x, Dy) = 0 on basis pairs, i.e. the matrix is antisymmetric.
bool is_skew(const Matrix<Rational>& m);

/// The 512x64 system whose kernel is Der(O): rows ordered by basis pair
/// (i, j), i outer, then output coordinate k; unknowns are the row-major
/// entries of D.
Matrix<Rational> leibniz_system();

/// Canonical basis of the 14-dimensional derivation algebra with its exact
/// structure constants [D_i, D_j] = sum_k c(i, j, k) D_k.
class G2Basis {
public:
    /// Builds the basis from the Leibniz system. Throws Error(Internal) if the
    /// kernel dimension is not 14.
    static G2Basis build();

    [[nodiscard]] std::size_t size() const { return elements_.size(); }
    [[nodiscard]] const std::vector<Derivation>& elements() const { return elements_; }
    [[nodiscard]] const Derivation& operator[](std::size_t i) const { return elements_[i]; }

    [[nodiscard]] const Rational& structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
        return structure_[(i * kG2Dim + j) * kG2Dim + k];
    }

    /// Coordinates of D in this basis. Throws Error(NotInSpan).
    [[nodiscard]] std::vector<Rational> coordinates(const Matrix<Rational>& d) const;
    [[nodiscard]] std::vector<Rational> coordinates(const Derivation& d) const { return coordinates(d.matrix()); }

    [[nodiscard]] Derivation combine(std::span<const Rational> coords) const;

    /// [x, y] computed on coordinates through the structure constants.
    [[nodiscard]] std::vector<Rational> bracket_coords(std::span<const Rational> x, std::span<const Rational> y) const;

private:
    G2Basis() = default;

    std::vector<Derivation> elements_;
    // Flat index (row-major in the 8x8 matrix) of each basis element's
    // leading 1; every other basis element vanishes there.
    std::vector<std::size_t> pivots_;
    std::vector<Rational> structure_;
};

/// Process-wide basis, built on first use.
const G2Basis& derivation_basis();

Derivation bracket(const Derivation& d1, const Derivation& d2);

/// Matrix of X -> [D, X] in the basis; column j holds coordinates of [D, B_j].
Matrix<Rational> adjoint_matrix(const Derivation& d, const G2Basis& basis);

/// tr(ad X ad Y).
Rational killing_form(const Derivation& x, const Derivation& y, const G2Basis& basis);

/// Gram matrix of the Killing form on the basis.
Matrix<Rational> killing_gram(const G2Basis& basis);

/// Canonical basis of {D : sigma D sigma^-1 = D}. Throws
/// Error(NotAutomorphism) if sigma is not an algebra automorphism.
std::vector<Derivation> fixed_subalgebra(const Matrix<Rational>& sigma, const G2Basis& basis);

/// Derivations D with D x = 0. For x = e1 this is su(3).
std::vector<Derivation> annihilator(const Octonion& x, const G2Basis& basis);

struct SubalgebraSummary {
    std::size_t dim = 0;
    std::size_t derived_dim = 0;
    std::size_t center_dim = 0;
    bool is_abelian = true;

    friend bool operator==(const SubalgebraSummary&, const SubalgebraSummary&) = default;
};

/// Dimension, derived-algebra dimension and center dimension of span(S).
/// Throws Error(NotClosed) if span(S) is not closed under the bracket.
SubalgebraSummary subalgebra_structure(std::span<const Derivation> generators, const G2Basis& basis);

/// exp(tD) by scaling and squaring with a degree-16 Taylor polynomial.
Matrix<double> exp_derivation_numeric(const Derivation& d, double t);

}  // namespace g2orbits
