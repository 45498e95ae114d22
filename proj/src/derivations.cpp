#include "g2orbits/derivations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "g2orbits/error.hpp"

namespace g2orbits {

namespace {

constexpr std::size_t kFlatDim = kOctonionDim * kOctonionDim;

std::size_t flat_index(std::size_t row, std::size_t col) { return row * kOctonionDim + col; }

}  // namespace

bool satisfies_leibniz(const Matrix<Rational>& m) {
    if (m.rows() != kOctonionDim || m.cols() != kOctonionDim) return false;
    std::array<Octonion, kOctonionDim> images;
    for (std::size_t i = 0; i < kOctonionDim; ++i) images[i] = apply(m, Octonion::basis(i));
    const auto& table = multiplication_table();
    for (std::size_t i = 0; i < kOctonionDim; ++i) {
        for (std::size_t j = 0; j < kOctonionDim; ++j) {
            const auto [sign, p] = table[i][j];
            const Octonion lhs = images[p] * Rational(sign);
            const Octonion rhs = images[i] * Octonion::basis(j) + Octonion::basis(i) * images[j];
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool is_skew(const Matrix<Rational>& m) { return m.transpose() == -m; }

Derivation::Derivation(Matrix<Rational> matrix) : matrix_(std::move(matrix)) {
    if (!satisfies_leibniz(matrix_)) throw Error(ErrorCode::NotDerivation, "matrix violates the Leibniz rule");
}

Matrix<Rational> leibniz_system() {
    const auto& table = multiplication_table();
    Matrix<Rational> sys(kOctonionDim * kFlatDim, kFlatDim);
    for (std::size_t i = 0; i < kOctonionDim; ++i) {
        for (std::size_t j = 0; j < kOctonionDim; ++j) {
            const std::size_t base = (i * kOctonionDim + j) * kOctonionDim;
            // D(e_i e_j)
            const auto [s, p] = table[i][j];
            for (std::size_t k = 0; k < kOctonionDim; ++k) sys(base + k, flat_index(k, p)) += Rational(s);
            // -(D e_i) e_j - e_i (D e_j)
            for (std::size_t r = 0; r < kOctonionDim; ++r) {
                const auto [s1, q1] = table[r][j];
                sys(base + q1, flat_index(r, i)) -= Rational(s1);
                const auto [s2, q2] = table[i][r];
                sys(base + q2, flat_index(r, j)) -= Rational(s2);
            }
        }
    }
    return sys;
}

G2Basis G2Basis::build() {
    const auto kernel = kernel_basis(leibniz_system());
    if (kernel.size() != kG2Dim)
        throw Error(ErrorCode::Internal,
                    "derivation algebra has dimension " + std::to_string(kernel.size()) + ", expected 14");
    G2Basis b;
    for (const auto& v : kernel) {
        const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
        b.pivots_.push_back(static_cast<std::size_t>(lead - v.begin()));
        b.elements_.emplace_back(Matrix<Rational>(kOctonionDim, kOctonionDim, v), Derivation::Trusted{});
    }
    b.structure_.resize(kG2Dim * kG2Dim * kG2Dim);
    for (std::size_t i = 0; i < kG2Dim; ++i) {
        for (std::size_t j = i + 1; j < kG2Dim; ++j) {
            const auto c = b.coordinates(bracket(b.elements_[i], b.elements_[j]));
            for (std::size_t k = 0; k < kG2Dim; ++k) {
                b.structure_[(i * kG2Dim + j) * kG2Dim + k] = c[k];
                b.structure_[(j * kG2Dim + i) * kG2Dim + k] = -c[k];
            }
        }
    }
    return b;
}

std::vector<Rational> G2Basis::coordinates(const Matrix<Rational>& d) const {
    if (d.rows() != kOctonionDim || d.cols() != kOctonionDim)
        throw Error(ErrorCode::NotInSpan, "expected an 8x8 matrix");
    std::vector<Rational> c(elements_.size());
    Matrix<Rational> rebuilt(kOctonionDim, kOctonionDim);
    for (std::size_t k = 0; k < elements_.size(); ++k) {
        c[k] = d.entries()[pivots_[k]];
        if (!c[k].is_zero()) rebuilt += elements_[k].matrix() * c[k];
    }
    if (rebuilt != d) throw Error(ErrorCode::NotInSpan, "matrix is not in the span of the derivation basis");
    return c;
}

Derivation G2Basis::combine(std::span<const Rational> coords) const {
    if (coords.size() != elements_.size()) throw Error(ErrorCode::InvalidInput, "coordinate vector length mismatch");
    Matrix<Rational> m(kOctonionDim, kOctonionDim);
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (!coords[k].is_zero()) m += elements_[k].matrix() * coords[k];
    }
    return {std::move(m), Derivation::Trusted{}};
}

std::vector<Rational> G2Basis::bracket_coords(std::span<const Rational> x, std::span<const Rational> y) const {
    const std::size_t n = elements_.size();
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero() || i == j) continue;
            const Rational xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = structure_constant(i, j, k);
                if (!c.is_zero()) out[k] += xy * c;
            }
        }
    }
    return out;
}

const G2Basis& derivation_basis() {
    static const G2Basis basis = G2Basis::build();
    return basis;
}

Derivation bracket(const Derivation& d1, const Derivation& d2) {
    return {d1.matrix() * d2.matrix() - d2.matrix() * d1.matrix(), Derivation::Trusted{}};
}

Matrix<Rational> adjoint_matrix(const Derivation& d, const G2Basis& basis) {
    const auto x = basis.coordinates(d);
    const std::size_t n = basis.size();
    Matrix<Rational> ad(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& c = basis.structure_constant(i, j, k);
                if (!c.is_zero()) ad(k, j) += x[i] * c;
            }
        }
    }
    return ad;
}

Rational killing_form(const Derivation& x, const Derivation& y, const G2Basis& basis) {
    return (adjoint_matrix(x, basis) * adjoint_matrix(y, basis)).trace();
}

Matrix<Rational> killing_gram(const G2Basis& basis) {
    const std::size_t n = basis.size();
    std::vector<Matrix<Rational>> ads;
    ads.reserve(n);
    for (const auto& d : basis.elements()) ads.push_back(adjoint_matrix(d, basis));
    Matrix<Rational> gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            gram(i, j) = (ads[i] * ads[j]).trace();
            gram(j, i) = gram(i, j);
        }
    }
    return gram;
}

std::vector<Derivation> fixed_subalgebra(const Matrix<Rational>& sigma, const G2Basis& basis) {
    if (!is_algebra_automorphism(sigma))
        throw Error(ErrorCode::NotAutomorphism, "sigma is not an algebra automorphism of the octonions");
    // sigma D sigma^-1 = D  <=>  sigma D - D sigma = 0
    const std::size_t n = basis.size();
    Matrix<Rational> sys(kFlatDim, n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& b = basis[k].matrix();
        const Matrix<Rational> defect = sigma * b - b * sigma;
        for (std::size_t f = 0; f < kFlatDim; ++f) sys(f, k) = defect.entries()[f];
    }
    std::vector<Derivation> out;
    for (const auto& c : kernel_basis(sys)) out.push_back(basis.combine(c));
    return out;
}

std::vector<Derivation> annihilator(const Octonion& x, const G2Basis& basis) {
    const std::size_t n = basis.size();
    Matrix<Rational> sys(kOctonionDim, n);
    for (std::size_t k = 0; k < n; ++k) {
        const Octonion y = basis[k].apply(x);
        for (std::size_t i = 0; i < kOctonionDim; ++i) sys(i, k) = y[i];
    }
    std::vector<Derivation> out;
    for (const auto& c : kernel_basis(sys)) out.push_back(basis.combine(c));
    return out;
}

SubalgebraSummary subalgebra_structure(std::span<const Derivation> generators, const G2Basis& basis) {
    const std::size_t n = basis.size();
    std::vector<std::vector<Rational>> coords;
    coords.reserve(generators.size());
    for (const auto& g : generators) coords.push_back(basis.coordinates(g));

    SubalgebraSummary summary;
    if (coords.empty()) return summary;
    const auto span_basis = canonical_span_basis<Rational>(coords, n);
    const std::size_t dim = span_basis.size();
    summary.dim = dim;
    if (dim == 0) return summary;

    // brackets[a][b] = [s_a, s_b]
    std::vector<std::vector<std::vector<Rational>>> brackets(dim, std::vector<std::vector<Rational>>(dim));
    std::vector<std::vector<Rational>> derived_gens;
    for (std::size_t a = 0; a < dim; ++a) {
        brackets[a][a] = std::vector<Rational>(n);
        for (std::size_t b = a + 1; b < dim; ++b) {
            brackets[a][b] = basis.bracket_coords(span_basis[a], span_basis[b]);
            brackets[b][a] = brackets[a][b];
            for (auto& x : brackets[b][a]) x = -x;
            derived_gens.push_back(brackets[a][b]);
        }
    }

    if (!derived_gens.empty()) {
        auto closure = span_basis;
        closure.insert(closure.end(), derived_gens.begin(), derived_gens.end());
        if (rank(Matrix<Rational>::from_rows(closure, n)) != dim)
            throw Error(ErrorCode::NotClosed, "span is not closed under the bracket");
        summary.derived_dim = rank(Matrix<Rational>::from_rows(derived_gens, n));
    }
    summary.is_abelian = summary.derived_dim == 0;

    // x = sum c_a s_a is central iff sum_a c_a [s_a, s_b] = 0 for every b.
    Matrix<Rational> center_sys(dim * n, dim);
    for (std::size_t b = 0; b < dim; ++b)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t a = 0; a < dim; ++a) center_sys(b * n + k, a) = brackets[a][b][k];
    summary.center_dim = dim - rank(center_sys);
    return summary;
}

Matrix<double> exp_derivation_numeric(const Derivation& d, double t) {
    constexpr std::size_t n = kOctonionDim;
    constexpr int kTaylorDegree = 16;
    constexpr double kScaledNormTarget = 0.5;

    Matrix<double> a(n, n);
    double norm_inf = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = t * d.matrix()(i, j).to_double();
            row_sum += std::abs(a(i, j));
        }
        norm_inf = std::max(norm_inf, row_sum);
    }
    int squarings = 0;
    if (norm_inf > kScaledNormTarget) squarings = static_cast<int>(std::ceil(std::log2(norm_inf / kScaledNormTarget)));
    a *= std::ldexp(1.0, -squarings);

    // Horner: I + A(I + A/2(I + A/3(...)))
    const Matrix<double> id = Matrix<double>::identity(n);
    Matrix<double> result = id;
    for (int k = kTaylorDegree; k >= 1; --k) result = id + (a * result) * (1.0 / k);
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

}  // namespace g2orbits
