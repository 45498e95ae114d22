#include "g2orbits/roots.hpp"

#include <algorithm>
#include <string>

#include "g2orbits/error.hpp"

namespace g2orbits {

CartanElement::CartanElement(Rational t1, Rational t2, Rational t3)
    : tau_{std::move(t1), std::move(t2), std::move(t3)} {
    const Rational sum = tau_[0] + tau_[1] + tau_[2];
    if (!sum.is_zero())
        throw Error(ErrorCode::SumNonzero, "tau components sum to " + sum.to_string() + ", expected 0");
}

CartanElement CartanElement::projected(const Rational& t1, const Rational& t2, const Rational& t3) {
    const Rational mean = (t1 + t2 + t3) / Rational(3);
    return {t1 - mean, t2 - mean, t3 - mean};
}

bool CartanElement::is_zero() const {
    return std::all_of(tau_.begin(), tau_.end(), [](const Rational& x) { return x.is_zero(); });
}

CartanElement operator+(const CartanElement& a, const CartanElement& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

CartanElement operator-(const CartanElement& a, const CartanElement& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

CartanElement operator*(const Rational& s, const CartanElement& a) { return {s * a[0], s * a[1], s * a[2]}; }

namespace {

// Realizes m -> i diag(tau) m through the model identification, column by column.
Matrix<Rational> rotation_matrix(const std::array<Rational, 3>& tau) {
    Matrix<Rational> m(kOctonionDim, kOctonionDim);
    for (std::size_t j = 0; j < kOctonionDim; ++j) {
        ComplexModelElement u = to_complex_model(Octonion::basis(j));
        u.a = GaussianRational();
        for (std::size_t k = 0; k < 3; ++k) u.m[k] = GaussianRational(Rational(0), tau[k]) * u.m[k];
        const Octonion col = from_complex_model(u);
        for (std::size_t i = 0; i < kOctonionDim; ++i) m(i, j) = col[i];
    }
    return m;
}

}  // namespace

const CartanBasis& cartan_basis() {
    static const CartanBasis basis = [] {
        auto h1 = rotation_matrix({Rational(1), Rational(-1), Rational(0)});
        auto h2 = rotation_matrix({Rational(0), Rational(1), Rational(-1)});
        if (!satisfies_leibniz(h1) || !satisfies_leibniz(h2))
            throw Error(ErrorCode::Internal, "Cartan generators are not derivations; model sign convention mismatch");
        return CartanBasis{Derivation(std::move(h1), Derivation::Trusted{}),
                           Derivation(std::move(h2), Derivation::Trusted{})};
    }();
    return basis;
}

Derivation cartan_element(const CartanElement& tau) {
    // tau = t1 (1,-1,0) - t3 (0,1,-1)
    const auto& cb = cartan_basis();
    return tau[0] * cb.h1 - tau[2] * cb.h2;
}

std::string_view to_string(LengthClass c) { return c == LengthClass::Short ? "short" : "long"; }

RootCoeffs canonical_root_coeffs(RootCoeffs coeffs) {
    const long lo = std::min({coeffs[0], coeffs[1], coeffs[2]});
    for (auto& a : coeffs) a -= lo;
    return coeffs;
}

Rational Root::evaluate(const CartanElement& tau) const {
    return Rational(coeffs[0]) * tau[0] + Rational(coeffs[1]) * tau[1] + Rational(coeffs[2]) * tau[2];
}

RootCoeffs Root::negated_coeffs() const { return canonical_root_coeffs({-coeffs[0], -coeffs[1], -coeffs[2]}); }

namespace {

// (r(H1), r(H2)) for H1 = (1,-1,0), H2 = (0,1,-1).
std::array<Rational, 2> values_on_cartan_basis(const RootCoeffs& a) {
    return {Rational(a[0] - a[1]), Rational(a[1] - a[2])};
}

std::array<Rational, 2> solve_gram(const Matrix<Rational>& g, const std::array<Rational, 2>& w) {
    const Rational det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
    return {(g(1, 1) * w[0] - g(0, 1) * w[1]) / det, (g(0, 0) * w[1] - g(1, 0) * w[0]) / det};
}

// Eigenvalue of m on the eigenvector x, read off at the first nonzero entry and
// verified exactly.
GaussianRational eigenvalue_on(const Matrix<GaussianRational>& m, const std::vector<GaussianRational>& x) {
    const auto mx = m * x;
    const auto lead = std::find_if(x.begin(), x.end(), [](const GaussianRational& z) { return !z.is_zero(); });
    const GaussianRational lambda = mx[static_cast<std::size_t>(lead - x.begin())] / *lead;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (mx[i] != lambda * x[i]) throw Error(ErrorCode::Internal, "root vector is not a common eigenvector");
    }
    return lambda;
}

long imaginary_integer(const GaussianRational& z) {
    if (!z.re().is_zero() || !z.im().is_integer())
        throw Error(ErrorCode::Internal, "root value " + z.to_string() + " is not i times an integer");
    return z.im().numerator().get_si();
}

Matrix<GaussianRational> complexify(const Matrix<Rational>& m) {
    std::vector<GaussianRational> entries(m.entries().begin(), m.entries().end());
    return {m.rows(), m.cols(), std::move(entries)};
}

}  // namespace

RootSystem compute_root_system(const G2Basis& basis, const CartanElement& tau_generic) {
    const auto& cb = cartan_basis();
    const Matrix<Rational> ad_generic = adjoint_matrix(cartan_element(tau_generic), basis);
    const auto ad_h = complexify(ad_generic);
    const auto ad_h1 = complexify(adjoint_matrix(cb.h1, basis));
    const auto ad_h2 = complexify(adjoint_matrix(cb.h2, basis));
    const std::size_t n = basis.size();

    if (n - rank(ad_generic) != 2)
        throw Error(ErrorCode::Internal, "generic Cartan element has centralizer of dimension != 2");

    // Every eigenvalue lies in the Gershgorin disc of radius max row sum.
    Rational bound;
    for (std::size_t i = 0; i < n; ++i) {
        Rational s;
        for (std::size_t j = 0; j < n; ++j) s += abs(ad_generic(i, j));
        bound = std::max(bound, s);
    }
    const long vmax = mpz_class(bound.numerator() / bound.denominator()).get_si();

    RootSystem rs;
    for (long v = -vmax; v <= vmax; ++v) {
        if (v == 0) continue;
        auto shifted = ad_h;
        const GaussianRational iv(Rational(0), Rational(v));
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= iv;
        const auto space = kernel_basis(shifted);
        if (space.empty()) continue;
        if (space.size() != 1)
            throw Error(ErrorCode::Internal, "root space for eigenvalue " + std::to_string(v) + "i has dimension " +
                                                 std::to_string(space.size()));
        const long v1 = imaginary_integer(eigenvalue_on(ad_h1, space[0]));
        const long v2 = imaginary_integer(eigenvalue_on(ad_h2, space[0]));
        Root r;
        r.coeffs = canonical_root_coeffs({v1 + v2, v2, 0});
        if (r.evaluate(tau_generic) != Rational(v))
            throw Error(ErrorCode::Internal, "reconstructed root disagrees with its eigenvalue");
        rs.roots.push_back(r);
    }
    if (rs.roots.size() != n - 2)
        throw Error(ErrorCode::Internal, "found " + std::to_string(rs.roots.size()) + " roots, expected " +
                                             std::to_string(n - 2));

    rs.cartan_gram = Matrix<Rational>(2, 2);
    const std::array<const Derivation*, 2> hs{&cb.h1, &cb.h2};
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) rs.cartan_gram(a, b) = -killing_form(*hs[a], *hs[b], basis);

    Rational shortest;
    for (auto& r : rs.roots) {
        const auto w = values_on_cartan_basis(r.coeffs);
        const auto h = solve_gram(rs.cartan_gram, w);
        r.killing_sq_length = w[0] * h[0] + w[1] * h[1];
        if (shortest.is_zero() || r.killing_sq_length < shortest) shortest = r.killing_sq_length;
    }
    for (auto& r : rs.roots) r.length_class = r.killing_sq_length == shortest ? LengthClass::Short : LengthClass::Long;
    return rs;
}

CartanElement generic_cartan_element() { return {Rational(1), Rational(-4), Rational(3)}; }

const RootSystem& root_system() {
    static const RootSystem rs = compute_root_system(derivation_basis(), generic_cartan_element());
    return rs;
}

std::vector<Root> vanishing_roots(const CartanElement& tau, std::span<const Root> roots) {
    std::vector<Root> out;
    for (const auto& r : roots) {
        if (r.evaluate(tau).is_zero()) out.push_back(r);
    }
    return out;
}

CartanElement killing_dual(const Root& r) {
    const auto h = solve_gram(root_system().cartan_gram, values_on_cartan_basis(r.coeffs));
    return {h[0], h[1] - h[0], -h[1]};
}

CartanElement weyl_reflect(const Root& r, const CartanElement& tau) {
    const CartanElement dual = killing_dual(r);
    const Rational factor = Rational(2) * r.evaluate(tau) / r.evaluate(dual);
    return tau - factor * dual;
}

}  // namespace g2orbits
