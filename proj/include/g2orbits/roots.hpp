#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "g2orbits/derivations.hpp"
#include "g2orbits/rational.hpp"

namespace g2orbits {

/// tau = (t1, t2, t3) with t1 + t2 + t3 = 0. Acts on the C + C^3 model as
/// a -> 0, m -> i diag(t1, t2, t3) m.
class CartanElement {
public:
    /// Zero element.
    CartanElement() = default;

    /// Throws Error(SumNonzero) unless the components sum to zero.
    CartanElement(Rational t1, Rational t2, Rational t3);

    /// Subtracts the mean from each component.
    static CartanElement projected(const Rational& t1, const Rational& t2, const Rational& t3);

    [[nodiscard]] const std::array<Rational, 3>& tau() const { return tau_; }
    const Rational& operator[](std::size_t i) const { return tau_[i]; }
    [[nodiscard]] bool is_zero() const;

    friend CartanElement operator+(const CartanElement& a, const CartanElement& b);
    friend CartanElement operator-(const CartanElement& a, const CartanElement& b);
    friend CartanElement operator*(const Rational& s, const CartanElement& a);
    friend bool operator==(const CartanElement&, const CartanElement&) = default;

private:
    std::array<Rational, 3> tau_{};
};

struct CartanBasis {
    Derivation h1;  // tau = (1, -1, 0)
    Derivation h2;  // tau = (0, 1, -1)
};

/// Throws Error(Internal) if either generator fails the Leibniz check.
const CartanBasis& cartan_basis();

/// Block rotation with rates t1, t2, t3 on the coordinate planes of m1, m2, m3.
Derivation cartan_element(const CartanElement& tau);

enum class LengthClass { Short, Long };

std::string_view to_string(LengthClass c);

/// Integer root coefficients, canonical modulo (1, 1, 1): all entries >= 0
/// with minimum 0.
using RootCoeffs = std::array<long, 3>;

RootCoeffs canonical_root_coeffs(RootCoeffs coeffs);

/// Root functional r(tau) = sum a_i t_i, with ad(H) X = i r(H) X on its root vector.
struct Root {
    RootCoeffs coeffs{};
    Rational killing_sq_length;
    LengthClass length_class = LengthClass::Short;

    [[nodiscard]] Rational evaluate(const CartanElement& tau) const;
    [[nodiscard]] RootCoeffs negated_coeffs() const;

    friend bool operator==(const Root&, const Root&) = default;
};

struct RootSystem {
    std::vector<Root> roots;
    /// 2x2 Gram matrix of the positive form -B on (H1, H2).
    Matrix<Rational> cartan_gram;
};

/// Roots extracted from the complexified adjoint action of the generic element
/// tau_generic; every nonzero eigenspace must be one-dimensional there.
/// Throws Error(Internal) otherwise.
RootSystem compute_root_system(const G2Basis& basis, const CartanElement& tau_generic);

/// tau* = (1, -4, 3).
CartanElement generic_cartan_element();

/// compute_root_system(derivation_basis(), generic_cartan_element()), built once.
const RootSystem& root_system();

/// Roots with r(tau) = 0.
std::vector<Root> vanishing_roots(const CartanElement& tau, std::span<const Root> roots);

/// Killing dual H_r of r, i.e. -B(H, H_r) = r(H) for all H in the Cartan.
CartanElement killing_dual(const Root& r);

/// s_r(H) = H - 2 r(H) / r(H_r) H_r.
CartanElement weyl_reflect(const Root& r, const CartanElement& tau);

}  // namespace g2orbits
