#include "g2orbits/checks.hpp"

#include <cmath>
#include <functional>
#include <set>

#include "g2orbits/derivations.hpp"
#include "g2orbits/orbits.hpp"
#include "g2orbits/roots.hpp"

namespace g2orbits {

Octonion random_octonion(std::mt19937_64& rng, long max_abs, long max_den) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, max_den);
    Octonion x;
    for (std::size_t i = 0; i < kOctonionDim; ++i) x[i] = Rational(num(rng), den(rng));
    return x;
}

namespace {

using Check = std::function<std::string()>;  // empty string on success

CheckResult run(const std::string& name, const Check& check) {
    try {
        std::string failure = check();
        return {name, failure.empty(), failure.empty() ? "ok" : failure};
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

std::string cayley_laws(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int n = 0; n < 100; ++n) {
        const Octonion x = random_octonion(rng), y = random_octonion(rng);
        if (x * (x * y) != (x * x) * y || (y * x) * x != y * (x * x)) return "alternativity fails";
        if (norm(x * y) != norm(x) * norm(y)) return "composition fails";
        if (oct_conj(x * y) != oct_conj(y) * oct_conj(x)) return "conjugation is not an anti-automorphism";
    }
    for (const auto& s : {gamma_matrix(), gamma1_matrix()}) {
        if (!is_algebra_automorphism(s)) return "gamma or gamma1 is not an automorphism";
        if (s * s != Matrix<Rational>::identity(kOctonionDim)) return "gamma or gamma1 is not an involution";
    }
    if (!models_agree(kComplexModel)) return "C + C^3 product disagrees with the doubling product";
    return {};
}

std::string lie_algebra(const G2Basis& b) {
    const std::size_t n = b.size();
    if (n != kG2Dim) return "derivation algebra has dimension " + std::to_string(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    Rational s;
                    for (std::size_t l = 0; l < n; ++l) {
                        s += b.structure_constant(i, j, l) * b.structure_constant(l, k, m) +
                             b.structure_constant(j, k, l) * b.structure_constant(l, i, m) +
                             b.structure_constant(k, i, l) * b.structure_constant(l, j, m);
                    }
                    if (!s.is_zero()) return "Jacobi identity fails";
                }
    const auto gram = killing_gram(b);
    const auto neg = -gram;
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix<Rational> minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor(i, j) = neg(i, j);
        // determinant via elimination on the leading block
        Rational det(1);
        auto m = minor;
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t p = c;
            while (p < k && m(p, c).is_zero()) ++p;
            if (p == k) return "Killing form is degenerate";
            if (p != c) {
                for (std::size_t j = 0; j < k; ++j) std::swap(m(p, j), m(c, j));
                det = -det;
            }
            det *= m(c, c);
            for (std::size_t i = c + 1; i < k; ++i) {
                if (m(i, c).is_zero()) continue;
                const Rational f = m(i, c) / m(c, c);
                for (std::size_t j = c; j < k; ++j) m(i, j) -= f * m(c, j);
            }
        }
        if (det.sign() <= 0) return "Killing form is not negative definite";
    }
    return {};
}

std::string roots_check() {
    const auto& rs = root_system();
    if (rs.roots.size() != 12) return std::to_string(rs.roots.size()) + " roots";
    std::set<RootCoeffs> keys;
    Rational shortest = rs.roots.front().killing_sq_length, longest = shortest;
    std::size_t shorts = 0;
    for (const auto& r : rs.roots) {
        keys.insert(r.coeffs);
        shortest = std::min(shortest, r.killing_sq_length);
        longest = std::max(longest, r.killing_sq_length);
        if (r.length_class == LengthClass::Short) ++shorts;
    }
    if (keys.size() != 12) return "duplicate roots";
    for (const auto& r : rs.roots)
        if (!keys.count(r.negated_coeffs())) return "root set not closed under negation";
    if (shorts != 6) return std::to_string(shorts) + " short roots";
    if (longest != Rational(3) * shortest) return "long/short ratio is " + (longest / shortest).to_string();

    // Reflections permute roots: compare value vectors on a basis of the Cartan.
    const CartanElement u(Rational(1), Rational(-1), Rational(0)), v(Rational(0), Rational(1), Rational(-1));
    for (const auto& r : rs.roots) {
        for (const auto& s : rs.roots) {
            // (s o s_r)(H) = s(s_r H); s_r is an isometry so the image root is
            // the functional H -> s(s_r(H)).
            const Rational su = s.evaluate(weyl_reflect(r, u)), sv = s.evaluate(weyl_reflect(r, v));
            bool found = false;
            for (const auto& t : rs.roots) {
                if (t.evaluate(u) == su && t.evaluate(v) == sv) {
                    if (t.killing_sq_length != s.killing_sq_length) return "reflection changes a root length";
                    found = true;
                    break;
                }
            }
            if (!found) return "reflection does not permute the roots";
        }
    }
    return {};
}

std::string fixed_subalgebras(const G2Basis& b) {
    const auto fg = fixed_subalgebra(gamma_matrix(), b);
    const auto sg = subalgebra_structure(fg, b);
    if (sg != SubalgebraSummary{6, 6, 0, false}) return "gamma-fixed subalgebra has unexpected structure";
    const auto fg1 = fixed_subalgebra(gamma1_matrix(), b);
    const auto sg1 = subalgebra_structure(fg1, b);
    if (sg1 != sg) return "gamma1-fixed subalgebra differs from the gamma-fixed one";
    const auto su3 = subalgebra_structure(annihilator(Octonion::basis(1), b), b);
    if (su3 != SubalgebraSummary{8, 8, 0, false}) return "annihilator of e1 has unexpected structure";
    return {};
}

std::string named_examples() {
    struct Case {
        long t1, t2, t3;
        std::size_t dim;
        OrbitType type;
    };
    const Case cases[] = {{0, 0, 0, 14, OrbitType::Full},
                          {1, 2, -3, 2, OrbitType::Torus},
                          {1, 0, -1, 4, OrbitType::Dim4Short},
                          {1, 1, -2, 4, OrbitType::Dim4Long},
                          {2, -1, -1, 4, OrbitType::Dim4Long}};
    for (const auto& c : cases) {
        const auto rep = classify(CartanElement(Rational(c.t1), Rational(c.t2), Rational(c.t3)));
        if (rep.stabilizer_dim != c.dim || rep.orbit_type != c.type)
            return "misclassified (" + std::to_string(c.t1) + "," + std::to_string(c.t2) + "," +
                   std::to_string(c.t3) + ")";
        if (c.dim == 4 && (rep.structure.derived_dim != 3 || rep.structure.center_dim != 1))
            return "4-dimensional stabilizer has wrong fingerprint";
        if (c.dim == 2 && !rep.structure.is_abelian) return "torus stabilizer is not abelian";
    }
    return {};
}

std::string census_check() {
    const auto census = scan(3);
    if (!census.only_expected_dims) return "unexpected stabilizer dimension in census";
    for (auto t : kOrbitTypes)
        if (!census.counts.count(t)) return "orbit type " + std::string(to_string(t)) + " missing at radius 3";
    if (census.counts.at(OrbitType::Full) != 1) return "FULL occurs away from tau = 0";
    return {};
}

std::string numeric_bridge(const G2Basis& b, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, kG2Dim - 1);
    std::uniform_real_distribution<double> time(-2.0, 2.0);
    for (int n = 0; n < 5; ++n) {
        const auto alpha = exp_derivation_numeric(b[pick(rng)], time(rng));
        const auto gram = alpha.transpose() * alpha;
        for (std::size_t i = 0; i < kOctonionDim; ++i)
            for (std::size_t j = 0; j < kOctonionDim; ++j)
                if (std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)) >= 1e-9) return "exp(tD) is not orthogonal";
    }
    return {};
}

}  // namespace

std::vector<CheckResult> run_invariant_checks(std::uint64_t seed) {
    std::vector<CheckResult> results;
    results.push_back(run("cayley-laws", [&] { return cayley_laws(seed); }));
    results.push_back(run("derivation-algebra", [] { return lie_algebra(derivation_basis()); }));
    results.push_back(run("root-system", roots_check));
    results.push_back(run("fixed-subalgebras", [] { return fixed_subalgebras(derivation_basis()); }));
    results.push_back(run("named-classifications", named_examples));
    results.push_back(run("census-radius-3", census_check));
    results.push_back(run("numeric-exponential", [&] { return numeric_bridge(derivation_basis(), seed); }));
    return results;
}

}  // namespace g2orbits
