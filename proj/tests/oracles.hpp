#pragma once

// Test-only oracles. They share no elimination or basis code with the
// library: linear systems are assembled by evaluating octonion products
// directly and ranked modulo a large prime.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2orbits/octonion.hpp"

namespace g2orbits::oracle {

inline constexpr std::int64_t kPrime = 2147483647;  // 2^31 - 1

using ModMatrix = std::vector<std::vector<std::int64_t>>;

inline std::int64_t mod(std::int64_t a) {
    a %= kPrime;
    return a < 0 ? a + kPrime : a;
}

inline std::int64_t pow_mod(std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b = mod(b);
    while (e > 0) {
        if (e & 1) r = r * b % kPrime;
        b = b * b % kPrime;
        e >>= 1;
    }
    return r;
}

inline std::size_t rank_mod_p(ModMatrix m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const std::int64_t inv = pow_mod(m[r][c], kPrime - 2);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            const std::int64_t f = m[i][c] * inv % kPrime;
            for (std::size_t j = c; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[r][j]);
        }
        ++r;
    }
    return r;
}

inline std::int64_t to_mod(const Rational& x) {
    const std::int64_t n = mod(x.numerator().get_si());
    const std::int64_t d = mod(x.denominator().get_si());
    return n * pow_mod(d, kPrime - 2) % kPrime;
}

/// Image of e_j under the matrix unit E_{r,c}.
inline Octonion unit_apply(std::size_t r, std::size_t c, std::size_t j) {
    return c == j ? Octonion::basis(r) : Octonion();
}

/// Leibniz residual map D -> (D(e_i e_j) - (De_i)e_j - e_i(De_j))_{i,j}
/// evaluated on every matrix unit, reduced mod p. 512 rows, 64 columns.
inline ModMatrix leibniz_rows_mod_p() {
    ModMatrix m(512, std::vector<std::int64_t>(64, 0));
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            const std::size_t col = r * 8 + c;
            for (std::size_t i = 0; i < 8; ++i) {
                for (std::size_t j = 0; j < 8; ++j) {
                    const Octonion prod = Octonion::basis(i) * Octonion::basis(j);
                    Octonion d_prod;
                    for (std::size_t k = 0; k < 8; ++k) {
                        if (!prod[k].is_zero()) d_prod += unit_apply(r, c, k) * prod[k];
                    }
                    const Octonion res = d_prod - unit_apply(r, c, i) * Octonion::basis(j) -
                                         Octonion::basis(i) * unit_apply(r, c, j);
                    for (std::size_t k = 0; k < 8; ++k) m[(i * 8 + j) * 8 + k][col] = to_mod(res[k]);
                }
            }
        }
    }
    return m;
}

/// dim {D derivation : [H, D] = 0} for an 8x8 rational H, mod p.
inline std::size_t centralizer_dim_mod_p(const Matrix<Rational>& h) {
    ModMatrix m = leibniz_rows_mod_p();
    for (std::size_t a = 0; a < 8; ++a) {
        for (std::size_t b = 0; b < 8; ++b) {
            std::vector<std::int64_t> row(64, 0);
            // ([H, E_rc])_{ab} = H_{ar} [b == c] - [a == r] H_{cb}
            for (std::size_t r = 0; r < 8; ++r)
                for (std::size_t c = 0; c < 8; ++c) {
                    Rational v;
                    if (b == c) v += h(a, r);
                    if (a == r) v -= h(c, b);
                    row[r * 8 + c] = to_mod(v);
                }
            m.push_back(std::move(row));
        }
    }
    return 64 - rank_mod_p(std::move(m));
}

/// Orbit type from the root functionals t_i (short) and t_i - t_j (long).
inline std::string orbit_type_by_roots(const std::array<long, 3>& t) {
    const bool zero = t[0] == 0 && t[1] == 0 && t[2] == 0;
    if (zero) return "FULL";
    const bool short_vanishes = t[0] == 0 || t[1] == 0 || t[2] == 0;
    const bool long_vanishes = t[0] == t[1] || t[1] == t[2] || t[0] == t[2];
    if (short_vanishes && long_vanishes) return "IMPOSSIBLE";
    if (short_vanishes) return "DIM4_SHORT";
    if (long_vanishes) return "DIM4_LONG";
    return "TORUS";
}

inline std::map<std::string, std::size_t> census_by_roots(long radius) {
    std::map<std::string, std::size_t> counts;
    for (long a = -radius; a <= radius; ++a)
        for (long b = -radius; b <= radius; ++b) {
            const long c = -a - b;
            if (c < -radius || c > radius) continue;
            ++counts[orbit_type_by_roots({a, b, c})];
        }
    return counts;
}

}  // namespace g2orbits::oracle
