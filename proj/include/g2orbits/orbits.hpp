#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2orbits/derivations.hpp"
#include "g2orbits/roots.hpp"

namespace g2orbits {

enum class OrbitType { Full, Torus, Dim4Short, Dim4Long };

inline constexpr std::array<OrbitType, 4> kOrbitTypes{OrbitType::Full, OrbitType::Torus, OrbitType::Dim4Short,
                                                      OrbitType::Dim4Long};

/// "FULL", "TORUS", "DIM4_SHORT", "DIM4_LONG".
std::string_view to_string(OrbitType t);

/// Which 4-dimensional stabilizer label is attached to the short-root class.
enum class NamingConvention { ShortIsSp1xU1, ShortIsU1xSp1 };

/// "short=sp1xu1" or "short=u1xsp1".
std::string_view to_string(NamingConvention c);
std::optional<NamingConvention> parse_convention(std::string_view text);

std::string_view orbit_label(OrbitType t, NamingConvention c);

struct ClassificationReport {
    CartanElement tau;
    std::size_t stabilizer_dim = 0;
    OrbitType orbit_type = OrbitType::Full;
    std::string orbit_label;
    std::vector<Root> vanishing;
    SubalgebraSummary structure;
    NamingConvention convention = NamingConvention::ShortIsSp1xU1;
};

/// Canonical basis of ker(ad cartan_element(tau)).
std::vector<Derivation> centralizer(const CartanElement& tau, const G2Basis& basis);

/// Throws Error(Internal) if the stabilizer dimension is not 2, 4 or 14, or if
/// it disagrees with the vanishing-root count.
ClassificationReport classify(const CartanElement& tau,
                              NamingConvention convention = NamingConvention::ShortIsSp1xU1);

struct CensusEntry {
    std::array<long, 3> tau{};
    std::size_t stabilizer_dim = 0;
    /// Absent when the stabilizer dimension is outside {2, 4, 14}.
    std::optional<OrbitType> orbit_type;
};

struct Census {
    long radius = 0;
    /// Lexicographic in (t1, t2, t3).
    std::vector<CensusEntry> entries;
    std::map<OrbitType, std::size_t> counts;
    /// True if every stabilizer dimension was 2, 4 or 14.
    bool only_expected_dims = true;
};

/// Classifies every integer tau with sum zero and max |t_i| <= radius.
/// Throws Error(InvalidInput) for radius < 1.
Census scan(long radius);

}  // namespace g2orbits
