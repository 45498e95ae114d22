#include "g2orbits/orbits.hpp"

#include <cstdlib>
#include <string>

#include "g2orbits/error.hpp"

namespace g2orbits {

std::string_view to_string(OrbitType t) {
    switch (t) {
        case OrbitType::Full: return "FULL";
        case OrbitType::Torus: return "TORUS";
        case OrbitType::Dim4Short: return "DIM4_SHORT";
        case OrbitType::Dim4Long: return "DIM4_LONG";
    }
    return "UNKNOWN";
}

std::string_view to_string(NamingConvention c) {
    return c == NamingConvention::ShortIsSp1xU1 ? "short=sp1xu1" : "short=u1xsp1";
}

std::optional<NamingConvention> parse_convention(std::string_view text) {
    if (text == "short=sp1xu1") return NamingConvention::ShortIsSp1xU1;
    if (text == "short=u1xsp1") return NamingConvention::ShortIsU1xSp1;
    return std::nullopt;
}

std::string_view orbit_label(OrbitType t, NamingConvention c) {
    constexpr std::string_view kSp1U1 = "G2/((Sp(1)xU(1))/Z2)";
    constexpr std::string_view kU1Sp1 = "G2/((U(1)xSp(1))/Z2)";
    const bool short_is_sp1 = c == NamingConvention::ShortIsSp1xU1;
    switch (t) {
        case OrbitType::Full: return "G2/G2";
        case OrbitType::Torus: return "G2/(U(1)xU(1))";
        case OrbitType::Dim4Short: return short_is_sp1 ? kSp1U1 : kU1Sp1;
        case OrbitType::Dim4Long: return short_is_sp1 ? kU1Sp1 : kSp1U1;
    }
    return "";
}

std::vector<Derivation> centralizer(const CartanElement& tau, const G2Basis& basis) {
    std::vector<Derivation> out;
    for (const auto& c : kernel_basis(adjoint_matrix(cartan_element(tau), basis))) out.push_back(basis.combine(c));
    return out;
}

namespace {

std::optional<OrbitType> type_for(std::size_t stabilizer_dim, const std::vector<Root>& vanishing) {
    switch (stabilizer_dim) {
        case 14: return OrbitType::Full;
        case 2: return OrbitType::Torus;
        case 4:
            if (vanishing.empty()) return std::nullopt;
            return vanishing.front().length_class == LengthClass::Short ? OrbitType::Dim4Short : OrbitType::Dim4Long;
        default: return std::nullopt;
    }
}

std::size_t expected_vanishing(OrbitType t) {
    switch (t) {
        case OrbitType::Full: return 12;
        case OrbitType::Torus: return 0;
        case OrbitType::Dim4Short:
        case OrbitType::Dim4Long: return 2;
    }
    return 0;
}

}  // namespace

ClassificationReport classify(const CartanElement& tau, NamingConvention convention) {
    const auto& basis = derivation_basis();
    const auto stabilizer = centralizer(tau, basis);

    ClassificationReport report;
    report.tau = tau;
    report.convention = convention;
    report.stabilizer_dim = stabilizer.size();
    report.vanishing = vanishing_roots(tau, root_system().roots);

    const auto type = type_for(report.stabilizer_dim, report.vanishing);
    if (!type)
        throw Error(ErrorCode::Internal,
                    "stabilizer dimension " + std::to_string(report.stabilizer_dim) + " is not one of 2, 4, 14");
    if (report.vanishing.size() != expected_vanishing(*type))
        throw Error(ErrorCode::Internal, std::to_string(report.vanishing.size()) +
                                             " vanishing roots inconsistent with stabilizer dimension " +
                                             std::to_string(report.stabilizer_dim));
    if (report.vanishing.size() == 2 && report.vanishing[0].length_class != report.vanishing[1].length_class)
        throw Error(ErrorCode::Internal, "vanishing root pair has mixed length classes");

    report.orbit_type = *type;
    report.orbit_label = std::string(orbit_label(*type, convention));
    report.structure = subalgebra_structure(stabilizer, basis);
    return report;
}

Census scan(long radius) {
    if (radius < 1) throw Error(ErrorCode::InvalidInput, "scan radius must be >= 1");
    const auto& basis = derivation_basis();
    const auto& roots = root_system().roots;

    Census census;
    census.radius = radius;
    for (long t1 = -radius; t1 <= radius; ++t1) {
        for (long t2 = -radius; t2 <= radius; ++t2) {
            const long t3 = -t1 - t2;
            if (std::labs(t3) > radius) continue;
            const CartanElement tau{Rational(t1), Rational(t2), Rational(t3)};
            CensusEntry entry;
            entry.tau = {t1, t2, t3};
            entry.stabilizer_dim = centralizer(tau, basis).size();
            entry.orbit_type = type_for(entry.stabilizer_dim, vanishing_roots(tau, roots));
            if (entry.orbit_type)
                ++census.counts[*entry.orbit_type];
            else
                census.only_expected_dims = false;
            census.entries.push_back(entry);
        }
    }
    return census;
}

}  // namespace g2orbits
