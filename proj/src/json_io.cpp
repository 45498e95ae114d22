#include "g2orbits/json_io.hpp"

#include <sstream>

#include "g2orbits/error.hpp"

namespace g2orbits {

Json rational_to_json(const Rational& x) { return x.to_string(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw Error(ErrorCode::InvalidInput, "expected a rational string, got " + j.dump());
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw Error(ErrorCode::InvalidInput, e.what());
    }
}

Json octonion_to_json(const Octonion& x) {
    Json arr = Json::array();
    for (const auto& c : x.coords()) arr.push_back(rational_to_json(c));
    return arr;
}

Octonion octonion_from_json(const Json& j) {
    if (!j.is_array() || j.size() != kOctonionDim)
        throw Error(ErrorCode::InvalidInput, "an octonion is an array of 8 rationals");
    Octonion x;
    for (std::size_t i = 0; i < kOctonionDim; ++i) x[i] = rational_from_json(j[i]);
    return x;
}

namespace {

Json matrix_json(const Matrix<Rational>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (const auto& x : m.row(i)) row.push_back(rational_to_json(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json tau_json(const CartanElement& tau) {
    Json arr = Json::array();
    for (const auto& t : tau.tau()) arr.push_back(rational_to_json(t));
    return arr;
}

}  // namespace

Json multiplication_table_json() {
    const auto& table = multiplication_table();
    Json rows = Json::array();
    for (const auto& row : table) {
        Json r = Json::array();
        for (const auto& p : row) r.push_back((p.sign < 0 ? "-e" : "e") + std::to_string(p.index));
        rows.push_back(std::move(r));
    }
    return {{"basis", {"e0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"}}, {"products", rows}};
}

Json derivations_json(const G2Basis& basis) {
    Json mats = Json::array();
    for (const auto& d : basis.elements()) mats.push_back(matrix_json(d.matrix()));
    Json constants = Json::array();
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const auto& c = basis.structure_constant(i, j, k);
                if (!c.is_zero()) constants.push_back({{"i", i}, {"j", j}, {"k", k}, {"value", rational_to_json(c)}});
            }
    return {{"dimension", basis.size()}, {"basis", mats}, {"structure_constants", constants}};
}

Json roots_json(const RootSystem& rs) {
    Json roots = Json::array();
    for (const auto& r : rs.roots) {
        roots.push_back({{"coeffs", r.coeffs},
                         {"killing_sq_length", rational_to_json(r.killing_sq_length)},
                         {"length_class", std::string(to_string(r.length_class))}});
    }
    return {{"generic_tau", tau_json(generic_cartan_element())},
            {"cartan_gram", matrix_json(rs.cartan_gram)},
            {"roots", roots}};
}

Json report_json(const ClassificationReport& report) {
    Json vanishing = Json::array();
    for (const auto& r : report.vanishing) vanishing.push_back(r.coeffs);
    return {{"tau", tau_json(report.tau)},
            {"stabilizer_dim", report.stabilizer_dim},
            {"orbit_type", std::string(to_string(report.orbit_type))},
            {"orbit_label", report.orbit_label},
            {"vanishing_roots", vanishing},
            {"structure",
             {{"dim", report.structure.dim},
              {"derived_dim", report.structure.derived_dim},
              {"center_dim", report.structure.center_dim}}},
            {"convention", std::string(to_string(report.convention))}};
}

Json census_json(const Census& census) {
    Json counts = Json::object();
    for (auto t : kOrbitTypes) {
        const auto it = census.counts.find(t);
        counts[std::string(to_string(t))] = it == census.counts.end() ? 0 : it->second;
    }
    Json points = Json::array();
    for (const auto& e : census.entries) {
        points.push_back({{"tau", e.tau},
                          {"stabilizer_dim", e.stabilizer_dim},
                          {"orbit_type", e.orbit_type ? Json(std::string(to_string(*e.orbit_type))) : Json(nullptr)}});
    }
    return {{"radius", census.radius},
            {"points", census.entries.size()},
            {"counts", counts},
            {"only_expected_dims", census.only_expected_dims},
            {"entries", points}};
}

std::string census_csv(const Census& census) {
    std::ostringstream os;
    os << "tau1,tau2,tau3,stabilizer_dim,orbit_type\n";
    for (const auto& e : census.entries) {
        os << e.tau[0] << ',' << e.tau[1] << ',' << e.tau[2] << ',' << e.stabilizer_dim << ','
           << (e.orbit_type ? to_string(*e.orbit_type) : std::string_view("UNEXPECTED")) << '\n';
    }
    return os.str();
}

}  // namespace g2orbits
