#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "g2orbits/cli.hpp"
#include "g2orbits/derivations.hpp"
#include "g2orbits/error.hpp"
#include "g2orbits/json_io.hpp"
#include "g2orbits/octonion.hpp"
#include "g2orbits/orbits.hpp"
#include "g2orbits/roots.hpp"

namespace py = pybind11;
using namespace g2orbits;

namespace {

Octonion octonion_from_strings(const std::vector<std::string>& parts) {
    if (parts.size() != kOctonionDim) throw Error(ErrorCode::InvalidInput, "an octonion needs 8 coordinates");
    Octonion x;
    for (std::size_t i = 0; i < kOctonionDim; ++i) x[i] = Rational::parse(parts[i]);
    return x;
}

std::string structure_json(const std::vector<Derivation>& gens) {
    const auto s = subalgebra_structure(gens, derivation_basis());
    return Json{{"dim", s.dim}, {"derived_dim", s.derived_dim}, {"center_dim", s.center_dim}, {"is_abelian", s.is_abelian}}
        .dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact G2 adjoint orbit classification";

    py::register_exception<Error>(m, "G2Error", PyExc_ValueError);

    m.def("multiplication_table", [] { return multiplication_table_json().dump(); });
    m.def("derivations", [] { return derivations_json(derivation_basis()).dump(); });
    m.def("roots", [] { return roots_json(root_system()).dump(); });

    m.def(
        "classify",
        [](const std::vector<std::string>& tau, bool project, const std::string& convention) {
            if (tau.size() != 3) throw Error(ErrorCode::InvalidInput, "tau needs 3 components");
            const auto conv = parse_convention(convention);
            if (!conv) throw Error(ErrorCode::InvalidInput, "unknown convention " + convention);
            const Rational t1 = Rational::parse(tau[0]), t2 = Rational::parse(tau[1]), t3 = Rational::parse(tau[2]);
            const CartanElement h = project ? CartanElement::projected(t1, t2, t3) : CartanElement(t1, t2, t3);
            return report_json(classify(h, *conv)).dump();
        },
        py::arg("tau"), py::arg("project") = false, py::arg("convention") = "short=sp1xu1");

    m.def(
        "scan", [](long radius, const std::string& format) {
            const Census c = scan(radius);
            if (format == "csv") return census_csv(c);
            if (format != "json") throw Error(ErrorCode::InvalidInput, "format must be json or csv");
            return census_json(c).dump();
        },
        py::arg("radius"), py::arg("format") = "json");

    m.def("oct_mul", [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
        return octonion_to_json(octonion_from_strings(x) * octonion_from_strings(y)).dump();
    });

    m.def("fixed_subalgebra_structure", [](const std::string& which) {
        if (which != "gamma" && which != "gamma1")
            throw Error(ErrorCode::InvalidInput, "expected 'gamma' or 'gamma1'");
        const auto sigma = which == "gamma" ? gamma_matrix() : gamma1_matrix();
        return structure_json(fixed_subalgebra(sigma, derivation_basis()));
    });

    m.def("annihilator_structure", [](const std::vector<std::string>& x) {
        return structure_json(annihilator(octonion_from_strings(x), derivation_basis()));
    });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
