#include "g2orbits/cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "g2orbits/checks.hpp"
#include "g2orbits/error.hpp"
#include "g2orbits/json_io.hpp"
#include "g2orbits/orbits.hpp"

namespace g2orbits {

namespace {

std::vector<Rational> parse_tau_list(const std::string& text) {
    std::vector<Rational> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            parts.push_back(Rational::parse(item));
        } catch (const std::exception& e) {
            throw Error(ErrorCode::InvalidInput, "bad tau component '" + item + "': " + e.what());
        }
    }
    if (parts.size() != 3 || (!text.empty() && text.back() == ','))
        throw Error(ErrorCode::InvalidInput, "--tau expects three comma-separated rationals, got '" + text + "'");
    return parts;
}

void print_report(const ClassificationReport& r, std::ostream& out) {
    out << "tau            (" << r.tau[0] << ", " << r.tau[1] << ", " << r.tau[2] << ")\n"
        << "stabilizer_dim " << r.stabilizer_dim << '\n'
        << "orbit_type     " << to_string(r.orbit_type) << '\n'
        << "orbit_label    " << r.orbit_label << '\n'
        << "vanishing      ";
    if (r.vanishing.empty()) out << "none";
    for (std::size_t i = 0; i < r.vanishing.size(); ++i) {
        const auto& c = r.vanishing[i].coeffs;
        out << (i ? " " : "") << '(' << c[0] << ',' << c[1] << ',' << c[2] << ')';
    }
    out << '\n'
        << "structure      dim " << r.structure.dim << ", derived " << r.structure.derived_dim << ", center "
        << r.structure.center_dim << (r.structure.is_abelian ? " (abelian)" : "") << '\n'
        << "convention     " << to_string(r.convention) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact octonions, the derivation algebra g2 and adjoint orbit types of G2", "g2orbits"};
    app.require_subcommand(1);

    auto* table = app.add_subcommand("table", "Print the octonion multiplication table as JSON");
    auto* derivations = app.add_subcommand("derivations", "Print the 14 derivation basis matrices and structure constants");
    auto* roots = app.add_subcommand("roots", "Print the 12 roots with exact Killing lengths");

    auto* classify_cmd = app.add_subcommand("classify", "Classify the adjoint orbit type of a Cartan element");
    std::string tau_text;
    bool project = false;
    bool as_json = false;
    std::string convention_text{to_string(NamingConvention::ShortIsSp1xU1)};
    classify_cmd->add_option("--tau", tau_text, "p/q,p/q,p/q (use --tau=... when the first entry is negative)")
        ->required();
    classify_cmd->add_flag("--project", project, "Subtract the mean instead of rejecting a nonzero sum");
    classify_cmd->add_flag("--json", as_json, "Emit the report as JSON");
    classify_cmd->add_option("--convention", convention_text, "Label pairing for the short-root class")
        ->check(CLI::IsMember({"short=sp1xu1", "short=u1xsp1"}));

    auto* scan_cmd = app.add_subcommand("scan", "Classify every integer lattice point up to a radius");
    long radius = 0;
    std::string format = "json";
    scan_cmd->add_option("--radius", radius, "max |tau_i|")->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* check_cmd = app.add_subcommand("check", "Run the built-in invariant suite");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (table->parsed()) {
            out << multiplication_table_json().dump(2) << '\n';
        } else if (derivations->parsed()) {
            out << derivations_json(derivation_basis()).dump(2) << '\n';
        } else if (roots->parsed()) {
            out << roots_json(root_system()).dump(2) << '\n';
        } else if (classify_cmd->parsed()) {
            const auto parts = parse_tau_list(tau_text);
            const CartanElement tau = project ? CartanElement::projected(parts[0], parts[1], parts[2])
                                              : CartanElement(parts[0], parts[1], parts[2]);
            const auto report = classify(tau, *parse_convention(convention_text));
            if (as_json)
                out << report_json(report).dump(2) << '\n';
            else
                print_report(report, out);
        } else if (scan_cmd->parsed()) {
            const auto census = scan(radius);
            if (format == "csv")
                out << census_csv(census);
            else
                out << census_json(census).dump(2) << '\n';
            if (!census.only_expected_dims) {
                err << "INTERNAL: census contains a stabilizer dimension outside {2, 4, 14}\n";
                return kExitInternal;
            }
        } else if (check_cmd->parsed()) {
            const auto results = run_invariant_checks();
            bool all = true;
            for (const auto& r : results) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
                all = all && r.passed;
            }
            return all ? kExitOk : kExitInternal;
        }
    } catch (const Error& e) {
        err << e.what() << '\n';
        return e.code() == ErrorCode::Internal ? kExitInternal : kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "INTERNAL: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace g2orbits
