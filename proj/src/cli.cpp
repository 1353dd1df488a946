#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modlie/cartantype.hpp"
#include "modlie/grading.hpp"
#include "modlie/kernels.hpp"
#include "modlie/pipeline.hpp"
#include "modlie/rootdata.hpp"

namespace modlie::pipeline {

namespace {

std::pair<int, int> parse_n_pair(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--n", "expected N1,N2");
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

std::vector<long long> parse_int_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
    return out;
}

int emit_report(const report::CertificateReport& rep, const std::string& format,
                std::ostream& out) {
    out << (format == "text" ? rep.render_text() : rep.render_json());
    return rep.all_pass() ? 0 : 1;
}

int run_grade(const std::string& type, Scalar p, const std::string& weights_str,
              const std::string& subalgebra_expr, const std::string& format, std::ostream& out) {
    PrimeField field(p);
    const rootdata::RootDatum rd = rootdata::build_root_datum(type);
    const std::vector<long long> weights = parse_int_list(weights_str);
    if (weights.size() != static_cast<std::size_t>(rd.rank))
        throw std::invalid_argument("grade: expected " + std::to_string(rd.rank) + " weights");
    const rootdata::ChevalleyBasis cb = rootdata::chevalley_structure_constants(rd);
    const LieAlgebra g = rootdata::reduce_mod_p(cb, field);
    const grading::Grading ambient =
        grading::cocharacter_grading(cb, field, grading::Cocharacter{weights});

    grading::Grading shown = ambient;
    std::string subject = "g (" + type + " mod " + std::to_string(p) + ")";
    if (!subalgebra_expr.empty()) {
        std::vector<Vec> gens;
        std::stringstream ss(subalgebra_expr);
        std::string item;
        while (std::getline(ss, item, ','))
            gens.push_back(rootdata::element_from_label_sum(cb, field,
                                                            parse_element_expression(item)));
        const SubalgebraHandle s = subalgebra_closure(g, gens);
        shown = grading::grade_subalgebra(s, ambient);
        subject = "closure of " + subalgebra_expr + " (dimension " + std::to_string(s.dim()) + ")";
    }
    const bool axiom_ok = !grading::grading_axiom_violation(g, shown).has_value();
    if (format == "text") {
        out << "grading of " << subject << " by cocharacter (" << weights_str << ")\n";
        out << std::setw(8) << "degree" << std::setw(6) << "dim"
            << "\n";
        for (const auto& [deg, dim] : shown.profile())
            out << std::setw(8) << deg << std::setw(6) << dim << "\n";
        out << "total: " << shown.total_dim() << "\n";
        out << "grading axiom: " << (axiom_ok ? "holds" : "violated") << "\n";
    } else {
        nlohmann::ordered_json j;
        j["schema"] = report::kSchema;
        j["subject"] = subject;
        j["cocharacter"] = parse_int_list(weights_str);
        j["table"] = nlohmann::ordered_json::array();
        for (const auto& [deg, dim] : shown.profile())
            j["table"].push_back({{"degree", deg}, {"dim", dim}});
        j["total"] = shown.total_dim();
        j["axiom"] = axiom_ok ? "holds" : "violated";
        out << j.dump(2) << "\n";
    }
    return axiom_ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with modular Lie algebras over prime fields"};
    app.require_subcommand(1);

    std::string format = "text";
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "json-like"}));
    };

    // verify theorem / verify ermolaev
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    VerificationConfig config;
    auto* vt = verify->add_subcommand("theorem",
                                      "maximal-subalgebra certificate for the type-F4 algebra");
    vt->add_option("--p", config.p, "prime modulus (default 3)");
    vt->add_option("--seed", config.seed, "seed for the seeded searches");
    vt->add_option("--f", config.f_coeffs,
                   "root coefficients of the partner generator (default 1232)");
    add_format(vt);

    std::string n_pair = "1,1";
    Scalar er_p = 3;
    Scalar er_alpha = 1;
    auto* ve = verify->add_subcommand("ermolaev", "Cartan-type algebra suite");
    ve->add_option("--n", n_pair, "heights N1,N2")->required();
    ve->add_option("--p", er_p, "prime modulus");
    add_format(ve);

    auto* erm = app.add_subcommand("ermolaev", "Cartan-type algebra report");
    erm->add_option("--n", n_pair, "heights N1,N2")->required();
    erm->add_option("--p", er_p, "prime modulus");
    erm->add_option("--alpha", er_alpha, "divergence twist");
    add_format(erm);

    std::string cochar, subalg, grade_type = "F4";
    Scalar grade_p = 3;
    auto* gr = app.add_subcommand("grade", "cocharacter grading table");
    gr->add_option("--cocharacter", cochar, "weights T1,...,Trank")->required();
    gr->add_option("--subalgebra", subalg,
                   "comma-separated generator expressions, e.g. e1000+e0100,f1232");
    gr->add_option("--type", grade_type, "root-system type");
    gr->add_option("--p", grade_p, "prime modulus");
    add_format(gr);

    std::string dump_type = "F4";
    Scalar dump_p = 3;
    auto* dump = app.add_subcommand("dump-structure-constants", "deterministic table dump");
    dump->add_option("--type", dump_type, "root-system type");
    dump->add_option("--p", dump_p, "prime modulus");

    std::vector<std::string> argv_store{"modlie"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const std::string& a : argv_store) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (vt->parsed()) return emit_report(verify_theorem(config), format, out);
        if (ve->parsed() || erm->parsed()) {
            const auto [n1, n2] = parse_n_pair(n_pair);
            return emit_report(verify_ermolaev(n1, n2, er_p, erm->parsed() ? er_alpha : 1), format,
                               out);
        }
        if (gr->parsed()) return run_grade(grade_type, grade_p, cochar, subalg, format, out);
        if (dump->parsed()) {
            PrimeField field(dump_p);
            const rootdata::RootDatum rd = rootdata::build_root_datum(dump_type);
            const rootdata::ChevalleyBasis cb = rootdata::chevalley_structure_constants(rd);
            rootdata::dump_structure_constants(cb, field, out);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace modlie::pipeline
