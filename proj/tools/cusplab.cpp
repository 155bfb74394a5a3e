// Command-line workbench: Tjurina bases, singular loci of the cusp's
// deformation family, and the proposition-verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage / parse / solver
// errors.

#include <complex>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cusplab/parse.hpp"
#include "cusplab/report.hpp"

namespace {

using namespace cusplab;

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// coordinate values like "2", "-1/3", "1+2*eps"
Cyclo parse_cyclo_value(const std::string& text) {
    auto t = VarTable::make({"dummy"});
    Polynomial p = parse_polynomial(text, t);
    return p.constant_value();
}

int cmd_tjurina(const std::string& expr, const std::string& vars_csv, bool json) {
    Polynomial f = parse_polynomial(expr);
    std::vector<std::string> vars;
    if (!vars_csv.empty()) {
        vars = split_csv(vars_csv);
        // reparse against the declared table so missing variables still count
        auto table = VarTable::make(vars);
        f = parse_polynomial(expr, table);
    } else {
        vars = f.table()->names();
    }
    GermPresentation germ{f, vars};
    const auto basis = tjurina_basis(germ);

    if (json) {
        nlohmann::ordered_json j;
        j["basis"] = nlohmann::ordered_json::array();
        for (const auto& m : basis) j["basis"].push_back(monomial_to_string(m, f.table()));
        j["tjurina"] = basis.size();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "tjurina number: " << basis.size() << "\n";
        std::cout << "basis:";
        for (const auto& m : basis) std::cout << " " << monomial_to_string(m, f.table());
        if (basis.empty()) std::cout << " (empty; smooth germ)";
        std::cout << "\n";
    }
    return 0;
}

nlohmann::ordered_json record_json(const SingularPointRecord& rec) {
    nlohmann::ordered_json j;
    if (rec.numeric) {
        auto cpx = [](const std::complex<double>& z) {
            return nlohmann::ordered_json{{"re", z.real()}, {"im", z.imag()}};
        };
        j["coords"] = {cpx(rec.coords_numeric[0]), cpx(rec.coords_numeric[1]),
                       cpx(rec.coords_numeric[2]), cpx(rec.coords_numeric[3])};
    } else {
        j["coords"] = {to_string(rec.coords[0]), to_string(rec.coords[1]),
                       to_string(rec.coords[2]), to_string(rec.coords[3])};
    }
    j["class"] = to_string(rec.klass);
    j["hessian_rank"] = rec.hessian_rank;
    j["multiplicity"] = rec.multiplicity;
    return j;
}

int cmd_singular(const std::string& l, const std::string& m, const std::string& n,
                 const std::string& s, const std::string& mode, bool json) {
    const auto L = DeformationPoint::exact(parse_cyclo_value(l), parse_cyclo_value(m),
                                           parse_cyclo_value(n), parse_cyclo_value(s));
    std::vector<SingularPointRecord> pts;
    try {
        pts = singular_locus(L, mode == "numeric" ? SolveMode::Numeric : SolveMode::Exact);
    } catch (const ExactFactorizationFailed& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "hint: retry with --mode numeric\n";
        return 2;
    }
    if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& rec : pts) j.push_back(record_json(rec));
        std::cout << j.dump() << "\n";
    } else {
        const auto tuple = L.space_tuple();
        std::cout << "family coefficients (l, m, n, s): " << to_string(L.lambda) << ", "
                  << to_string(L.mu) << ", " << to_string(L.nu) << ", "
                  << to_string(L.sigma) << "\n";
        std::cout << "deformation-space tuple (l, m, -n, s): " << to_string(tuple[0])
                  << ", " << to_string(tuple[1]) << ", " << to_string(tuple[2]) << ", "
                  << to_string(tuple[3]) << "\n";
        if (pts.empty()) std::cout << "smooth fiber (no singular points)\n";
        for (const auto& rec : pts) {
            std::cout << "point";
            if (rec.numeric) {
                for (const auto& z : rec.coords_numeric)
                    std::cout << " (" << z.real() << "," << z.imag() << ")";
            } else {
                for (const auto& c : rec.coords) std::cout << " " << to_string(c);
            }
            std::cout << "  class=" << to_string(rec.klass)
                      << " hessian_rank=" << rec.hessian_rank
                      << " multiplicity=" << rec.multiplicity << "\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& suite, bool json, std::uint64_t seed) {
    std::set<std::string> suites;
    if (suite != "all") suites.insert(suite);
    const auto report = run_verification(suites, seed);
    if (json) {
        std::cout << report.to_json().dump() << "\n";
    } else {
        for (const auto& c : report.checks)
            std::cout << (c.status == "pass" ? "PASS " : "FAIL ") << c.id << "  " << c.cite
                      << "\n      " << c.details << "\n";
        std::cout << report.passed << " passed, " << report.failed << " failed\n";
    }
    return report.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for the deformations of the threefold cusp"};
    app.require_subcommand(1);

    auto* tj = app.add_subcommand("tjurina", "basis of the first-order deformation space");
    std::string expr, vars_csv;
    bool tj_json = false;
    tj->add_option("expr", expr, "polynomial, e.g. 'x^2 - y^3 - z^2 + w^3'")->required();
    tj->add_option("--vars", vars_csv, "comma-separated germ variables (default: inferred)");
    tj->add_flag("--json", tj_json, "machine-readable output");

    auto* sg = app.add_subcommand("singular", "singular points of a fiber of the family");
    std::string l = "0", m = "0", n = "0", s = "0", mode = "exact";
    bool sg_json = false;
    sg->add_option("-l,--lambda", l, "constant coefficient");
    sg->add_option("-m,--mu", m, "coefficient of y");
    sg->add_option("-n,--nu", n, "coefficient of -w");
    sg->add_option("-s,--sigma", s, "coefficient of y*w");
    sg->add_option("--mode", mode, "exact|numeric")
        ->check(CLI::IsMember({"exact", "numeric"}));
    sg->add_flag("--json", sg_json, "machine-readable output");

    auto* vf = app.add_subcommand("verify", "run the proposition-verification suites");
    std::string suite = "all";
    bool vf_json = false;
    std::uint64_t seed = 0;
    vf->add_option("--suite", suite, "all|S|C|fa|blowup|friedman")
        ->check(CLI::IsMember({"all", "S", "C", "fa", "blowup", "friedman"}));
    vf->add_flag("--json", vf_json, "machine-readable report");
    vf->add_option("--seed", seed, "seed for the sampled property checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (tj->parsed()) return cmd_tjurina(expr, vars_csv, tj_json);
        if (sg->parsed()) return cmd_singular(l, m, n, s, mode, sg_json);
        if (vf->parsed()) return cmd_verify(suite, vf_json, seed);
    } catch (const cusplab::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const cusplab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
