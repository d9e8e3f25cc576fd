#include "cli.hpp"

#include "mwc/ledger.hpp"
#include "mwc/motives.hpp"
#include "mwc/scenario.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>

namespace mwc::cli {

namespace {

std::string join_walls(const std::vector<Rational>& walls)
{
    std::string out;
    for (const auto& a : walls) out += (out.empty() ? "" : ", ") + a.get_str();
    return out;
}

void print_report(std::ostream& out, const VerificationReport& report)
{
    out << "scenario: " << report.scenario << '\n';
    for (const auto& m : report.models) {
        if (m.value) {
            out << "model " << m.name << " = " << m.value->to_string() << '\n';
            out << "  e = " << m.value->eval_at(1).get_str() << '\n';
        } else {
            out << "model " << m.name << ": error: " << m.error << '\n';
        }
    }
    std::size_t passed = 0;
    for (const auto& c : report.checks) {
        out << (c.pass ? "PASS  " : "FAIL  ") << c.name << '\n';
        if (c.pass) {
            ++passed;
            continue;
        }
        out << "  expected: " << c.expected << '\n';
        if (c.computed) out << "  computed: " << *c.computed << '\n';
        if (c.residual) out << "  residual: " << *c.residual << '\n';
        if (!c.error.empty()) out << "  error: " << c.error << '\n';
    }
    out << passed << "/" << report.checks.size() << " checks passed\n";
}

VerificationReport verify_report()
{
    using namespace ledger;
    VerificationReport report = run_scenario(builtin_scenario_52());
    report.scenario = "verify";
    auto& checks = report.checks;

    checks.push_back(CheckResult::polynomial("hilb(1)", Polynomial{1, 1, 1}, motives::hilb_p2(1)));
    checks.push_back(CheckResult::polynomial("hilb(2)", Polynomial{1, 2, 3, 2, 1}, motives::hilb_p2(2)));
    checks.push_back(CheckResult::polynomial("hilb(3)", Polynomial{1, 2, 5, 6, 5, 2, 1}, motives::hilb_p2(3)));
    std::string euler_sequence;
    for (long n = 0; n <= 3; ++n)
        euler_sequence += (n ? ", " : "") + motives::hilb_p2(n).eval_at(1).get_str();
    checks.push_back(CheckResult::value("hilb Euler sequence", "1, 3, 9, 22", euler_sequence));

    checks.push_back(CheckResult::polynomial("m3_pipeline", m52_h0_3(), m3_pipeline()));
    const Polynomial plus = forgetful(m52_sheaves(), m3_pipeline());
    checks.push_back(CheckResult::polynomial("forgetful", mplus52_printed(), plus));

    const Scenario builtin = builtin_scenario_52();
    Environment env;
    const Polynomial assembled = assemble(plus, builtin.walls, env);
    checks.push_back(CheckResult::polynomial("assemble", minf52_printed(), assembled));
    checks.push_back(CheckResult::value("Euler number", std::to_string(kMinf52Euler), assembled.eval_at(1).get_str()));

    std::string deltas;
    for (const auto& wall : builtin.walls)
        deltas += (deltas.empty() ? "" : ", ") + wall_delta(wall, env).eval_at(1).get_str();
    checks.push_back(CheckResult::value("wall delta Euler numbers", "150, 378, 702, 852, 162", deltas));

    checks.push_back(
        CheckResult::value("walls (5,2)", "18, 13, 8, 3, 1/2", join_walls(distinct_walls(wall_enumerate({5, 2})))));
    checks.push_back(CheckResult::value("walls (5,-2)", "2", join_walls(distinct_walls(wall_enumerate({5, -2})))));
    checks.push_back(CheckResult::value("walls (4,1)", "3", join_walls(distinct_walls(wall_enumerate({4, 1})))));
    checks.push_back(CheckResult::value("chi((s,F),(s,F)) for (5,2)", "-26", std::to_string(chi_pair_self({5, 2}))));
    checks.push_back(CheckResult::value("expected dimension (5,2)", "27", std::to_string(expected_dim({5, 2}))));
    return report;
}

nlohmann::json c3_json(const ledger::C3Reconstruction& r)
{
    nlohmann::json variants = nlohmann::json::array();
    for (const auto& v : r.variants) {
        variants.push_back({
            {"variant", v.name},
            {"d_bracket", v.d_bracket.to_string()},
            {"b_bracket_implied", v.b_bracket_implied.to_string()},
            {"divisible", v.mplus30_recovered.has_value()},
            {"mplus30_recovered", v.mplus30_recovered ? nlohmann::json(v.mplus30_recovered->to_string()) : nullptr},
            {"remainder", v.remainder ? nlohmann::json(v.remainder->to_string()) : nullptr},
        });
    }
    return {{"a_bracket", r.a_bracket.to_string()}, {"divisor", r.divisor.to_string()}, {"variants", variants}};
}

void print_c3(std::ostream& out, const ledger::C3Reconstruction& r)
{
    out << "alpha = 3 wall reconstruction\n";
    out << "  A bracket: " << r.a_bracket << "   (e = " << r.a_bracket.eval_at(1).get_str() << ")\n";
    out << "  divisor (P(P^7) - P(P^5)) * P(M(2,2)^s): " << r.divisor << '\n';
    for (const auto& v : r.variants) {
        out << "  [" << v.name << " D bracket]\n";
        out << "    D bracket: " << v.d_bracket << "   (e = " << v.d_bracket.eval_at(1).get_str() << ")\n";
        out << "    A + D at 1: " << (r.a_bracket + v.d_bracket).eval_at(1).get_str() << '\n';
        out << "    implied B bracket: " << v.b_bracket_implied
            << "   (e = " << v.b_bracket_implied.eval_at(1).get_str() << ")\n";
        if (v.mplus30_recovered)
            out << "    divisible; recovered P(M^+(3,0)) = " << *v.mplus30_recovered << '\n';
        else
            out << "    not divisible; remainder " << *v.remainder << '\n';
    }
}

int cmd_eval(const std::string& path, bool json, std::ostream& out, std::ostream& err)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "mwc: cannot read " << path << '\n';
        return kInputError;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    Scenario scenario;
    try {
        std::string stem = path.substr(path.find_last_of('/') + 1);
        stem = stem.substr(0, stem.rfind(".mwc"));
        scenario = parse_scenario(buffer.str(), stem);
    } catch (const ParseError& e) {
        err << path << ":" << e.what() << '\n';
        return kInputError;
    }
    const VerificationReport report = run_scenario(scenario);
    if (json)
        out << report_to_json(report) << '\n';
    else
        print_report(out, report);
    return report.all_passed() ? kAllPassed : kVerificationFailed;
}

int cmd_verify(const std::vector<std::string>& extra_checks, bool json, bool print_scenario_text, std::ostream& out,
               std::ostream& err)
{
    if (print_scenario_text) {
        out << "# Wall crossing of alpha-stable pairs with Hilbert polynomial 5m + 2.\n"
            << "# Generated by `mwc verify --print-scenario`.\n\n"
            << print_scenario(ledger::builtin_scenario_52());
        return kAllPassed;
    }
    bool with_c3 = false;
    for (const auto& c : extra_checks) {
        if (c != "c3-reconstruction") {
            err << "mwc: unknown check '" << c << "'\n";
            return kInputError;
        }
        with_c3 = true;
    }

    const VerificationReport report = verify_report();
    if (json) {
        nlohmann::json doc = nlohmann::json::parse(report_to_json(report));
        if (with_c3) doc["c3_reconstruction"] = c3_json(ledger::reconstruct_c3());
        out << doc.dump(2) << '\n';
    } else {
        print_report(out, report);
        out << "total Euler number e(M^inf(5,2)) = "
            << assemble(ledger::forgetful(ledger::m52_sheaves(), ledger::m3_pipeline()),
                        ledger::builtin_scenario_52().walls, Environment{})
                   .eval_at(1)
                   .get_str()
            << '\n';
        if (with_c3) print_c3(out, ledger::reconstruct_c3());
    }
    return report.all_passed() ? kAllPassed : kVerificationFailed;
}

int cmd_atoms(long hilb_max, std::ostream& out)
{
    struct Row {
        std::string name;
        Polynomial value;
    };
    std::vector<Row> rows;
    for (long n : {1, 2, 3, 4, 5, 6, 7, 9, 14, 17}) rows.push_back({"P^" + std::to_string(n), motives::projective(n)});
    rows.push_back({"Gr(2,3)", motives::grassmannian(2, 3)});
    rows.push_back({"Gr(2,4)", motives::grassmannian(2, 4)});
    rows.push_back({"Gr(2,15)", motives::grassmannian(2, 15)});
    for (long n = 0; n <= hilb_max; ++n) rows.push_back({"Hilb^" + std::to_string(n) + "(P^2)", motives::hilb_p2(n)});
    rows.push_back({"V = Sym^2(P^2)", motives::sym2(motives::projective(2))});
    rows.push_back({"V - diagonal", motives::sym2_off_diagonal(motives::projective(2))});
    rows.push_back({"M(2,2)^s = P^5 - V", motives::projective(5) - motives::sym2(motives::projective(2))});
    for (auto [d, n] : {std::pair{3L, 0L}, {3L, 1L}, {4L, 0L}, {4L, 1L}, {4L, 2L}, {4L, 3L}})
        rows.push_back({"B(" + std::to_string(d) + "," + std::to_string(n) + ")", motives::rel_hilbert(d, n)});

    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.name.size());
    out << std::left << std::setw(static_cast<int>(width)) << "atom" << "  " << std::setw(6) << "e" << "  P\n";
    for (const auto& r : rows)
        out << std::setw(static_cast<int>(width)) << r.name << "  " << std::setw(6) << r.value.eval_at(1).get_str()
            << "  " << r.value << '\n';
    return kAllPassed;
}

int cmd_walls(int d, int chi, std::ostream& out, std::ostream& err)
{
    if (d < 2) {
        err << "mwc walls: need d >= 2\n";
        return kInputError;
    }
    const auto candidates = ledger::wall_enumerate({d, chi});
    out << "walls for (d, chi) = (" << d << ", " << chi << "): " << join_walls(ledger::distinct_walls(candidates))
        << '\n';
    out << std::left << std::setw(8) << "alpha" << std::setw(12) << "sub (0,.)" << std::setw(16) << "quotient (1,.)"
        << "n_quot\n";
    for (const auto& c : candidates) {
        auto cls = [](ledger::PairClass p) { return "(" + std::to_string(p.d) + "," + std::to_string(p.chi) + ")"; };
        out << std::setw(8) << c.alpha.get_str() << std::setw(12) << cls(c.sub) << std::setw(16) << cls(c.quotient)
            << c.quotient_points << '\n';
    }
    return kAllPassed;
}

int cmd_chi(int d, int chi, bool ext_table, std::ostream& out, std::ostream& err)
{
    if (d < 1) {
        err << "mwc chi: need d >= 1\n";
        return kInputError;
    }
    const ledger::PairClass c{d, chi};
    out << "(d, chi) = (" << d << ", " << chi << ")\n";
    out << "  points n = chi - d(3-d)/2     " << c.point_count() << '\n';
    out << "  chi((s,F),(s,F))              " << ledger::chi_pair_self(c) << '\n';
    out << "  expected dimension            " << ledger::expected_dim(c) << '\n';
    if (!ext_table) return kAllPassed;

    bool consistent = true;
    out << "\nExt^1 bookkeeping (ext = h0 - h1 + d*d2)\n";
    for (const auto& e : ledger::printed_ext_dimensions()) {
        const long computed = ledger::ext_dim(e.record);
        const bool match = computed == e.printed;
        consistent = consistent && match;
        out << "  " << (match ? "ok   " : "DIFF ") << e.description << ": computed " << computed << ", printed "
            << e.printed << ", fiber P^" << e.fiber_dimension << '\n';
    }
    return consistent ? kAllPassed : kVerificationFailed;
}

int cmd_reconstruct(bool json, std::ostream& out)
{
    const auto r = ledger::reconstruct_c3();
    if (json)
        out << c3_json(r).dump(2) << '\n';
    else
        print_c3(out, r);
    return kAllPassed;
}

// CLI11 reads "-2" as a short flag; positional negative integers are moved
// behind a "--" separator.
std::vector<std::string> protect_negative_numbers(std::vector<std::string> args)
{
    static const std::regex negative_int("-[0-9]+");
    auto it = std::ranges::find_if(args, [](const std::string& a) { return std::regex_match(a, negative_int); });
    if (it != args.end() && std::ranges::find(args, "--") == args.end()) args.insert(it, "--");
    return args;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Virtual Poincare polynomials of stratified moduli spaces", "mwc"};
    app.require_subcommand(1, 1);

    std::string path;
    bool json = false;
    bool print_scenario_text = false;
    std::vector<std::string> extra_checks;
    long hilb_max = 3;
    int d = 0;
    int chi = 0;
    bool ext_table = false;

    auto* eval = app.add_subcommand("eval", "Parse and run a .mwc scenario file");
    eval->add_option("path", path, "Scenario file")->required();
    eval->add_flag("--json", json, "Emit the verification report as JSON");

    auto* verify = app.add_subcommand("verify", "Run the built-in (5,2) computation and check suite");
    verify->add_option("--check", extra_checks, "Extra diagnostics (c3-reconstruction)");
    verify->add_flag("--json", json, "Emit the verification report as JSON");
    verify->add_flag("--print-scenario", print_scenario_text, "Print the built-in scenario as .mwc text");

    auto* atoms = app.add_subcommand("atoms", "Print the atom table");
    atoms->add_option("--hilb-max", hilb_max, "Largest n for Hilb^n(P^2)")->check(CLI::Range(0L, 12L));

    auto* walls = app.add_subcommand("walls", "List the walls for a class (d, chi)");
    walls->add_option("d", d)->required();
    walls->add_option("chi", chi)->required();

    auto* chi_cmd = app.add_subcommand("chi", "chi bookkeeping for a class (d, chi)");
    chi_cmd->add_option("d", d)->required();
    chi_cmd->add_option("chi", chi)->required();
    chi_cmd->add_flag("--ext-table", ext_table, "Also compare the Ext^1 dimensions of the wall loci");

    auto* reconstruct = app.add_subcommand("reconstruct", "Stratum-level rebuild of the alpha = 3 wall");
    reconstruct->add_flag("--json", json, "Emit JSON");

    args = protect_negative_numbers(std::move(args));
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kAllPassed : kInputError;
    }

    try {
        if (*eval) return cmd_eval(path, json, out, err);
        if (*verify) return cmd_verify(extra_checks, json, print_scenario_text, out, err);
        if (*atoms) return cmd_atoms(hilb_max, out);
        if (*walls) return cmd_walls(d, chi, out, err);
        if (*chi_cmd) return cmd_chi(d, chi, ext_table, out, err);
        if (*reconstruct) return cmd_reconstruct(json, out);
    } catch (const std::exception& e) {
        err << "mwc: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace mwc::cli
