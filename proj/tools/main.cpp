#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "spec_parser.hpp"

namespace {

// Exit codes: 0 success, 2 connection detected where regularity is required,
// 3 budget exceeded, 4 parse or spec error, 1 anything else.
constexpr int kExitConnection = 2;
constexpr int kExitBudget = 3;
constexpr int kExitParse = 4;

std::string read_spec_text(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw qiet::Error("cannot open spec file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact interval exchange transformations over quadratic fields"};
    app.require_subcommand(1);

    qiet::cli::Budgets budgets;
    app.add_option("--step-cap", budgets.step_cap,
                   "Orbit scan budget before StepCapExceeded (default 1000000)");
    app.add_option("--max-classes", budgets.max_classes,
                   "Equivalence class budget for graph construction (default 10000)");

    std::string spec_path;
    std::string word_text;
    std::string format = "dot";
    int depth = 0;
    long check_depth = 1000;

    auto* induce = app.add_subcommand("induce", "Apply a word of psi/phi inductions");
    induce->add_option("--word", word_text, "Comma or space separated psi/phi letters");
    induce->add_option("spec", spec_path, "Spec file, or - for stdin")->required();

    auto* graph = app.add_subcommand("graph", "Equivalence graph under the two inductions");
    graph->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    graph->add_option("spec", spec_path, "Spec file, or - for stdin")->required();

    auto* admissible = app.add_subcommand("admissible", "Enumerate admissible semi-intervals");
    admissible->add_option("--depth", depth, "Maximum induction word length")->required();
    admissible->add_option("spec", spec_path, "Spec file, or - for stdin")->required();

    auto* check = app.add_subcommand("check", "Search separation orbits for a connection");
    check->add_option("--depth", check_depth, "Forward orbit depth (default 1000)");
    check->add_option("spec", spec_path, "Spec file, or - for stdin")->required();

    auto* cf = app.add_subcommand("cf", "Continued fraction of the 2-interval length ratio");
    cf->add_option("spec", spec_path, "Spec file, or - for stdin")->required();

    auto* survey = app.add_subcommand("survey", "Complexity and return-time survey (TSV)");
    survey->add_option("--depth", depth, "Maximum induction word length")->required();
    survey->add_option("spec", spec_path, "Spec file, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    try {
        qiet::Iet t = qiet::cli::build_iet(qiet::cli::parse_spec(read_spec_text(spec_path)));
        if (induce->parsed()) {
            return qiet::cli::cmd_induce(t, qiet::cli::parse_word(word_text), budgets,
                                         std::cout);
        }
        if (graph->parsed()) return qiet::cli::cmd_graph(t, format, budgets, std::cout);
        if (admissible->parsed()) {
            return qiet::cli::cmd_admissible(t, depth, budgets, std::cout, std::cerr);
        }
        if (check->parsed()) return qiet::cli::cmd_check(t, check_depth, std::cout);
        if (cf->parsed()) return qiet::cli::cmd_cf(t, std::cout);
        if (survey->parsed()) return qiet::cli::cmd_survey(t, depth, budgets, std::cout);
        return 1;
    } catch (const qiet::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const qiet::DiscriminantMismatch& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const qiet::NonPositiveLength& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return kExitParse;
    } catch (const qiet::NonBijectivePermutation& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return kExitParse;
    } catch (const qiet::ZeroDenominator& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return kExitParse;
    } catch (const qiet::NonSquareFreeDiscriminant& e) {
        std::cerr << "invalid spec: " << e.what() << "\n";
        return kExitParse;
    } catch (const qiet::ConnectionError& e) {
        std::cerr << "connection: " << e.what() << "\n";
        return kExitConnection;
    } catch (const qiet::StepCapExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const qiet::ClassBudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
