#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "run_config.hpp"

namespace {

using hermsq::cli::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "text"}));
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Seed for randomized property sampling");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hermsq: exact integrals of Hermite polynomial products against the squared weight"};
    app.require_subcommand(1);

    RunConfig cfg;

    CLI::App* hvalue = app.add_subcommand(
        "hvalue", "Evaluate one H integral for 1-4 indices by a chosen method");
    hvalue->add_option("indices", cfg.indices, "1 to 4 non-negative indices")
        ->required()
        ->expected(1, 4);
    hvalue->add_option("--method", cfg.method, "oracle | closed | recurrence | gf")
        ->check(CLI::IsMember({"oracle", "closed", "recurrence", "gf"}));
    hvalue->add_flag("--check", cfg.check, "Also compare against the oracle");
    hvalue->add_option("--order", cfg.order, "Series truncation order for --method gf");
    add_common(hvalue, cfg);

    CLI::App* pk = app.add_subcommand("pk", "Print the symmetric polynomial P_k in monomial form");
    pk->add_option("--k", cfg.k, "Degree index k")->required();
    pk->add_flag("--compare-paper", cfg.compare_paper,
                 "Diff against the built-in reference expansion (k <= 5)");
    add_common(pk, cfg);

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite against the oracle");
    verify->add_option("--suite", cfg.suite, "claim1 | claim2 | recursion | identities | all")
        ->check(CLI::IsMember({"claim1", "claim2", "recursion", "identities", "all"}));
    verify->add_option("--max-index", cfg.max_index, "Exhaustive index budget");
    verify->add_option("--k", cfg.k, "Largest P_k degree exercised");
    add_common(verify, cfg);

    CLI::App* gfcheck = app.add_subcommand(
        "gfcheck", "Check generating-series coefficients and explicit expansions");
    gfcheck->add_option("--order", cfg.order, "Series truncation order");
    gfcheck->add_option("--max-index", cfg.max_index,
                        "Expansion checks run to twice this index");
    add_common(gfcheck, cfg);

    CLI::App* dn = app.add_subcommand(
        "dn", "Normalized determinant integrals det[H_{n+i+j}] for n = 0..max-index");
    dn->add_option("--max-index", cfg.max_index, "Largest base index n");
    dn->add_option("--size", cfg.size, "Matrix size r");
    add_common(dn, cfg);

    CLI::App* asym = app.add_subcommand("asym", "Asymptotic diagnostic rows");
    asym->add_option("--quantity", cfg.quantities, "Catalogue label (repeatable)");
    asym->add_option("--n", cfg.n_values, "Index value (repeatable)");
    add_common(asym, cfg);

    CLI::App* table = app.add_subcommand("table", "Tabulate all four H families");
    table->add_option("--max-index", cfg.max_index, "Largest index");
    table->add_flag("--check", cfg.check, "Compare every value against the oracle");
    add_common(table, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();

    try {
        const hermsq::cli::Report rep = hermsq::cli::run_command(cfg);
        if (cfg.format == "json") {
            std::cout << hermsq::cli::render_json(rep);
        } else if (cfg.format == "text") {
            std::cout << hermsq::cli::pk_canonical_text(cfg.k);
            for (const auto& w : rep.warnings) std::cerr << "WARN: " << w << "\n";
            for (const auto& f : rep.failures) std::cerr << "FAIL: " << f << "\n";
        } else {
            std::cout << hermsq::cli::render_csv_rows(rep);
            for (const auto& w : rep.warnings) std::cerr << "WARN: " << w << "\n";
            for (const auto& f : rep.failures) std::cerr << "FAIL: " << f << "\n";
        }
        return rep.exit_code();
    } catch (const hermsq::cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
