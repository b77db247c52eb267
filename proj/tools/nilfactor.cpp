#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nilfactor/cli.hpp"
#include "nilfactor/random.hpp"

namespace {

std::uint64_t env_seed() {
    if (const char* s = std::getenv("NILFACTOR_SEED")) return std::strtoull(s, nullptr, 10);
    return nilfactor::kDefaultSeed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact factorization of singular matrices into two nilpotent factors"};
    app.require_subcommand(1);

    std::uint64_t seed = env_seed();
    bool json = false;

    auto* factor_cmd = app.add_subcommand("factor", "factor a matrix file");
    std::string path;
    std::string verify = "on";
    factor_cmd->add_option("file", path, "matrix file")->required();
    factor_cmd->add_flag("--json", json, "machine-readable output");
    factor_cmd->add_option("--verify", verify, "re-check the certificate before printing")
        ->check(CLI::IsMember({"on", "off"}));
    factor_cmd->add_option("--seed", seed, "search seed");

    auto* check_cmd = app.add_subcommand("check", "run an identity suite");
    std::string suite;
    std::size_t max_k = 0;  // 0 = per-suite default
    std::string fields_csv;
    check_cmd->add_option("suite", suite, "lemma1|lemma2|sourour|all")->required();
    check_cmd->add_option("--max-k", max_k, "largest block size to exercise");
    check_cmd->add_option("--fields", fields_csv, "comma-separated field specs");
    check_cmd->add_option("--seed", seed, "sampling seed");
    check_cmd->add_flag("--json", json, "machine-readable output");

    auto* forensics_cmd = app.add_subcommand("forensics", "run the regression evidence checks");
    std::size_t extra_k = 0;
    forensics_cmd->add_option("--k", extra_k, "record an extra arrangement check at this k");
    forensics_cmd->add_flag("--json", json, "machine-readable output");

    CLI11_PARSE(app, argc, argv);

    if (factor_cmd->parsed())
        return nilfactor::cli::run_factor(path, json, verify == "on", seed, std::cout, std::cerr);
    if (check_cmd->parsed())
        return nilfactor::cli::run_check(suite, max_k, fields_csv, seed, json, std::cout,
                                         std::cerr);
    if (forensics_cmd->parsed())
        return nilfactor::cli::run_forensics(
            extra_k ? std::optional<std::size_t>(extra_k) : std::nullopt, json, std::cout,
            std::cerr);
    return 1;
}
