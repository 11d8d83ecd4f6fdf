// Command-line front end: flag parsing only, all work happens in cli::run.
#include <iostream>

#include <CLI11.hpp>

#include "chensieve/cli.hpp"
#include "chensieve/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"chen_sieve: empirical verification of Chen-prime counts in progressions"};
    app.set_version_flag("--version", chensieve::kVersion);
    app.require_subcommand(1);

    chensieve::cli::RunConfig cfg;
    std::string output;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output-format", cfg.output_format, "json|csv|text")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--output", output, "write the report to this path");
        sub->add_option("--tolerance", cfg.tolerance, "numeric tolerance");
        sub->add_option("--shards", cfg.shards, "worker parallelism (output-invariant)");
        sub->add_option("--max-n", cfg.max_n, "resource cap for sieving ranges");
    };

    auto* constants = app.add_subcommand("constants", "headline constant bundle");
    add_common(constants);

    auto* count = app.add_subcommand("count", "Chen-prime census in a progression");
    count->add_option("--x", cfg.x, "count primes up to x")->required();
    count->add_option("--a", cfg.a, "residue a");
    count->add_option("--q", cfg.q, "modulus q");
    count->add_option("--chen-exponent", cfg.chen_exponent, "factor-floor exponent");
    count->add_flag("--exclude-small-primes", cfg.exclude_small_primes, "drop p < 5 from the census");
    add_common(count);

    auto* decompose = app.add_subcommand("decompose", "A1/A2/A3/A4 window decomposition");
    decompose->add_option("--x", cfg.x, "window scale")->required();
    decompose->add_option("--a", cfg.a, "residue a")->required();
    decompose->add_option("--q", cfg.q, "modulus q")->required();
    add_common(decompose);

    auto* verify = app.add_subcommand("verify-lemma", "exhaustive almost-prime minorant scan");
    verify->add_option("--x", cfg.x, "scan (x^{2/3}, x]")->required();
    add_common(verify);

    auto* disc = app.add_subcommand("discrepancy", "residue-class discrepancy measurements");
    disc->add_option("--x", cfg.x, "weight scale")->required();
    disc->add_option("--D", cfg.D, "modulus cap (default x^{2/5})");
    disc->add_option("--weight", cfg.weight, "lambda-full|lambda-window|b");
    add_common(disc);

    auto* classify = app.add_subcommand("classify", "factor profile of an integer");
    classify->add_option("--x", cfg.x, "the integer to classify")->required();
    classify->add_option("--chen-exponent", cfg.chen_exponent, "factor-floor exponent");
    add_common(classify);

    auto* cond = app.add_subcommand("condition31", "density ratio condition diagnostic");
    cond->add_option("--u", cfg.u, "lower sifting bound")->required();
    cond->add_option("--z", cfg.z, "upper sifting bound")->required();
    cond->add_option("--epsilon", cfg.epsilon, "slack epsilon");
    cond->add_option("--q", cfg.q, "density modulus q");
    cond->add_option("--q-primes", cfg.prime_count, "exclude the first k primes");
    add_common(cond);

    CLI11_PARSE(app, argc, argv);

    cfg.command = app.get_subcommands().front()->get_name();
    if (!output.empty()) cfg.output_path = output;
    return chensieve::cli::run(cfg, std::cout, std::cerr);
}
