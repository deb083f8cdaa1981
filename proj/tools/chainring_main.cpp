// Command-line front end: constacyclic codes over Z_{p^s} + u Z_{p^s}.

#include <CLI11.hpp>
#include <iostream>

#include "chainring/cli.hpp"

using namespace chainring;

int main(int argc, char** argv) {
    CLI::App app{"exact algebra for (1+pw)-constacyclic codes over Z_{p^s}+uZ_{p^s}"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-p", cfg.p, "prime p")->required();
        sub->add_option("-s", cfg.s, "exponent s >= 2")->required();
        sub->add_option("-k", cfg.k, "exponent k >= 1 (length N = p^k n)")->required();
        sub->add_option("-n", cfg.n, "length part n, coprime to p")->required();
        sub->add_option("-w", cfg.w, "unit w (gamma = 1 + p w)")->required();
        sub->add_option("--seed", cfg.seed, "factorization seed");
        sub->add_flag("--json", cfg.json, "machine-readable output");
        sub->add_option("--jobs", cfg.jobs, "worker threads");
    };

    auto* c_ctx = app.add_subcommand("ctx", "print the derived context");
    add_common(c_ctx);
    auto* c_factor = app.add_subcommand("factor", "alias of ctx");
    add_common(c_factor);
    auto* c_count = app.add_subcommand("count", "count all codes");
    add_common(c_count);
    auto* c_idem = app.add_subcommand("idempotents", "print theta_i and theta_hat_i");
    add_common(c_idem);

    auto* c_enum = app.add_subcommand("enumerate", "stream ideal or code specs");
    add_common(c_enum);
    size_t factor_idx = 0;
    c_enum->add_option("--factor", factor_idx, "1-based factor index (ideal mode)");
    c_enum->add_option("--case", cfg.case_filter,
                       "only this case (I, II, III-a, III-b, IV, V)");
    c_enum->add_flag("--codes", cfg.codes, "stream full code tuples");
    c_enum->add_option("--limit", cfg.limit, "stop after this many lines");

    auto* c_dual = app.add_subcommand("dual", "dual of a code spec (JSON on stdin)");
    add_common(c_dual);

    auto* c_sd = app.add_subcommand("selfdual", "enumerate or count self-dual codes");
    add_common(c_sd);
    c_sd->add_flag("--count", cfg.count_only, "print the count only");
    c_sd->add_option("--limit", cfg.limit, "stop after this many lines");

    auto* c_verify = app.add_subcommand("verify", "run the brute-force oracle battery");
    add_common(c_verify);
    c_verify->add_option("--cap", cfg.cap, "materialization cap (default 2^20)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_config;
    }

    apply_env_seed(cfg);
    if (factor_idx) cfg.factor_index = factor_idx;

    if (c_ctx->parsed() || c_factor->parsed()) return cmd_ctx(cfg, std::cout, std::cerr);
    if (c_count->parsed()) return cmd_count(cfg, std::cout, std::cerr);
    if (c_idem->parsed()) return cmd_idempotents(cfg, std::cout, std::cerr);
    if (c_enum->parsed()) return cmd_enumerate(cfg, std::cout, std::cerr);
    if (c_dual->parsed()) return cmd_dual(cfg, std::cin, std::cout, std::cerr);
    if (c_sd->parsed()) return cmd_selfdual(cfg, std::cout, std::cerr);
    if (c_verify->parsed()) return cmd_verify(cfg, std::cout, std::cerr);
    return exit_config;
}
