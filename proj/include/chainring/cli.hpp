#ifndef CHAINRING_CLI_HPP
#define CHAINRING_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace chainring {

/// Exit codes: 0 ok, 2 bad configuration, 3 failed precondition
/// (e.g. selfdual on an incompatible (p, w)), 4 failed internal post-check.
enum ExitCode : int {
    exit_ok = 0,
    exit_config = 2,
    exit_precondition = 3,
    exit_internal = 4,
};

struct RunConfig {
    uint32_t p = 2;
    uint32_t s = 2;
    uint32_t k = 1;
    uint64_t n = 1;
    uint64_t w = 1;
    uint64_t seed = 1;  // CHAINRING_SEED overrides
    bool json = false;
    uint64_t cap = uint64_t(1) << 20;   // materialization cap
    uint64_t limit = 0;                 // stream limit, 0 = unlimited
    unsigned jobs = 1;
    std::string case_filter;            // enumerate: only this ideal case
    std::optional<size_t> factor_index; // enumerate: 1-based factor
    bool codes = false;                 // enumerate code tuples
    bool count_only = false;            // selfdual --count
};

int cmd_ctx(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_idempotents(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_dual(const RunConfig& cfg, std::istream& in, std::ostream& out,
             std::ostream& err);
int cmd_selfdual(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Applies the CHAINRING_SEED environment variable, if set.
void apply_env_seed(RunConfig& cfg);

}  // namespace chainring

#endif
