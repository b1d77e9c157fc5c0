#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wos/point.hpp"

namespace wos::cli {

// Exit codes: 0 ok, 1 config/usage error, 2 statistically degraded run.

int cmd_solve(const std::string& config_path, std::optional<std::uint64_t> seed_override,
              std::optional<int> workers_override, bool print_config);

int cmd_validate(const std::string& selector, const std::string& report_path);

int cmd_sample_exit(int d, double a, const Point& b, double r, long n, std::uint64_t seed,
                    const std::string& output_path);

// Full argv entry point used by the wos binary.
int run_cli(int argc, const char* const* argv);

}  // namespace wos::cli
