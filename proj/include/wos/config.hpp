#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "wos/estimator.hpp"
#include "wos/walker.hpp"

namespace wos {

// Parse or validation failure; the message names the offending key.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Full description of one batch run, as read from a JSON config file.
struct RunConfig {
    ProblemSpec problem;
    WalkConfig walk;

    long n_walks = 0;
    std::uint64_t seed = 0;
    int workers = 1;

    bool has_grid = false;
    Point query_point;
    GridSpec grid;

    std::string format = "csv";  // csv | json
    std::string output_path;     // "-" writes to stdout
};

RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

// Canonical JSON echo; parse_config(dump_config(c)) reproduces c.
std::string dump_config(const RunConfig& cfg);

}  // namespace wos
