#include "wos/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "wos/config.hpp"
#include "wos/estimator.hpp"
#include "wos/sampling.hpp"
#include "wos/validation_suite.hpp"

namespace wos::cli {

namespace {

// shortest decimal that round-trips the double
std::string fmt_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

// Output sink: a file path, or stdout for "-".
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void write_csv(std::ostream& os, int dim, const std::vector<std::pair<Point, Estimate>>& rows) {
    for (int j = 0; j < dim; ++j) os << "x" << j << ",";
    os << "mean,std_error,ci_lo,ci_hi,n_walks,mean_steps,budget_failures,degraded\n";
    for (const auto& [x, e] : rows) {
        for (double c : x) os << fmt_double(c) << ",";
        os << fmt_double(e.mean) << "," << fmt_double(e.std_error) << "," << fmt_double(e.ci_lo)
           << "," << fmt_double(e.ci_hi) << "," << e.n_walks << "," << fmt_double(e.mean_steps)
           << "," << e.n_budget_failures << "," << (e.degraded() ? 1 : 0) << "\n";
    }
}

void write_json(std::ostream& os, const std::vector<std::pair<Point, Estimate>>& rows,
                const std::vector<Point>& skipped) {
    nlohmann::json root;
    root["results"] = nlohmann::json::array();
    for (const auto& [x, e] : rows)
        root["results"].push_back({{"point", x},
                                   {"mean", e.mean},
                                   {"std_error", e.std_error},
                                   {"ci_lo", e.ci_lo},
                                   {"ci_hi", e.ci_hi},
                                   {"n_walks", e.n_walks},
                                   {"mean_steps", e.mean_steps},
                                   {"budget_failures", e.n_budget_failures},
                                   {"degraded", e.degraded()}});
    root["skipped"] = skipped;
    os << root.dump(2) << "\n";
}

}  // namespace

int cmd_solve(const std::string& config_path, std::optional<std::uint64_t> seed_override,
              std::optional<int> workers_override, bool print_config) {
    RunConfig cfg;
    try {
        cfg = load_config(config_path);
        if (seed_override) cfg.seed = *seed_override;
        if (workers_override) {
            if (*workers_override < 1) throw ConfigError("execution.workers must be at least 1");
            cfg.workers = *workers_override;
        }
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }
    if (print_config) {
        std::cout << dump_config(cfg);
        return 0;
    }

    std::vector<std::pair<Point, Estimate>> rows;
    std::vector<Point> skipped;
    try {
        if (cfg.has_grid) {
            auto res = estimate_grid(cfg.problem, cfg.grid, cfg.walk, cfg.n_walks, cfg.seed,
                                     cfg.workers);
            rows = std::move(res.nodes);
            skipped = std::move(res.skipped);
        } else {
            const Point& x = cfg.query_point;
            if (!cfg.problem.dom.contains(x) && cfg.problem.dom.distance_to_boundary(x) > 1e-12)
                throw ConfigError("query.point lies outside the domain closure");
            rows.emplace_back(x, estimate_point(cfg.problem, x, cfg.walk, cfg.n_walks, cfg.seed,
                                                cfg.workers));
        }
        Sink sink(cfg.output_path);
        if (cfg.format == "csv")
            write_csv(sink.out(), cfg.problem.dim(), rows);
        else
            write_json(sink.out(), rows, skipped);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    for (const auto& [x, e] : rows)
        if (e.degraded()) return 2;
    return 0;
}

int cmd_validate(const std::string& selector, const std::string& report_path) {
    std::vector<validation::CheckResult> checks;
    try {
        checks = validation::run_suite(selector);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    bool all_pass = true;
    nlohmann::json jchecks = nlohmann::json::array();
    for (const auto& c : checks) {
        all_pass = all_pass && c.pass;
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  measured=" << c.measured
                  << " threshold=" << c.threshold;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
        jchecks.push_back({{"name", c.name},
                           {"criterion", c.criterion},
                           {"pass", c.pass},
                           {"measured", c.measured},
                           {"threshold", c.threshold},
                           {"detail", c.detail}});
    }
    const nlohmann::json report{
        {"selector", selector}, {"all_pass", all_pass}, {"checks", std::move(jchecks)}};
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "error: cannot open report file: " << report_path << "\n";
            return 1;
        }
        out << report.dump(2) << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
    std::cout << (all_pass ? "all checks passed" : "checks FAILED") << "\n";
    return all_pass ? 0 : 1;
}

int cmd_sample_exit(int d, double a, const Point& b, double r, long n, std::uint64_t seed,
                    const std::string& output_path) {
    try {
        if (d < 1) throw ConfigError("dimension must be at least 1");
        if (a <= 0.0) throw ConfigError("diffusion coefficient a must be positive");
        if (r <= 0.0) throw ConfigError("radius must be positive");
        if (n < 0) throw ConfigError("sample count must be non-negative");
        Point drift = b;
        if (drift.empty()) drift.assign(static_cast<std::size_t>(d), 0.0);
        if (static_cast<int>(drift.size()) != d)
            throw ConfigError("drift vector must have the stated dimension");

        const auto law = ExitLaw::make(d, r, drift, 2.0 * a);
        Sink sink(output_path);
        auto& os = sink.out();
        for (int j = 0; j < d; ++j) os << "x" << j << (j + 1 < d ? "," : "\n");
        for (long i = 0; i < n; ++i) {
            RngStream rng(seed, static_cast<std::uint64_t>(i));
            const Point w = sample_exit(law, rng);
            for (int j = 0; j < d; ++j) os << fmt_double(w[j]) << (j + 1 < d ? "," : "\n");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"drifted walk-on-spheres solver for a*laplace(u) + b.grad(u) = 0"};
    app.require_subcommand(1);

    // solve
    std::string config_path;
    std::optional<std::uint64_t> seed_override;
    std::optional<int> workers_override;
    bool print_config = false;
    auto* solve = app.add_subcommand("solve", "run the estimator from a JSON config");
    solve->add_option("config", config_path, "path to JSON run configuration")->required();
    solve->add_flag("--print-config", print_config, "echo the parsed config and exit");
    solve->add_option("--seed", seed_override, "override execution.seed");
    solve->add_option("--workers", workers_override, "override execution.workers");

    // validate
    std::string selector = "all";
    std::string report_path;
    auto* validate = app.add_subcommand("validate", "run the self-validation suites");
    validate->add_option("selector", selector,
                         "bessel, sampler, oracle, mvp, laplace, end2end or all");
    validate->add_option("--report", report_path, "write the JSON report to this path");

    // sample-exit
    int d = 0;
    double a = 1.0, r = 1.0;
    Point b;
    long n = 0;
    std::uint64_t seed = 0;
    std::string output_path = "-";
    auto* sample = app.add_subcommand("sample-exit", "draw exact sphere-exit directions");
    sample->add_option("-d,--dim", d, "dimension")->required();
    sample->add_option("-a", a, "diffusion coefficient (sigma^2 = 2a)");
    sample->add_option("-b", b, "drift vector (default zero)");
    sample->add_option("-r", r, "ball radius");
    sample->add_option("-n", n, "number of samples")->required();
    sample->add_option("--seed", seed, "RNG seed");
    sample->add_option("-o,--output", output_path, "output CSV path ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (solve->parsed())
        return cmd_solve(config_path, seed_override, workers_override, print_config);
    if (validate->parsed()) return cmd_validate(selector, report_path);
    return cmd_sample_exit(d, a, b, r, n, seed, output_path);
}

}  // namespace wos::cli
