#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "wos/walker.hpp"

namespace wos {

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    long n_walks = 0;
    long n_budget_failures = 0;
    double mean_steps = 0.0;

    bool degraded() const { return n_budget_failures > 0.01 * static_cast<double>(n_walks); }
};

// Deterministic reduction: fixed pairwise tree over the index order, so the
// result is independent of how walks were scheduled across workers.
double pairwise_sum(std::span<const double> v);

// Monte Carlo estimate of u(x) from n_walks independent walks, streams
// keyed by (seed, walk index).  Points on the boundary short-circuit to the
// exact value f(x).  workers only changes wall-clock, never the bytes.
Estimate estimate_point(const ProblemSpec& problem, const Point& x, const WalkConfig& cfg,
                        long n_walks, std::uint64_t seed, int workers = 1);

struct GridSpec {
    Point lo, hi;
    std::vector<int> counts;  // nodes per axis, >= 1
};

struct GridResult {
    std::vector<std::pair<Point, Estimate>> nodes;
    std::vector<Point> skipped;  // nodes outside the closure
};

GridResult estimate_grid(const ProblemSpec& problem, const GridSpec& grid, const WalkConfig& cfg,
                         long n_walks, std::uint64_t seed, int workers = 1);

struct MaxPrincipleReport {
    bool pass = true;
    std::vector<std::size_t> offenders;  // indices whose CI escapes the f range
    double f_min = 0.0, f_max = 0.0;
};

MaxPrincipleReport max_principle_check(const std::vector<Estimate>& results,
                                       std::pair<double, double> f_range, double tol = 0.0);

}  // namespace wos
