#pragma once

#include <cstdint>
#include <vector>

#include "wos/geometry.hpp"
#include "wos/point.hpp"
#include "wos/rng.hpp"

namespace wos {

// Dirichlet problem data for the operator a*Laplace + b.grad.
struct ProblemSpec {
    double a = 1.0;
    Point b;
    Domain dom;
    BoundaryFunction f;

    double sigma2() const { return 2.0 * a; }
    int dim() const { return dom.dim(); }
};

struct WalkConfig {
    double shrink = 1.0;     // sphere radius factor in (0, 1]
    double shell = 1e-3;     // termination distance to the boundary
    int max_steps = 10000;
    bool record_path = false;
};

enum class Termination { ShellReached, BudgetExhausted };

struct WalkOutcome {
    Point exit_point;
    int steps = 0;
    Termination terminated = Termination::ShellReached;
    std::vector<Point> path;  // filled only when record_path
};

// One realization of the sphere-jump chain started at x, stopped in the
// shell and projected to the boundary.
WalkOutcome run_walk(const ProblemSpec& problem, const Point& x, const WalkConfig& cfg,
                     RngStream& rng);

struct StepsProbeRow {
    double shell;
    double mean_steps;
};

// Mean step counts across a grid of shell widths (diagnostics).
std::vector<StepsProbeRow> expected_steps_probe(const ProblemSpec& problem, const Point& x,
                                                WalkConfig cfg, const std::vector<double>& shells,
                                                int walks_per_shell, std::uint64_t seed);

}  // namespace wos
