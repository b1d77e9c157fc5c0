#include "wos/walker.hpp"

#include <stdexcept>

#include "wos/sampling.hpp"

namespace wos {

WalkOutcome run_walk(const ProblemSpec& problem, const Point& x, const WalkConfig& cfg,
                     RngStream& rng) {
    if (!(problem.a > 0)) throw std::invalid_argument("run_walk: diffusion coefficient must be positive");
    if (!(cfg.shrink > 0.0 && cfg.shrink <= 1.0)) throw std::invalid_argument("run_walk: shrink must be in (0,1]");
    if (!(cfg.shell > 0.0)) throw std::invalid_argument("run_walk: shell width must be positive");
    if (cfg.max_steps < 1) throw std::invalid_argument("run_walk: max_steps must be >= 1");
    if (!problem.dom.contains(x)) throw std::invalid_argument("run_walk: start point not in the domain");

    const double sigma2 = problem.sigma2();
    const double drift_norm = problem.b.empty() ? 0.0 : norm(problem.b);
    const int d = problem.dim();

    WalkOutcome out;
    Point y = x;
    if (cfg.record_path) out.path.push_back(y);

    for (int n = 0; n < cfg.max_steps; ++n) {
        const double gap = problem.dom.distance_to_boundary(y);
        if (gap < cfg.shell) {
            out.exit_point = problem.dom.project_to_boundary(y);
            out.steps = n;
            out.terminated = Termination::ShellReached;
            return out;
        }
        const double r = cfg.shrink * gap;
        // concentration shrinks with the sphere; drift influence fades
        // as the chain closes in on the boundary
        ExitLaw law;
        if (drift_norm > 0) {
            law = ExitLaw::make(d, r, problem.b, sigma2);
        } else {
            law.dim = d;
            law.radius = r;
        }
        const Point omega = sample_exit(law, rng);
        for (int i = 0; i < d; ++i) y[i] += r * omega[i];
        if (!all_finite(y)) throw std::runtime_error("run_walk: non-finite state (internal error)");
        if (cfg.record_path) out.path.push_back(y);
        ++out.steps;
    }
    // budget exhausted: report the projected current position, flagged
    out.exit_point = problem.dom.project_to_boundary(y);
    out.terminated = Termination::BudgetExhausted;
    return out;
}

std::vector<StepsProbeRow> expected_steps_probe(const ProblemSpec& problem, const Point& x,
                                                WalkConfig cfg, const std::vector<double>& shells,
                                                int walks_per_shell, std::uint64_t seed) {
    std::vector<StepsProbeRow> rows;
    rows.reserve(shells.size());
    for (std::size_t si = 0; si < shells.size(); ++si) {
        cfg.shell = shells[si];
        double total = 0.0;
        const std::uint64_t row_seed = derive_seed(seed, si);
        for (int w = 0; w < walks_per_shell; ++w) {
            RngStream rng(row_seed, static_cast<std::uint64_t>(w));
            total += run_walk(problem, x, cfg, rng).steps;
        }
        rows.push_back({shells[si], total / walks_per_shell});
    }
    return rows;
}

}  // namespace wos
