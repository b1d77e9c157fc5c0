#include "wos/estimator.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace wos {

namespace {
constexpr double kZ95 = 1.959964;
constexpr double kBoundaryTol = 1e-12;
}  // namespace

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

Estimate estimate_point(const ProblemSpec& problem, const Point& x, const WalkConfig& cfg,
                        long n_walks, std::uint64_t seed, int workers) {
    if (n_walks < 2) throw std::invalid_argument("estimate_point: n_walks must be >= 2");
    if (workers < 1) throw std::invalid_argument("estimate_point: workers must be >= 1");

    if (problem.dom.distance_to_boundary(x) <= kBoundaryTol && !problem.dom.contains(x)) {
        // on the boundary: u(x) = f(x) exactly
        Estimate e;
        e.mean = problem.f(x);
        e.ci_lo = e.ci_hi = e.mean;
        e.n_walks = n_walks;
        return e;
    }
    if (!problem.dom.contains(x)) throw std::invalid_argument("estimate_point: point not in the domain closure");

    std::vector<double> values(static_cast<std::size_t>(n_walks));
    std::vector<double> steps(static_cast<std::size_t>(n_walks));
    std::vector<long> failures(static_cast<std::size_t>(workers), 0);

    auto worker_fn = [&](int w) {
        const long lo = n_walks * w / workers;
        const long hi = n_walks * (w + 1) / workers;
        long fails = 0;
        for (long i = lo; i < hi; ++i) {
            RngStream rng(seed, static_cast<std::uint64_t>(i));
            const WalkOutcome out = run_walk(problem, x, cfg, rng);
            values[static_cast<std::size_t>(i)] = problem.f(out.exit_point);
            steps[static_cast<std::size_t>(i)] = out.steps;
            if (out.terminated == Termination::BudgetExhausted) ++fails;
        }
        failures[static_cast<std::size_t>(w)] = fails;
    };

    if (workers == 1) {
        worker_fn(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn, w);
        for (auto& t : pool) t.join();
    }

    Estimate e;
    e.n_walks = n_walks;
    for (long f : failures) e.n_budget_failures += f;
    const double n = static_cast<double>(n_walks);
    e.mean = pairwise_sum(values) / n;
    e.mean_steps = pairwise_sum(steps) / n;

    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - e.mean;
        sq[i] = d * d;
    }
    const double var = pairwise_sum(sq) / (n - 1.0);
    e.std_error = std::sqrt(var / n);
    e.ci_lo = e.mean - kZ95 * e.std_error;
    e.ci_hi = e.mean + kZ95 * e.std_error;
    return e;
}

GridResult estimate_grid(const ProblemSpec& problem, const GridSpec& grid, const WalkConfig& cfg,
                         long n_walks, std::uint64_t seed, int workers) {
    const std::size_t d = grid.counts.size();
    if (d == 0 || grid.lo.size() != d || grid.hi.size() != d)
        throw std::invalid_argument("estimate_grid: inconsistent grid spec");
    long total = 1;
    for (int c : grid.counts) {
        if (c < 1) throw std::invalid_argument("estimate_grid: counts must be >= 1");
        total *= c;
    }
    if (total == 0) throw std::invalid_argument("estimate_grid: empty grid");

    GridResult res;
    std::vector<int> idx(d, 0);
    for (long node = 0; node < total; ++node) {
        Point x(d);
        for (std::size_t i = 0; i < d; ++i) {
            x[i] = grid.counts[i] == 1
                       ? grid.lo[i]
                       : grid.lo[i] + (grid.hi[i] - grid.lo[i]) * idx[i] / (grid.counts[i] - 1);
        }
        const bool interior = problem.dom.contains(x);
        const bool on_boundary = problem.dom.distance_to_boundary(x) <= kBoundaryTol;
        if (interior || on_boundary) {
            const std::uint64_t node_seed = derive_seed(seed, static_cast<std::uint64_t>(node));
            res.nodes.emplace_back(x, estimate_point(problem, x, cfg, n_walks, node_seed, workers));
        } else {
            res.skipped.push_back(x);
        }
        for (std::size_t i = d; i-- > 0;) {
            if (++idx[i] < grid.counts[i]) break;
            idx[i] = 0;
        }
    }
    return res;
}

MaxPrincipleReport max_principle_check(const std::vector<Estimate>& results,
                                       std::pair<double, double> f_range, double tol) {
    MaxPrincipleReport rep;
    rep.f_min = f_range.first;
    rep.f_max = f_range.second;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const Estimate& e = results[i];
        if (e.ci_hi < f_range.first - tol || e.ci_lo > f_range.second + tol) {
            rep.offenders.push_back(i);
            rep.pass = false;
        }
    }
    return rep;
}

}  // namespace wos
