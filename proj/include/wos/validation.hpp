#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "wos/geometry.hpp"
#include "wos/point.hpp"
#include "wos/rng.hpp"
#include "wos/walker.hpp"

namespace wos::validation {

struct EulerConfig {
    double dt = 1e-4;
    long max_steps = 100000000;  // hard budget per path
};

struct ExitSample {
    Point direction;  // unit vector at first crossing
    double time = 0.0;
};

// Time-stepped simulation of X_t = bt + sigma W_t from the center of
// B_r(0), stopped at the first post-exit sample.  Independent oracle for
// the exact exit sampler.
ExitSample simulate_ball_exit(int d, double a, const Point& b, double r, const EulerConfig& cfg,
                              RngStream& rng);

struct LaplaceReport {
    double estimate = 0.0;   // dt-extrapolated E[e^{-lambda tau_r}]
    double std_error = 0.0;
    double target = 0.0;     // kappa(d, r sqrt(2 lambda))
    double z = 0.0;
    bool pass = false;
};

// Checks the hitting-time transform of the Bessel process (driftless,
// standard Brownian motion) against kappa; Richardson-extrapolated over
// (dt, dt/4).
LaplaceReport check_laplace_transform(int d, double r, double lambda, int n_sims, double dt,
                                      std::uint64_t seed);

// kappa-weighted spherical average of u over the sphere of radius r about
// x, minus u(x).  Deterministic quadrature; d = 2 trapezoid (spectral),
// d = 3 Gauss-Legendre x trapezoid product rule.
double check_mvp(const ProblemSpec& problem, const std::function<double(const Point&)>& u,
                 const Point& x, double r, int order_polar = 64, int order_azimuth = 2048);

// The interior harmonic extension of the boundary data, when f belongs to
// the analytic vocabulary with A f = 0 for the problem's (a, b).  Throws
// std::invalid_argument otherwise.  By uniqueness this is the solution.
BoundaryFunction exact_solution(const ProblemSpec& problem);

// --- small statistics helpers shared by oracles and tests ---

// two-sample Kolmogorov-Smirnov statistic (inputs copied and sorted)
double ks_statistic(std::vector<double> a, std::vector<double> b);

// one-sample KS statistic against a CDF
double ks_statistic(std::vector<double> a, const std::function<double(double)>& cdf);

// asymptotic critical value at significance alpha
double ks_critical_two_sample(std::size_t n, std::size_t m, double alpha = 0.01);
double ks_critical_one_sample(std::size_t n, double alpha = 0.01);

// Gauss-Legendre nodes/weights on [-1, 1]
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace wos::validation
