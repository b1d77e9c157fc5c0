#pragma once

#include "wos/point.hpp"
#include "wos/rng.hpp"

namespace wos {

// Exit law of the drifted process from a ball of radius r: a von
// Mises-Fisher law on S^{d-1} with mean direction b/||b|| and
// concentration kappa_c = r ||b|| / sigma^2.
struct ExitLaw {
    int dim = 0;
    double radius = 0.0;
    double kappa_c = 0.0;
    Point mu;  // unit; empty when kappa_c == 0

    static ExitLaw make(int dim, double radius, const Point& drift, double sigma2);
};

// Uniform direction on S^{d-1}; d = 1 gives +-1 with equal probability.
Point sample_uniform_sphere(int d, RngStream& rng);

// Exact draw from the exit law (independent draws, envelope rejection).
Point sample_exit(const ExitLaw& law, RngStream& rng);

// log density of omega w.r.t. normalized uniform surface measure:
// log kappa(d, kappa_c) + kappa_c * (mu . omega).
double exit_log_density(const ExitLaw& law, const Point& omega);

}  // namespace wos
