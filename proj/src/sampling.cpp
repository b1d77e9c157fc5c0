#include "wos/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "wos/special_functions.hpp"

namespace wos {

namespace {

constexpr long kRejectionGuard = 1000000;  // should never trigger

[[noreturn]] void guard_tripped() {
    throw std::runtime_error("sample_exit: rejection loop exceeded guard budget");
}

// Marsaglia-Tsang; valid for alpha >= 1.
double sample_gamma(double alpha, RngStream& rng) {
    const double d = alpha - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (long it = 0; it < kRejectionGuard; ++it) {
        double x, v;
        do {
            x = rng.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform_pos();
        if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
    }
    guard_tripped();
}

double sample_beta_symmetric(double alpha, RngStream& rng) {
    const double a = sample_gamma(alpha, rng);
    const double b = sample_gamma(alpha, rng);
    return a / (a + b);
}

// Best-Fisher wrapped-Cauchy envelope for the von Mises angle, kappa > 0.
double sample_von_mises_angle(double kappa, RngStream& rng) {
    const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
    const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
    const double rb = (1.0 + rho * rho) / (2.0 * rho);
    for (long it = 0; it < kRejectionGuard; ++it) {
        const double z = std::cos(M_PI * rng.uniform());
        const double f = (1.0 + rb * z) / (rb + z);
        const double c = kappa * (rb - f);
        const double u2 = rng.uniform_pos();
        if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0) {
            const double phi = std::acos(f);
            return rng.uniform() < 0.5 ? -phi : phi;
        }
    }
    guard_tripped();
}

// Polar cosine t = mu . omega for d >= 4 via the Ulrich-Wood envelope:
// density on [-1,1] proportional to (1-t^2)^{(d-3)/2} e^{kappa t}.
double sample_polar_cosine_uw(int d, double kappa, RngStream& rng) {
    const double dm1 = d - 1.0;
    const double b0 = (-2.0 * kappa + std::sqrt(4.0 * kappa * kappa + dm1 * dm1)) / dm1;
    const double x0 = (1.0 - b0) / (1.0 + b0);
    const double c0 = kappa * x0 + dm1 * std::log(1.0 - x0 * x0);
    const double alpha = 0.5 * dm1;
    for (long it = 0; it < kRejectionGuard; ++it) {
        const double z = sample_beta_symmetric(alpha, rng);
        const double t = (1.0 - (1.0 + b0) * z) / (1.0 - (1.0 - b0) * z);
        const double u = rng.uniform_pos();
        if (kappa * t + dm1 * std::log(1.0 - x0 * t) - c0 >= std::log(u)) return t;
    }
    guard_tripped();
}

// Exact inverse-CDF draw of t for d = 3 (flat (1-t^2)^0 weight).
double sample_polar_cosine_d3(double kappa, RngStream& rng) {
    const double u = rng.uniform_pos();
    // log(u + (1-u) e^{-2k}) / k + 1, organized to stay stable for large k
    const double e = std::exp(-2.0 * kappa);
    return 1.0 + std::log(u + (1.0 - u) * e) / kappa;
}

// Unit vector in the hyperplane orthogonal to mu.
Point sample_tangent(const Point& mu, RngStream& rng) {
    const int d = static_cast<int>(mu.size());
    for (long it = 0; it < kRejectionGuard; ++it) {
        Point g(d);
        for (int i = 0; i < d; ++i) g[i] = rng.normal();
        const double gm = dot(g, mu);
        for (int i = 0; i < d; ++i) g[i] -= gm * mu[i];
        const double n = norm(g);
        if (n > 1e-12) {
            for (int i = 0; i < d; ++i) g[i] /= n;
            return g;
        }
    }
    guard_tripped();
}

}  // namespace

ExitLaw ExitLaw::make(int dim, double radius, const Point& drift, double sigma2) {
    if (dim < 1) throw std::invalid_argument("ExitLaw: dimension must be >= 1");
    if (!(radius > 0)) throw std::invalid_argument("ExitLaw: radius must be positive");
    if (!(sigma2 > 0)) throw std::invalid_argument("ExitLaw: sigma^2 must be positive");
    ExitLaw law;
    law.dim = dim;
    law.radius = radius;
    const double bn = norm(drift);
    law.kappa_c = radius * bn / sigma2;
    if (law.kappa_c > 0) {
        law.mu = drift;
        for (double& c : law.mu) c /= bn;
    }
    return law;
}

Point sample_uniform_sphere(int d, RngStream& rng) {
    if (d < 1) throw std::invalid_argument("sample_uniform_sphere: dimension must be >= 1");
    if (d == 1) return {rng.uniform() < 0.5 ? -1.0 : 1.0};
    for (long it = 0; it < kRejectionGuard; ++it) {
        Point g(d);
        for (int i = 0; i < d; ++i) g[i] = rng.normal();
        const double n = norm(g);
        if (n > 1e-12) {
            for (int i = 0; i < d; ++i) g[i] /= n;
            return g;
        }
    }
    guard_tripped();
}

Point sample_exit(const ExitLaw& law, RngStream& rng) {
    if (law.kappa_c == 0.0) return sample_uniform_sphere(law.dim, rng);
    const int d = law.dim;
    if (d == 1) {
        // two-point law: P(+mu) = e^k / (2 cosh k)
        const double p_plus = 1.0 / (1.0 + std::exp(-2.0 * law.kappa_c));
        return {rng.uniform() < p_plus ? law.mu[0] : -law.mu[0]};
    }
    if (d == 2) {
        const double phi = sample_von_mises_angle(law.kappa_c, rng);
        const double c = std::cos(phi), s = std::sin(phi);
        return {c * law.mu[0] - s * law.mu[1], s * law.mu[0] + c * law.mu[1]};
    }
    const double t = (d == 3) ? sample_polar_cosine_d3(law.kappa_c, rng)
                              : sample_polar_cosine_uw(d, law.kappa_c, rng);
    const Point xi = sample_tangent(law.mu, rng);
    const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    Point omega(d);
    for (int i = 0; i < d; ++i) omega[i] = t * law.mu[i] + s * xi[i];
    return omega;
}

double exit_log_density(const ExitLaw& law, const Point& omega) {
    if (static_cast<int>(omega.size()) != law.dim)
        throw std::invalid_argument("exit_log_density: dimension mismatch");
    if (std::abs(norm(omega) - 1.0) > 1e-9)
        throw std::invalid_argument("exit_log_density: omega must be a unit vector");
    if (law.kappa_c == 0.0) return 0.0;
    return sf::log_kappa(law.dim, law.kappa_c) + law.kappa_c * dot(law.mu, omega);
}

}  // namespace wos
