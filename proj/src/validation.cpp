#include "wos/validation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wos/special_functions.hpp"

namespace wos::validation {

ExitSample simulate_ball_exit(int d, double a, const Point& b, double r, const EulerConfig& cfg,
                              RngStream& rng) {
    if (d < 1) throw std::invalid_argument("simulate_ball_exit: dimension must be >= 1");
    if (!(a > 0) || !(r > 0) || !(cfg.dt > 0)) throw std::invalid_argument("simulate_ball_exit: bad parameters");
    const double sigma = std::sqrt(2.0 * a);
    const double step_sd = sigma * std::sqrt(cfg.dt);
    Point x(d, 0.0);
    const double r2 = r * r;
    for (long n = 1; n <= cfg.max_steps; ++n) {
        for (int i = 0; i < d; ++i) {
            const double bi = b.empty() ? 0.0 : b[i];
            x[i] += bi * cfg.dt + step_sd * rng.normal();
        }
        const double q = norm2(x);
        if (q >= r2) {
            const double nx = std::sqrt(q);
            for (int i = 0; i < d; ++i) x[i] /= nx;
            return {x, n * cfg.dt};
        }
    }
    throw std::runtime_error("simulate_ball_exit: step budget exceeded");
}

LaplaceReport check_laplace_transform(int d, double r, double lambda, int n_sims, double dt,
                                      std::uint64_t seed) {
    if (n_sims < 2) throw std::invalid_argument("check_laplace_transform: n_sims must be >= 2");
    // Bessel process of standard BM: sigma = 1, so a = 1/2, b = 0.
    const Point b;
    auto level = [&](double step, std::uint64_t level_tag, double& mean, double& var) {
        EulerConfig cfg;
        cfg.dt = step;
        double s = 0.0, s2 = 0.0;
        for (int i = 0; i < n_sims; ++i) {
            RngStream rng(derive_seed(seed, level_tag), static_cast<std::uint64_t>(i));
            const double tau = simulate_ball_exit(d, 0.5, b, r, cfg, rng).time;
            const double v = std::exp(-lambda * tau);
            s += v;
            s2 += v * v;
        }
        mean = s / n_sims;
        var = (s2 - n_sims * mean * mean) / (n_sims - 1.0);
    };

    double m1, v1, m2, v2;
    level(dt, 1, m1, v1);
    level(0.25 * dt, 2, m2, v2);

    LaplaceReport rep;
    // leading discretization error ~ sqrt(dt); halving sqrt(dt) gives 2 m2 - m1
    rep.estimate = 2.0 * m2 - m1;
    rep.std_error = std::sqrt((4.0 * v2 + v1) / n_sims);
    rep.target = sf::kappa(d, r * std::sqrt(2.0 * lambda));
    rep.z = (rep.estimate - rep.target) / rep.std_error;
    rep.pass = std::abs(rep.z) < 3.0;
    return rep;
}

double check_mvp(const ProblemSpec& problem, const std::function<double(const Point&)>& u,
                 const Point& x, double r, int order_polar, int order_azimuth) {
    const int d = problem.dim();
    if (d != 2 && d != 3) throw std::invalid_argument("check_mvp: implemented for d = 2 and d = 3");
    if (!(r > 0) || r >= problem.dom.distance_to_boundary(x))
        throw std::invalid_argument("check_mvp: need 0 < r < d(x, boundary)");
    const double sigma2 = problem.sigma2();
    const double bnorm = problem.b.empty() ? 0.0 : norm(problem.b);

    auto weighted = [&](const Point& y) {
        double e = 0.0;
        if (bnorm > 0)
            for (int i = 0; i < d; ++i) e += problem.b[i] * (y[i] - x[i]);
        return u(y) * std::exp(e / sigma2);
    };

    double integral = 0.0;
    if (d == 2) {
        const int n = order_azimuth;
        for (int k = 0; k < n; ++k) {
            const double th = 2.0 * M_PI * k / n;
            integral += weighted({x[0] + r * std::cos(th), x[1] + r * std::sin(th)});
        }
        integral /= n;
    } else {
        std::vector<double> gl_t, gl_w;
        gauss_legendre(order_polar, gl_t, gl_w);
        const int na = std::max(8, order_azimuth / 16);  // 128 at the default order
        for (int i = 0; i < order_polar; ++i) {
            const double t = gl_t[i];
            const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
            double ring = 0.0;
            for (int k = 0; k < na; ++k) {
                const double ph = 2.0 * M_PI * k / na;
                ring += weighted({x[0] + r * s * std::cos(ph), x[1] + r * s * std::sin(ph), x[2] + r * t});
            }
            integral += gl_w[i] * ring / na;
        }
        integral *= 0.5;  // normalized measure: GL weights sum to 2
    }
    return sf::kappa(d, r * bnorm / sigma2) * integral - u(x);
}

namespace {

bool is_harmonic_for(const BoundaryFunction& f, const ProblemSpec& p) {
    const double tol = 1e-12;
    switch (f.kind()) {
        case BoundaryKind::Constant:
            return true;
        case BoundaryKind::Coordinate: {
            const double bj = f.axis() < static_cast<int>(p.b.size()) ? p.b[f.axis()] : 0.0;
            return std::abs(bj) <= tol;
        }
        case BoundaryKind::Affine: {
            double bc = 0.0;
            for (std::size_t i = 0; i < f.coeffs().size() && i < p.b.size(); ++i)
                bc += p.b[i] * f.coeffs()[i];
            return std::abs(bc) <= tol;
        }
        case BoundaryKind::ExpDrift: {
            // A e^{-k x_j} = (a k^2 - b_j k) e^{-k x_j}; zero iff k = b_j / a (or k = 0)
            const double bj = f.axis() < static_cast<int>(p.b.size()) ? p.b[f.axis()] : 0.0;
            const double k = f.rate();
            return std::abs(k * (p.a * k - bj)) <= tol;
        }
        case BoundaryKind::Sum:
            for (const auto& [w, g] : f.terms()) {
                (void)w;
                if (!is_harmonic_for(g, p)) return false;
            }
            return true;
    }
    return false;
}

}  // namespace

BoundaryFunction exact_solution(const ProblemSpec& problem) {
    if (!is_harmonic_for(problem.f, problem))
        throw std::invalid_argument("exact_solution: boundary data is not A-harmonic in the oracle vocabulary");
    // every built-in is globally defined, so the boundary data is its own
    // interior extension
    return problem.f;
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j])
            ++i;
        else
            ++j;
        d = std::max(d, std::abs(i / na - j / nb));
    }
    return d;
}

double ks_statistic(std::vector<double> a, const std::function<double(double)>& cdf) {
    std::sort(a.begin(), a.end());
    const double n = static_cast<double>(a.size());
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double c = cdf(a[i]);
        d = std::max(d, std::max(std::abs((i + 1) / n - c), std::abs(c - i / n)));
    }
    return d;
}

double ks_critical_two_sample(std::size_t n, std::size_t m, double alpha) {
    const double c = std::sqrt(-0.5 * std::log(0.5 * alpha));
    return c * std::sqrt((static_cast<double>(n) + m) / (static_cast<double>(n) * m));
}

double ks_critical_one_sample(std::size_t n, double alpha) {
    return std::sqrt(-0.5 * std::log(0.5 * alpha) / static_cast<double>(n));
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

}  // namespace wos::validation
