#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wos/validation.hpp"
#include "wos/walker.hpp"

using namespace wos;

namespace {

ProblemSpec disk_problem(Point b = {}) {
    ProblemSpec p;
    p.a = 1.0;
    p.b = std::move(b);
    p.dom = Domain::ball({0.0, 0.0}, 1.0);
    p.f = BoundaryFunction::coordinate(0);
    return p;
}

}  // namespace

TEST_CASE("full-size first sphere from the center exits in one step") {
    auto p = disk_problem({0.7, -0.3});
    WalkConfig cfg;
    cfg.shrink = 1.0;
    cfg.shell = 1e-3;
    RngStream rng(1, 0);
    const auto out = run_walk(p, {0.0, 0.0}, cfg, rng);
    CHECK(out.steps == 1);
    CHECK(out.terminated == Termination::ShellReached);
    CHECK(norm(out.exit_point) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("start already inside the shell: zero sampling steps") {
    auto p = disk_problem();
    WalkConfig cfg;
    cfg.shell = 1e-2;
    RngStream rng(1, 0);
    const auto out = run_walk(p, {0.9999, 0.0}, cfg, rng);
    CHECK(out.steps == 0);
    CHECK(out.exit_point[0] == doctest::Approx(1.0));
    CHECK(out.exit_point[1] == doctest::Approx(0.0));
}

TEST_CASE("start point must lie in the open domain") {
    auto p = disk_problem();
    WalkConfig cfg;
    RngStream rng(1, 0);
    CHECK_THROWS(run_walk(p, {1.5, 0.0}, cfg, rng));
    CHECK_THROWS(run_walk(p, {1.0, 0.0}, cfg, rng));
}

TEST_CASE("zero-drift exits are uniform on the circle") {
    auto p = disk_problem();
    WalkConfig cfg;
    cfg.shrink = 0.5;
    cfg.shell = 1e-3;
    const int n = 10000;
    std::vector<double> ang(n);
    for (int i = 0; i < n; ++i) {
        RngStream rng(42, static_cast<std::uint64_t>(i));
        const auto out = run_walk(p, {0.0, 0.0}, cfg, rng);
        ang[i] = std::atan2(out.exit_point[1], out.exit_point[0]);
    }
    const double d =
        validation::ks_statistic(ang, [](double a) { return (a + M_PI) / (2.0 * M_PI); });
    CHECK(d < validation::ks_critical_one_sample(n));
}

TEST_CASE("path invariants: in-domain and exact step lengths") {
    auto p = disk_problem({1.5, 0.5});
    WalkConfig cfg;
    cfg.shrink = 0.7;
    cfg.shell = 1e-4;
    cfg.record_path = true;
    for (int w = 0; w < 50; ++w) {
        RngStream rng(5, static_cast<std::uint64_t>(w));
        const auto out = run_walk(p, {0.1, -0.2}, cfg, rng);
        REQUIRE(out.path.size() == static_cast<std::size_t>(out.steps) + 1);
        for (std::size_t i = 0; i + 1 < out.path.size(); ++i) {
            CHECK(p.dom.contains(out.path[i]));
            const double r = cfg.shrink * p.dom.distance_to_boundary(out.path[i]);
            CHECK(dist(out.path[i + 1], out.path[i]) == doctest::Approx(r).epsilon(1e-12));
        }
        // shell contract
        const Point& last = out.path.back();
        CHECK(p.dom.distance_to_boundary(last) < cfg.shell);
        CHECK(dist(out.exit_point, last) <= cfg.shell);
        CHECK(p.dom.distance_to_boundary(out.exit_point) <= 1e-12);
    }
}

TEST_CASE("budget exhaustion is reported, not hidden") {
    auto p = disk_problem();
    WalkConfig cfg;
    cfg.shrink = 0.5;
    cfg.shell = 1e-12;
    cfg.max_steps = 3;
    RngStream rng(9, 0);
    const auto out = run_walk(p, {0.0, 0.0}, cfg, rng);
    CHECK(out.terminated == Termination::BudgetExhausted);
    CHECK(out.steps == 3);
    CHECK(norm(out.exit_point) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("steps probe: nested shells, logarithmic growth") {
    auto p = disk_problem();
    WalkConfig cfg;
    cfg.shrink = 0.5;
    const std::vector<double> shells{2.0, 1e-1, 1e-2, 1e-3};
    const auto rows = expected_steps_probe(p, {0.0, 0.0}, cfg, shells, 400, 33);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].mean_steps <= 1.0);  // shell swallows the domain
    for (std::size_t i = 1; i + 1 < rows.size(); ++i)
        CHECK(rows[i + 1].mean_steps >= rows[i].mean_steps);
    // least-squares slope of mean steps vs ln(1/shell), over the shrinking shells
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = 3;
    for (int i = 1; i <= n; ++i) {
        const double x = std::log(1.0 / rows[i].shell), y = rows[i].mean_steps;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(slope > 0.0);
    CHECK(std::isfinite(slope));
}
