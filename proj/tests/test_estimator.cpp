#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wos/estimator.hpp"

using namespace wos;

namespace {

ProblemSpec interval_problem() {
    // (-1, 1), sigma^2 = 2, drift 0.8; u(0) = e^{0.4} / (2 cosh 0.4)
    ProblemSpec p;
    p.a = 1.0;
    p.b = {0.8};
    p.dom = Domain::box({-1.0}, {1.0});
    p.f = BoundaryFunction::affine(0.5, {0.5});  // f(1) = 1, f(-1) = 0
    return p;
}

ProblemSpec disk_problem(Point b = {0.0, 0.0}) {
    ProblemSpec p;
    p.a = 1.0;
    p.b = std::move(b);
    p.dom = Domain::ball({0.0, 0.0}, 1.0);
    p.f = BoundaryFunction::coordinate(0);
    return p;
}

}  // namespace

TEST_CASE("constant boundary data is exact with zero spread") {
    auto p = disk_problem();
    p.f = BoundaryFunction::constant(3.0);
    const auto e = estimate_point(p, {0.2, 0.1}, {}, 1000, 4);
    CHECK(e.mean == 3.0);
    CHECK(e.std_error == 0.0);
    CHECK(e.ci_lo == 3.0);
    CHECK(e.ci_hi == 3.0);
    CHECK(e.n_budget_failures == 0);
}

TEST_CASE("one-dimensional drifted interval matches the scale-function value") {
    const auto p = interval_problem();
    WalkConfig cfg;
    cfg.shrink = 1.0;
    cfg.shell = 1e-5;
    const auto e = estimate_point(p, {0.0}, cfg, 20000, 123);
    const double want = std::exp(0.4) / (2.0 * std::cosh(0.4));
    CHECK(want == doctest::Approx(0.690).epsilon(1e-3));
    CHECK(std::abs(e.mean - want) < 3.0 * e.std_error + 1e-4);
    CHECK(e.ci_lo <= e.mean);
    CHECK(e.mean <= e.ci_hi);
    CHECK(e.ci_hi - e.mean == doctest::Approx(1.959964 * e.std_error));
}

TEST_CASE("boundary point short-circuits to exact data") {
    const auto p = disk_problem();
    const auto e = estimate_point(p, {1.0, 0.0}, {}, 100, 9);
    CHECK(e.mean == 1.0);
    CHECK(e.std_error == 0.0);
}

TEST_CASE("outside the closure is an error; n_walks < 2 is an error") {
    const auto p = disk_problem();
    CHECK_THROWS(estimate_point(p, {2.0, 0.0}, {}, 100, 1));
    CHECK_THROWS(estimate_point(p, {0.0, 0.0}, {}, 1, 1));
}

TEST_CASE("worker count never changes the result bits") {
    const auto p = disk_problem({1.0, 0.0});
    WalkConfig cfg;
    cfg.shrink = 0.5;
    const auto e1 = estimate_point(p, {0.3, 0.2}, cfg, 5000, 77, 1);
    for (int workers : {2, 4, 16}) {
        const auto ew = estimate_point(p, {0.3, 0.2}, cfg, 5000, 77, workers);
        CHECK(ew.mean == e1.mean);
        CHECK(ew.std_error == e1.std_error);
        CHECK(ew.mean_steps == e1.mean_steps);
        CHECK(ew.n_budget_failures == e1.n_budget_failures);
    }
}

TEST_CASE("estimator is linear in the boundary data under shared seeds") {
    auto p = disk_problem({1.0, 0.0});
    const double alpha = 2.0, beta = -0.5;
    const auto f1 = BoundaryFunction::coordinate(0);
    const auto f2 = BoundaryFunction::constant(1.0);
    p.f = f1;
    const auto e1 = estimate_point(p, {0.1, 0.0}, {}, 4000, 5);
    p.f = f2;
    const auto e2 = estimate_point(p, {0.1, 0.0}, {}, 4000, 5);
    p.f = BoundaryFunction::sum({{alpha, f1}, {beta, f2}});
    const auto es = estimate_point(p, {0.1, 0.0}, {}, 4000, 5);
    CHECK(es.mean == doctest::Approx(alpha * e1.mean + beta * e2.mean).epsilon(1e-13));
}

TEST_CASE("every sample and the mean respect the boundary range") {
    const auto p = disk_problem({0.5, 0.5});
    const auto e = estimate_point(p, {0.4, -0.2}, {}, 3000, 21);
    CHECK(e.mean >= -1.0);
    CHECK(e.mean <= 1.0);
}

TEST_CASE("shrink factor does not move the estimated law") {
    const auto p = disk_problem({1.0, 0.0});
    WalkConfig c1, c2;
    c1.shrink = 1.0;
    c2.shrink = 0.25;
    const auto e1 = estimate_point(p, {0.3, 0.2}, c1, 20000, 301);
    const auto e2 = estimate_point(p, {0.3, 0.2}, c2, 20000, 302);
    const double comb = std::hypot(e1.std_error, e2.std_error);
    CHECK(std::abs(e1.mean - e2.mean) < 3.0 * comb + 2e-3);
}

TEST_CASE("grid evaluation") {
    const auto p = disk_problem();
    SUBCASE("single node consistent with estimate_point") {
        GridSpec g;
        g.lo = {0.3, 0.2};
        g.hi = {0.3, 0.2};
        g.counts = {1, 1};
        const auto res = estimate_grid(p, g, {}, 500, 11);
        REQUIRE(res.nodes.size() == 1);
        const auto direct = estimate_point(p, {0.3, 0.2}, {}, 500, derive_seed(11, 0));
        CHECK(res.nodes[0].second.mean == direct.mean);
    }
    SUBCASE("nodes outside the domain are skipped and reported") {
        GridSpec g;
        g.lo = {5.0, 5.0};
        g.hi = {6.0, 6.0};
        g.counts = {2, 2};
        const auto res = estimate_grid(p, g, {}, 500, 11);
        CHECK(res.nodes.empty());
        CHECK(res.skipped.size() == 4);
    }
    SUBCASE("harmonic interpolant recovered on a 3x3 grid") {
        GridSpec g;
        g.lo = {-0.5, -0.5};
        g.hi = {0.5, 0.5};
        g.counts = {3, 3};
        const auto res = estimate_grid(p, g, {}, 4000, 19);
        REQUIRE(res.nodes.size() == 9);
        for (const auto& [x, e] : res.nodes)
            CHECK(std::abs(e.mean - x[0]) < 3.0 * e.std_error + 2e-3);
    }
}

TEST_CASE("maximum principle check") {
    const auto p = disk_problem();
    GridSpec g;
    g.lo = {-0.5, -0.5};
    g.hi = {0.5, 0.5};
    g.counts = {3, 3};
    const auto res = estimate_grid(p, g, {}, 2000, 29);
    std::vector<Estimate> es;
    for (const auto& [x, e] : res.nodes) es.push_back(e);
    auto rep = max_principle_check(es, {-1.0, 1.0});
    CHECK(rep.pass);
    CHECK(rep.offenders.empty());

    Estimate bad;
    bad.mean = 11.0;
    bad.ci_lo = 10.9;
    bad.ci_hi = 11.1;
    es.push_back(bad);
    rep = max_principle_check(es, {-1.0, 1.0});
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.offenders.size() == 1);
    CHECK(rep.offenders[0] == es.size() - 1);
}
