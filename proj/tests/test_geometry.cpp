#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wos/geometry.hpp"
#include "wos/sampling.hpp"

using namespace wos;

TEST_CASE("ball distance and membership") {
    const auto dom = Domain::ball({0.0, 0.0, 0.0}, 1.0);
    CHECK(dom.distance_to_boundary({0.0, 0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(dom.distance_to_boundary({0.25, 0.0, 0.0}) == doctest::Approx(0.75));
    CHECK(dom.distance_to_boundary({2.0, 0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(dom.contains({0.0, 0.0, 0.0}));
    CHECK_FALSE(dom.contains({1.0, 0.0, 0.0}));  // open set: boundary excluded
    CHECK_THROWS(dom.distance_to_boundary({0.0, 0.0}));
}

TEST_CASE("box distance") {
    const auto dom = Domain::box({-1.0, -1.0}, {1.0, 1.0});
    CHECK(dom.distance_to_boundary({0.5, 0.2}) == doctest::Approx(0.5));
    CHECK(dom.distance_to_boundary({0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(dom.distance_to_boundary({3.0, 0.0}) == doctest::Approx(2.0));
    CHECK(dom.distance_to_boundary({2.0, 2.0}) == doctest::Approx(std::sqrt(2.0)));
    CHECK(dom.contains({0.99, -0.99}));
    CHECK_FALSE(dom.contains({1.0, 0.0}));
}

TEST_CASE("annulus distance and membership") {
    const auto dom = Domain::annulus({0.0, 0.0}, 0.5, 1.0);
    CHECK(dom.contains({0.75, 0.0}));
    CHECK_FALSE(dom.contains({0.0, 0.0}));
    CHECK_FALSE(dom.contains({0.5, 0.0}));
    CHECK(dom.distance_to_boundary({0.75, 0.0}) == doctest::Approx(0.25));
    CHECK(dom.distance_to_boundary({0.9, 0.0}) == doctest::Approx(0.1));
    CHECK(dom.distance_to_boundary({0.0, 0.0}) == doctest::Approx(0.5));
}

TEST_CASE("projection to the boundary") {
    const auto ball2 = Domain::ball({0.0, 0.0}, 1.0);
    auto p = ball2.project_to_boundary({0.9, 0.0});
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(p[1] == doctest::Approx(0.0));

    const auto ball3 = Domain::ball({0.0, 0.0, 0.0}, 1.0);
    p = ball3.project_to_boundary({0.0, 0.0, 0.0});  // tie at the center
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(p[1] == 0.0);
    CHECK(p[2] == 0.0);

    const auto box = Domain::box({-1.0, -1.0}, {1.0, 1.0});
    p = box.project_to_boundary({0.7, 0.1});
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(p[1] == doctest::Approx(0.1));

    CHECK_THROWS(ball2.project_to_boundary({2.0, 0.0}));
}

TEST_CASE("distance is the infimum over a dense boundary mesh") {
    RngStream rng(11, 0);
    const Domain shapes[] = {
        Domain::ball({0.3, -0.1}, 1.2),
        Domain::box({-1.0, 0.0, -2.0}, {1.0, 2.0, -0.5}),
        Domain::annulus({0.0, 0.0}, 0.5, 1.0),
    };
    for (const auto& dom : shapes) {
        std::vector<Point> mesh;
        RngStream mesh_rng(5, 0);
        for (int i = 0; i < 4000; ++i) mesh.push_back(dom.sample_boundary(mesh_rng));

        for (int trial = 0; trial < 300;) {
            Point x(dom.dim());
            for (int i = 0; i < dom.dim(); ++i)
                x[i] = dom.center().empty() ? 0.0 : dom.center()[i] + 3.0 * (rng.uniform() - 0.5);
            if (!dom.contains(x)) continue;
            ++trial;
            const double gap = dom.distance_to_boundary(x);
            CHECK(gap > 0.0);
            for (const auto& m : mesh) CHECK(dist(x, m) >= gap - 1e-9);
            const Point proj = dom.project_to_boundary(x);
            CHECK(dom.distance_to_boundary(proj) <= 1e-12);
            CHECK(dist(x, proj) == doctest::Approx(gap).epsilon(1e-12));
        }
    }
}

TEST_CASE("boundary function vocabulary") {
    const Point p{0.5, -0.4};
    CHECK(BoundaryFunction::constant(3.0)(p) == 3.0);
    CHECK(BoundaryFunction::coordinate(1)(p) == -0.4);
    CHECK(BoundaryFunction::affine(1.0, {2.0, 1.0})(p) == doctest::Approx(1.6));
    // sigma^2 = 2, b_1 = 1 gives rate 2 b_1 / sigma^2 = 1
    CHECK(BoundaryFunction::exp_drift(0, 1.0)(p) == doctest::Approx(std::exp(-0.5)));
    const auto s = BoundaryFunction::sum({{2.0, BoundaryFunction::constant(1.0)},
                                          {-1.0, BoundaryFunction::coordinate(0)}});
    CHECK(s(p) == doctest::Approx(1.5));
    CHECK_THROWS(BoundaryFunction::coordinate(5)(p));
}

TEST_CASE("boundary range of simple data") {
    const auto dom = Domain::ball({0.0, 0.0}, 1.0);
    auto [lo, hi] = boundary_range(dom, BoundaryFunction::constant(2.5));
    CHECK(lo == 2.5);
    CHECK(hi == 2.5);
    auto [clo, chi] = boundary_range(dom, BoundaryFunction::coordinate(0));
    CHECK(clo == doctest::Approx(-1.0).epsilon(1e-3));
    CHECK(chi == doctest::Approx(1.0).epsilon(1e-3));
}
