#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wos/point.hpp"
#include "wos/rng.hpp"

namespace wos {

enum class ShapeTag { Ball, Box, Annulus };

// Bounded open domain with exact boundary-distance queries.
class Domain {
public:
    Domain() = default;  // unset; assign from a factory before use

    static Domain ball(Point center, double radius);
    static Domain box(Point lo, Point hi);
    static Domain annulus(Point center, double r_inner, double r_outer);

    int dim() const { return static_cast<int>(center_.empty() ? lo_.size() : center_.size()); }
    ShapeTag tag() const { return tag_; }

    // Euclidean distance from x to the boundary; defined for all x.
    double distance_to_boundary(const Point& x) const;

    // x in the open set D (boundary points excluded).
    bool contains(const Point& x) const;

    // Nearest boundary point; ties broken deterministically (lowest axis
    // first for boxes, fixed first-axis direction for centers).
    // Requires x in the closure of D.
    Point project_to_boundary(const Point& x) const;

    double diameter() const;

    // Uniform-ish boundary sample for range scans and mesh checks.
    Point sample_boundary(RngStream& rng) const;

    // shape parameters (read-only access for serialization)
    const Point& center() const { return center_; }
    double radius() const { return radius_; }
    double r_inner() const { return r_inner_; }
    double r_outer() const { return r_outer_; }
    const Point& lo() const { return lo_; }
    const Point& hi() const { return hi_; }

private:
    void check_dim(const Point& x) const;

    ShapeTag tag_ = ShapeTag::Ball;
    Point center_, lo_, hi_;
    double radius_ = 0.0, r_inner_ = 0.0, r_outer_ = 0.0;
};

enum class BoundaryKind { Constant, Coordinate, Affine, ExpDrift, Sum };

// Closed vocabulary of globally defined analytic boundary data.  Every
// built-in evaluates anywhere in R^d, so restrictions to the boundary and
// interior oracle solutions share one object.
class BoundaryFunction {
public:
    static BoundaryFunction constant(double c);
    static BoundaryFunction coordinate(int axis);
    static BoundaryFunction affine(double offset, Point coeffs);
    // exp{-rate * x_axis}; with rate = 2 b_j / sigma^2 this is the
    // drift-adapted exponential h_j.
    static BoundaryFunction exp_drift(int axis, double rate);
    static BoundaryFunction sum(std::vector<std::pair<double, BoundaryFunction>> terms);

    double operator()(const Point& p) const;

    BoundaryKind kind() const { return kind_; }
    double value() const { return value_; }
    int axis() const { return axis_; }
    double rate() const { return rate_; }
    double offset() const { return offset_; }
    const Point& coeffs() const { return coeffs_; }
    const std::vector<std::pair<double, BoundaryFunction>>& terms() const { return terms_; }

private:
    BoundaryKind kind_ = BoundaryKind::Constant;
    double value_ = 0.0;
    int axis_ = 0;
    double rate_ = 0.0;
    double offset_ = 0.0;
    Point coeffs_;
    std::vector<std::pair<double, BoundaryFunction>> terms_;
};

// min/max of f over the boundary, estimated by dense sampling.
std::pair<double, double> boundary_range(const Domain& dom, const BoundaryFunction& f,
                                         int n_samples = 20000, std::uint64_t seed = 7);

}  // namespace wos
