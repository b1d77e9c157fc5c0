#include "wos/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wos/sampling.hpp"

namespace wos {

namespace {
constexpr double kClosureTol = 1e-9;
}

Domain Domain::ball(Point center, double radius) {
    if (center.empty()) throw std::invalid_argument("ball: empty center");
    if (!(radius > 0)) throw std::invalid_argument("ball: radius must be positive");
    Domain d;
    d.tag_ = ShapeTag::Ball;
    d.center_ = std::move(center);
    d.radius_ = radius;
    return d;
}

Domain Domain::box(Point lo, Point hi) {
    if (lo.empty() || lo.size() != hi.size()) throw std::invalid_argument("box: bad bounds");
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (!(lo[i] < hi[i])) throw std::invalid_argument("box: lo must be < hi per axis");
    Domain d;
    d.tag_ = ShapeTag::Box;
    d.lo_ = std::move(lo);
    d.hi_ = std::move(hi);
    d.center_.resize(d.lo_.size());
    for (std::size_t i = 0; i < d.lo_.size(); ++i) d.center_[i] = 0.5 * (d.lo_[i] + d.hi_[i]);
    return d;
}

Domain Domain::annulus(Point center, double r_inner, double r_outer) {
    if (center.empty()) throw std::invalid_argument("annulus: empty center");
    if (!(0 < r_inner && r_inner < r_outer)) throw std::invalid_argument("annulus: need 0 < r_inner < r_outer");
    Domain d;
    d.tag_ = ShapeTag::Annulus;
    d.center_ = std::move(center);
    d.r_inner_ = r_inner;
    d.r_outer_ = r_outer;
    return d;
}

void Domain::check_dim(const Point& x) const {
    if (static_cast<int>(x.size()) != dim()) throw std::invalid_argument("point dimension mismatch");
}

double Domain::distance_to_boundary(const Point& x) const {
    check_dim(x);
    switch (tag_) {
        case ShapeTag::Ball:
            return std::abs(radius_ - dist(x, center_));
        case ShapeTag::Annulus: {
            const double rho = dist(x, center_);
            return std::min(std::abs(rho - r_inner_), std::abs(r_outer_ - rho));
        }
        case ShapeTag::Box: {
            // |signed distance| of the axis box
            double inside = -std::numeric_limits<double>::infinity();
            double out2 = 0.0;
            for (std::size_t i = 0; i < lo_.size(); ++i) {
                const double q = std::max(lo_[i] - x[i], x[i] - hi_[i]);
                inside = std::max(inside, q);
                if (q > 0) out2 += q * q;
            }
            return out2 > 0 ? std::sqrt(out2) : -inside;
        }
    }
    return 0.0;
}

bool Domain::contains(const Point& x) const {
    check_dim(x);
    switch (tag_) {
        case ShapeTag::Ball:
            return dist(x, center_) < radius_;
        case ShapeTag::Annulus: {
            const double rho = dist(x, center_);
            return r_inner_ < rho && rho < r_outer_;
        }
        case ShapeTag::Box:
            for (std::size_t i = 0; i < lo_.size(); ++i)
                if (!(lo_[i] < x[i] && x[i] < hi_[i])) return false;
            return true;
    }
    return false;
}

Point Domain::project_to_boundary(const Point& x) const {
    check_dim(x);
    switch (tag_) {
        case ShapeTag::Ball: {
            const double rho = dist(x, center_);
            if (rho > radius_ + kClosureTol) throw std::invalid_argument("project_to_boundary: point outside closure");
            Point p = center_;
            if (rho == 0.0) {
                p[0] += radius_;  // tie at the center: fixed first-axis direction
                return p;
            }
            const double s = radius_ / rho;
            for (std::size_t i = 0; i < p.size(); ++i) p[i] += s * (x[i] - center_[i]);
            return p;
        }
        case ShapeTag::Annulus: {
            const double rho = dist(x, center_);
            if (rho < r_inner_ - kClosureTol || rho > r_outer_ + kClosureTol)
                throw std::invalid_argument("project_to_boundary: point outside closure");
            const double target = (rho - r_inner_ <= r_outer_ - rho) ? r_inner_ : r_outer_;
            Point p = center_;
            const double s = target / rho;
            for (std::size_t i = 0; i < p.size(); ++i) p[i] += s * (x[i] - center_[i]);
            return p;
        }
        case ShapeTag::Box: {
            double best = std::numeric_limits<double>::infinity();
            std::size_t best_axis = 0;
            bool best_lo = true;
            for (std::size_t i = 0; i < lo_.size(); ++i) {
                const double dl = x[i] - lo_[i], dh = hi_[i] - x[i];
                if (dl < -kClosureTol || dh < -kClosureTol)
                    throw std::invalid_argument("project_to_boundary: point outside closure");
                if (dl < best) { best = dl; best_axis = i; best_lo = true; }
                if (dh < best) { best = dh; best_axis = i; best_lo = false; }
            }
            Point p = x;
            p[best_axis] = best_lo ? lo_[best_axis] : hi_[best_axis];
            return p;
        }
    }
    return x;
}

double Domain::diameter() const {
    switch (tag_) {
        case ShapeTag::Ball:
            return 2.0 * radius_;
        case ShapeTag::Annulus:
            return 2.0 * r_outer_;
        case ShapeTag::Box: {
            double s = 0.0;
            for (std::size_t i = 0; i < lo_.size(); ++i) {
                const double e = hi_[i] - lo_[i];
                s += e * e;
            }
            return std::sqrt(s);
        }
    }
    return 0.0;
}

Point Domain::sample_boundary(RngStream& rng) const {
    const int d = dim();
    switch (tag_) {
        case ShapeTag::Ball: {
            Point w = sample_uniform_sphere(d, rng);
            Point p = center_;
            for (int i = 0; i < d; ++i) p[i] += radius_ * w[i];
            return p;
        }
        case ShapeTag::Annulus: {
            // pick shell proportional to surface area
            const double wi = std::pow(r_inner_, d - 1), wo = std::pow(r_outer_, d - 1);
            const double r = (rng.uniform() * (wi + wo) < wi) ? r_inner_ : r_outer_;
            Point w = sample_uniform_sphere(d, rng);
            Point p = center_;
            for (int i = 0; i < d; ++i) p[i] += r * w[i];
            return p;
        }
        case ShapeTag::Box: {
            // face chosen proportional to its area
            std::vector<double> areas(lo_.size());
            double total = 0.0;
            for (std::size_t i = 0; i < lo_.size(); ++i) {
                double a = 1.0;
                for (std::size_t j = 0; j < lo_.size(); ++j)
                    if (j != i) a *= hi_[j] - lo_[j];
                areas[i] = a;
                total += 2.0 * a;
            }
            double pick = rng.uniform() * total;
            std::size_t axis = 0;
            bool lo_side = true;
            for (std::size_t i = 0; i < areas.size(); ++i) {
                if (pick < areas[i]) { axis = i; lo_side = true; break; }
                pick -= areas[i];
                if (pick < areas[i]) { axis = i; lo_side = false; break; }
                pick -= areas[i];
            }
            Point p(lo_.size());
            for (std::size_t j = 0; j < lo_.size(); ++j)
                p[j] = lo_[j] + rng.uniform() * (hi_[j] - lo_[j]);
            p[axis] = lo_side ? lo_[axis] : hi_[axis];
            return p;
        }
    }
    return center_;
}

BoundaryFunction BoundaryFunction::constant(double c) {
    BoundaryFunction f;
    f.kind_ = BoundaryKind::Constant;
    f.value_ = c;
    return f;
}

BoundaryFunction BoundaryFunction::coordinate(int axis) {
    if (axis < 0) throw std::invalid_argument("coordinate: axis must be >= 0");
    BoundaryFunction f;
    f.kind_ = BoundaryKind::Coordinate;
    f.axis_ = axis;
    return f;
}

BoundaryFunction BoundaryFunction::affine(double offset, Point coeffs) {
    BoundaryFunction f;
    f.kind_ = BoundaryKind::Affine;
    f.offset_ = offset;
    f.coeffs_ = std::move(coeffs);
    return f;
}

BoundaryFunction BoundaryFunction::exp_drift(int axis, double rate) {
    if (axis < 0) throw std::invalid_argument("exp_drift: axis must be >= 0");
    BoundaryFunction f;
    f.kind_ = BoundaryKind::ExpDrift;
    f.axis_ = axis;
    f.rate_ = rate;
    return f;
}

BoundaryFunction BoundaryFunction::sum(std::vector<std::pair<double, BoundaryFunction>> terms) {
    BoundaryFunction f;
    f.kind_ = BoundaryKind::Sum;
    f.terms_ = std::move(terms);
    return f;
}

double BoundaryFunction::operator()(const Point& p) const {
    switch (kind_) {
        case BoundaryKind::Constant:
            return value_;
        case BoundaryKind::Coordinate:
            if (axis_ >= static_cast<int>(p.size())) throw std::invalid_argument("coordinate: axis out of range");
            return p[axis_];
        case BoundaryKind::Affine: {
            if (coeffs_.size() != p.size()) throw std::invalid_argument("affine: dimension mismatch");
            return offset_ + dot(coeffs_, p);
        }
        case BoundaryKind::ExpDrift:
            if (axis_ >= static_cast<int>(p.size())) throw std::invalid_argument("exp_drift: axis out of range");
            return std::exp(-rate_ * p[axis_]);
        case BoundaryKind::Sum: {
            double s = 0.0;
            for (const auto& [w, g] : terms_) s += w * g(p);
            return s;
        }
    }
    throw std::logic_error("BoundaryFunction: unknown tag");
}

std::pair<double, double> boundary_range(const Domain& dom, const BoundaryFunction& f,
                                         int n_samples, std::uint64_t seed) {
    RngStream rng(seed, 0);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < n_samples; ++i) {
        const double v = f(dom.sample_boundary(rng));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

}  // namespace wos
