#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace wos {

using Point = std::vector<double>;

inline double dot(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Point& a) { return dot(a, a); }

inline double norm(const Point& a) { return std::sqrt(norm2(a)); }

inline double dist(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

inline Point operator+(Point a, const Point& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline Point operator-(Point a, const Point& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline Point operator*(double c, Point a) {
    for (double& x : a) x *= c;
    return a;
}

inline bool all_finite(const Point& a) {
    for (double x : a)
        if (!std::isfinite(x)) return false;
    return true;
}

}  // namespace wos
