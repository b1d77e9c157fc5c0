#include "wos/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wos::sf {

namespace {

constexpr double kSeriesCutoff = 300.0;  // ascending series safe below, asymptotic sharp above

void check_order(double v) {
    if (!(v >= -0.5)) throw std::domain_error("bessel_i: order must satisfy v >= -1/2");
}

// S(a, z) = sum_k (z^2/4)^k / (k! (a)_k) with Pochhammer (a)_k, so that
// I_v(z) = (z/2)^v / Gamma(v+1) * S(v+1, z).  Converges for any z; usable in
// double arithmetic while the sum (~ e^z) stays representable.
double series_sum(double a, double z) {
    const double q = 0.25 * z * z;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 2000; ++k) {
        term *= q / (static_cast<double>(k) * (a + k - 1.0));
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

// log of the asymptotic correction A(v,z) in
// I_v(z) ~ e^z / sqrt(2 pi z) * A(v, z), truncated at the smallest term.
double log_asymptotic_correction(double v, double z) {
    const double mu = 4.0 * v * v;
    double term = 1.0, sum = 1.0, prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 60; ++k) {
        const double f = 2.0 * k - 1.0;
        term *= -(mu - f * f) / (8.0 * z * k);
        if (std::abs(term) >= prev) break;  // divergent tail reached
        prev = std::abs(term);
        sum += term;
        if (std::abs(term) < 1e-18) break;
    }
    return std::log(sum);
}

}  // namespace

double log_bessel_i(double v, double z) {
    check_order(v);
    if (!(z >= 0) || !std::isfinite(z)) throw std::domain_error("bessel_i: z must be finite and >= 0");
    if (z == 0.0) {
        if (v == 0.0) return 0.0;
        if (v > 0.0) return -std::numeric_limits<double>::infinity();
        throw std::domain_error("bessel_i: I_v(0) diverges for v < 0");
    }
    if (z <= kSeriesCutoff)
        return v * std::log(0.5 * z) - std::lgamma(v + 1.0) + std::log(series_sum(v + 1.0, z));
    return z - 0.5 * std::log(2.0 * M_PI * z) + log_asymptotic_correction(v, z);
}

double bessel_i(double v, double z) {
    check_order(v);
    if (z == 0.0) {
        if (v == 0.0) return 1.0;
        if (v > 0.0) return 0.0;
        throw std::domain_error("bessel_i: I_v(0) diverges for v < 0");
    }
    const double lg = log_bessel_i(v, z);
    if (lg > 709.0) throw std::overflow_error("bessel_i: result overflows, use log_bessel_i");
    return std::exp(lg);
}

double log_kappa(int d, double z) {
    if (d < 1) throw std::domain_error("kappa: dimension must be >= 1");
    if (!(z >= 0) || !std::isfinite(z)) throw std::domain_error("kappa: z must be finite and >= 0");
    if (z == 0.0) return 0.0;
    const double v = 0.5 * d - 1.0;
    // In the series range the (z/2)^v and Gamma factors cancel exactly:
    // kappa = 1 / S(d/2, z).
    if (z <= kSeriesCutoff) return -std::log(series_sum(0.5 * d, z));
    return v * std::log(0.5 * z) - std::lgamma(0.5 * d) - log_bessel_i(v, z);
}

double kappa(int d, double z) {
    if (d < 1) throw std::domain_error("kappa: dimension must be >= 1");
    if (!(z >= 0) || !std::isfinite(z)) throw std::domain_error("kappa: z must be finite and >= 0");
    if (z == 0.0) return 1.0;
    if (z <= kSeriesCutoff) return 1.0 / series_sum(0.5 * d, z);
    return std::exp(log_kappa(d, z));
}

double vmf_mean_resultant(int d, double kc) {
    if (kc == 0.0) return 0.0;
    const double v = 0.5 * d - 1.0;
    return std::exp(log_bessel_i(v + 1.0, kc) - log_bessel_i(v, kc));
}

}  // namespace wos::sf
