#pragma once

namespace wos::sf {

// Modified Bessel function of the first kind I_v(z), v >= -1/2, z >= 0.
// Throws std::domain_error for v < -1/2 or z < 0, std::overflow_error when
// the result exceeds the double range (use log_bessel_i there).
double bessel_i(double v, double z);

// ln I_v(z); finite up to z ~ 1e4 and beyond.
double log_bessel_i(double v, double z);

// kappa(z) = (z/2)^{d/2-1} / (Gamma(d/2) I_{d/2-1}(z)).
// kappa(0) = 1 and 0 < kappa(z) <= 1.  Closed forms: sech z (d=1),
// z/sinh z (d=3).
double kappa(int d, double z);

double log_kappa(int d, double z);

// Mean resultant length of the von Mises-Fisher law with concentration kc:
// A_d(kc) = I_{d/2}(kc) / I_{d/2-1}(kc).
double vmf_mean_resultant(int d, double kc);

}  // namespace wos::sf
