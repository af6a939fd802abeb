#include "agiven/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "agiven/errors.hpp"

namespace agiven::numerics {

namespace {

// Lanczos g=7, n=9 (Godfrey coefficients).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;  // ln(2*pi)/2

// Lower tail by power series: P(s,x) = x^s e^-x / Gamma(s+1) * sum_n x^n / prod(s+1..s+n).
double lower_series(double s, double x, double log_prefix_s) {
    double sum = 1.0;
    double term = 1.0;
    double a = s;
    for (int n = 0; n < 1000; ++n) {
        a += 1.0;
        term *= x / a;
        sum += term;
        if (term < sum * 1e-16) break;
    }
    // log_prefix_s = s*ln x - x - lnGamma(s); divide by s for Gamma(s+1).
    return std::exp(log_prefix_s) / s * sum;
}

// Upper tail by modified Lentz continued fraction (Q(s,x) for x >= s+1).
double upper_cf(double s, double x, double log_prefix_s) {
    constexpr double kTiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(log_prefix_s) * h;
}

}  // namespace

double ln_gamma(double s) {
    if (!(s > 0.0)) throw ConfigError("ln_gamma: argument must be positive");
    double z = s - 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + i);
    double t = z + kLanczosG + 0.5;
    return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

RegularizedGammaResult reg_gamma(double s, double x) {
    if (!(s > 0.0) || !std::isfinite(s)) throw ConfigError("reg_gamma: s must be positive and finite");
    if (std::isnan(x) || x < 0.0) throw ConfigError("reg_gamma: x must be non-negative");
    if (x == 0.0) return {0.0, 1.0};
    if (std::isinf(x)) return {1.0, 0.0};
    double log_prefix = s * std::log(x) - x - ln_gamma(s);
    if (x < s + 1.0) {
        double p = lower_series(s, x, log_prefix);
        if (p > 1.0) p = 1.0;
        return {p, 1.0 - p};
    }
    double q = upper_cf(s, x, log_prefix);
    if (q > 1.0) q = 1.0;
    return {1.0 - q, q};
}

double reg_lower_gamma(double s, double x) { return reg_gamma(s, x).p; }
double reg_upper_gamma(double s, double x) { return reg_gamma(s, x).q; }

double erlang_pdf(int k, double mu, double t) {
    if (k < 1) throw ConfigError("erlang_pdf: shape must be >= 1");
    if (!(mu > 0.0)) throw ConfigError("erlang_pdf: rate must be positive");
    if (std::isnan(t) || t < 0.0) throw ConfigError("erlang_pdf: t must be non-negative");
    if (t == 0.0) return k == 1 ? mu : 0.0;
    return std::exp(k * std::log(mu) + (k - 1) * std::log(t) - mu * t - ln_gamma(k));
}

double erlang_cdf(int k, double mu, double t) {
    if (k < 1) throw ConfigError("erlang_cdf: shape must be >= 1");
    if (!(mu > 0.0)) throw ConfigError("erlang_cdf: rate must be positive");
    if (std::isnan(t) || t < 0.0) throw ConfigError("erlang_cdf: t must be non-negative");
    return reg_lower_gamma(k, mu * t);
}

}  // namespace agiven::numerics
