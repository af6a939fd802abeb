#pragma once

#include <cstdint>

namespace agiven::numerics {

// Both tails of the regularized incomplete gamma function.
// p = gamma(s,x)/Gamma(s) (lower), q = 1 - p (upper).
struct RegularizedGammaResult {
    double p;
    double q;
};

// Natural log of Gamma(s), s > 0. Lanczos approximation, ~1e-14 relative.
double ln_gamma(double s);

// Regularized incomplete gamma, s > 0, x >= 0.
// Lower series for x < s+1, Lentz continued fraction on the upper tail
// otherwise, both assembled in log space so s ~ 100 does not overflow.
RegularizedGammaResult reg_gamma(double s, double x);
double reg_lower_gamma(double s, double x);
double reg_upper_gamma(double s, double x);

// Erlang(k, mu): sum of k exponentials of rate mu.
double erlang_pdf(int k, double mu, double t);
double erlang_cdf(int k, double mu, double t);

// Sum-of-exponentials sampler; draw() must return uniforms in (0,1).
template <typename Rng>
double erlang_sample(int k, double mu, Rng& rng) {
    double log_sum = 0.0;
    for (int i = 0; i < k; ++i) log_sum += rng.exponential(1.0);
    return log_sum / mu;
}

}  // namespace agiven::numerics
