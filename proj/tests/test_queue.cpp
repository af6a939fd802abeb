#include <doctest.h>

#include <cmath>

#include "agiven/queue.hpp"
#include "agiven/rng.hpp"

using namespace agiven::sim;

TEST_CASE("fifo queue: deterministic hand-traced schedule") {
    FifoQueue q;
    CHECK(q.process(0.0, 2.0) == doctest::Approx(2.0));   // departs at 2
    CHECK(q.process(1.0, 2.0) == doctest::Approx(3.0));   // waits 1, departs at 4
    CHECK(q.process(10.0, 1.0) == doctest::Approx(1.0));  // idle gap, departs at 11
    CHECK(q.busy_time() == doctest::Approx(5.0));
    CHECK(q.customers() == 3);
    CHECK(q.last_departure() == doctest::Approx(11.0));
    // Area: [0,1]:1, [1,2]:2, [2,4]:1, [4,10]:0, [10,11]:1 over span 11.
    CHECK(q.mean_in_system() == doctest::Approx((1.0 + 2.0 + 2.0 + 0.0 + 1.0) / 11.0));
}

TEST_CASE("little's law holds on an M/D/1 run via independent area accounting") {
    RandomStream arrivals(31337, 0);
    FifoQueue q;
    const int n = 200000;
    double t = 0.0, sum_sojourn = 0.0;
    for (int i = 0; i < n; ++i) {
        t += arrivals.exponential(0.8);
        sum_sojourn += q.process(t, 1.0);  // load 0.8
    }
    double w = sum_sojourn / n;
    double lambda_hat = static_cast<double>(q.customers()) / q.observed_span();
    double lhs = q.mean_in_system();
    double rhs = lambda_hat * w;
    CHECK(std::fabs(lhs - rhs) / rhs < 0.02);
    // M/D/1 mean sojourn: h (1 + load/(2(1-load))).
    CHECK(std::fabs(w - 3.0) / 3.0 < 0.05);
}

TEST_CASE("batch means reduce to the plain mean and a sane error bar") {
    BatchMeans bm;
    RandomStream rng(5, 9);
    const int n = 40000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        double v = rng.uniform();
        bm.add(v);
        sum += v;
    }
    CHECK(bm.mean() == doctest::Approx(sum / n).epsilon(1e-12));
    // Uniform(0,1): SE ~ sqrt(1/12/n) for i.i.d. draws.
    double want = std::sqrt(1.0 / 12.0 / n);
    CHECK(bm.std_error() > want * 0.5);
    CHECK(bm.std_error() < want * 2.0);
}
