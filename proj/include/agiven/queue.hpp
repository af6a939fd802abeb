#pragma once

#include <cstdint>
#include <vector>

namespace agiven::sim {

// Single-server FIFO queue driven by (arrival time, service demand) pairs in
// arrival order. Tracks per-customer sojourns plus an event-driven integral
// of the number in system, so Little's law can be checked against two
// independently accumulated quantities.
class FifoQueue {
public:
    // Feed customers in non-decreasing arrival order. Returns the sojourn.
    double process(double arrival_time, double service_time);

    uint64_t customers() const { return count_; }
    double busy_time() const { return busy_time_; }
    double last_departure() const { return last_departure_; }
    // Time-average number in system over [first arrival, last departure].
    double mean_in_system() const;
    double observed_span() const;

private:
    double server_free_at_ = 0.0;
    double busy_time_ = 0.0;
    double area_ = 0.0;           // integral of N(t) dt up to integrated_to_
    double integrated_to_ = 0.0;
    double first_arrival_ = 0.0;
    double last_departure_ = 0.0;
    uint64_t count_ = 0;
    std::vector<double> in_system_;  // departure times, sorted; head_ marks retired ones
    size_t head_ = 0;
};

// Batch-means standard error over a stream of observations.
class BatchMeans {
public:
    explicit BatchMeans(int batches = 20) : batches_(batches) {}
    void add(double v) { values_.push_back(v); }
    uint64_t count() const { return values_.size(); }
    double mean() const;
    double std_error() const;

private:
    int batches_;
    std::vector<double> values_;
};

}  // namespace agiven::sim
