#include "agiven/queue.hpp"

#include <algorithm>
#include <cmath>

namespace agiven::sim {

double FifoQueue::process(double arrival_time, double service_time) {
    if (count_ == 0) {
        first_arrival_ = arrival_time;
        integrated_to_ = arrival_time;
    }

    // Integrate N(t) up to this arrival, stepping down at departures that
    // happened in between. FIFO departures are produced in sorted order.
    while (head_ < in_system_.size() && in_system_[head_] <= arrival_time) {
        double dep = in_system_[head_];
        area_ += static_cast<double>(in_system_.size() - head_) * (dep - integrated_to_);
        integrated_to_ = dep;
        ++head_;
    }
    area_ += static_cast<double>(in_system_.size() - head_) * (arrival_time - integrated_to_);
    integrated_to_ = arrival_time;

    double start = std::max(arrival_time, server_free_at_);
    double departure = start + service_time;
    server_free_at_ = departure;
    busy_time_ += service_time;
    last_departure_ = departure;
    in_system_.push_back(departure);
    ++count_;

    if (head_ > 4096 && head_ * 2 > in_system_.size()) {
        in_system_.erase(in_system_.begin(), in_system_.begin() + head_);
        head_ = 0;
    }
    return departure - arrival_time;
}

double FifoQueue::observed_span() const { return last_departure_ - first_arrival_; }

double FifoQueue::mean_in_system() const {
    double span = observed_span();
    if (span <= 0.0) return 0.0;
    // Finish the integral over the still-present customers.
    double area = area_;
    double t = integrated_to_;
    for (size_t i = head_; i < in_system_.size(); ++i) {
        area += static_cast<double>(in_system_.size() - i) * (in_system_[i] - t);
        t = in_system_[i];
    }
    return area / span;
}

double BatchMeans::mean() const {
    if (values_.empty()) return 0.0;
    double s = 0.0;
    for (double v : values_) s += v;
    return s / static_cast<double>(values_.size());
}

double BatchMeans::std_error() const {
    size_t n = values_.size();
    int b = batches_;
    if (n < static_cast<size_t>(2 * b)) return 0.0;
    size_t per = n / b;
    double grand = 0.0;
    std::vector<double> bm(b, 0.0);
    for (int i = 0; i < b; ++i) {
        double s = 0.0;
        for (size_t k = i * per; k < (i + 1) * per; ++k) s += values_[k];
        bm[i] = s / static_cast<double>(per);
        grand += bm[i];
    }
    grand /= b;
    double var = 0.0;
    for (int i = 0; i < b; ++i) var += (bm[i] - grand) * (bm[i] - grand);
    var /= (b - 1);
    return std::sqrt(var / b);
}

}  // namespace agiven::sim
