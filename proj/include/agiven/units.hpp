#pragma once

#include <string>

namespace agiven::units {

// Canonical internal units are bits, seconds, and bits/second.
// Suffixes are decimal SI: 1 Gb = 1e9 bits, 1 Mbps = 1e6 bits/s.

constexpr double kKilo = 1e3;
constexpr double kMega = 1e6;
constexpr double kGiga = 1e9;

// "5 Gb", "200Mb", "1e9" -> bits. Rejects rate suffixes.
double parse_bits(const std::string& text, const std::string& field);

// "20 Mbps", "10 Gbps", "2e7" -> bits/second. Rejects size suffixes.
double parse_rate(const std::string& text, const std::string& field);

// "1 s", "250 ms", "0.5" -> seconds.
double parse_seconds(const std::string& text, const std::string& field);

// Plain number, no unit suffix allowed.
double parse_number(const std::string& text, const std::string& field);
long long parse_integer(const std::string& text, const std::string& field);
bool parse_bool(const std::string& text, const std::string& field);

// Shortest round-trip decimal form (deterministic across runs/platforms).
std::string format_double(double v);

}  // namespace agiven::units
