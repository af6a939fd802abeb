#include "agiven/units.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "agiven/errors.hpp"

namespace agiven::units {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

// Splits "20 Mbps" into numeric part and suffix (either may be empty).
void split_value(const std::string& text, std::string& num, std::string& suffix) {
    std::string t = trim(text);
    size_t i = 0;
    while (i < t.size() &&
           (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '.' || t[i] == '-' ||
            t[i] == '+' ||
            ((t[i] == 'e' || t[i] == 'E') && i + 1 < t.size() &&
             (std::isdigit(static_cast<unsigned char>(t[i + 1])) || t[i + 1] == '-' ||
              t[i + 1] == '+')))) {
        if (t[i] == 'e' || t[i] == 'E') ++i;  // consume exponent sign with the next loop pass
        ++i;
    }
    num = trim(t.substr(0, i));
    suffix = trim(t.substr(i));
}

double parse_numeric(const std::string& num, const std::string& field) {
    if (num.empty()) throw ConfigError(field + ": missing numeric value");
    char* end = nullptr;
    double v = std::strtod(num.c_str(), &end);
    if (end != num.c_str() + num.size() || !std::isfinite(v))
        throw ConfigError(field + ": cannot parse number '" + num + "'");
    return v;
}

double si_scale(const std::string& prefix, const std::string& field) {
    if (prefix.empty()) return 1.0;
    if (prefix == "K" || prefix == "k") return kKilo;
    if (prefix == "M") return kMega;
    if (prefix == "G") return kGiga;
    throw ConfigError(field + ": unknown unit prefix '" + prefix + "'");
}

}  // namespace

double parse_bits(const std::string& text, const std::string& field) {
    std::string num, suffix;
    split_value(text, num, suffix);
    double v = parse_numeric(num, field);
    if (suffix.empty()) return v;
    if (suffix.size() >= 3 && suffix.substr(suffix.size() - 3) == "bps")
        throw ConfigError(field + ": rate unit '" + suffix + "' given for a size field (use b/Kb/Mb/Gb)");
    if (suffix.back() != 'b')
        throw ConfigError(field + ": unknown size unit '" + suffix + "'");
    return v * si_scale(suffix.substr(0, suffix.size() - 1), field);
}

double parse_rate(const std::string& text, const std::string& field) {
    std::string num, suffix;
    split_value(text, num, suffix);
    double v = parse_numeric(num, field);
    if (suffix.empty()) return v;
    if (suffix.size() < 3 || suffix.substr(suffix.size() - 3) != "bps")
        throw ConfigError(field + ": expected a rate unit (bps/Kbps/Mbps/Gbps), got '" + suffix + "'");
    return v * si_scale(suffix.substr(0, suffix.size() - 3), field);
}

double parse_seconds(const std::string& text, const std::string& field) {
    std::string num, suffix;
    split_value(text, num, suffix);
    double v = parse_numeric(num, field);
    if (suffix.empty() || suffix == "s") return v;
    if (suffix == "ms") return v * 1e-3;
    throw ConfigError(field + ": unknown time unit '" + suffix + "'");
}

double parse_number(const std::string& text, const std::string& field) {
    std::string num, suffix;
    split_value(text, num, suffix);
    if (!suffix.empty()) throw ConfigError(field + ": unexpected unit '" + suffix + "'");
    return parse_numeric(num, field);
}

long long parse_integer(const std::string& text, const std::string& field) {
    double v = parse_number(text, field);
    long long i = static_cast<long long>(std::llround(v));
    if (std::abs(v - static_cast<double>(i)) > 1e-9)
        throw ConfigError(field + ": expected an integer, got '" + text + "'");
    return i;
}

bool parse_bool(const std::string& text, const std::string& field) {
    std::string t = trim(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
    if (t == "false" || t == "0" || t == "no" || t == "off") return false;
    throw ConfigError(field + ": expected a boolean, got '" + text + "'");
}

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace agiven::units
