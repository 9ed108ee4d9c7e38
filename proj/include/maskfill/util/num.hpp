#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

namespace maskfill::util {

// Shortest decimal form that parses back to the same double.
inline std::string fmt_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) throw std::runtime_error("fmt_double failed");
    return std::string(buf, ptr);
}

inline double parse_double(std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::runtime_error("not a number: '" + std::string(s) + "'");
    }
    return v;
}

} // namespace maskfill::util
