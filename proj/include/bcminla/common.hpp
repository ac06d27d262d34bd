#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bcminla {

using vertex_id = std::uint32_t;

/// Exact unsigned integer wide enough for every closed-form quantity up to
/// dimension 63 (the largest, 2^62 (2^63 - 1), needs 125 bits).
using wide_uint = unsigned __int128;
using wide_int = __int128;

/// Largest dimension a graph is materialized at unless the caller raises it.
inline constexpr int kDefaultMaxDimension = 25;

/// Largest dimension the closed forms accept.
inline constexpr int kMaxClosedFormDimension = 63;

/// Thrown when an operation would exceed a size or time limit. Distinct from
/// std::invalid_argument so callers can tell bad input from a big one.
class limit_error : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr std::uint64_t pow2(int k) { return std::uint64_t{1} << k; }

inline std::string to_string(wide_uint value) {
    if (value == 0) return "0";
    std::string digits;
    while (value != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

inline wide_uint parse_wide(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer");
    constexpr wide_uint max = ~wide_uint{0};
    wide_uint value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("not a decimal integer: " + std::string(text));
        }
        auto digit = static_cast<unsigned>(c - '0');
        if (value > (max - digit) / 10) {
            throw std::out_of_range("integer too large: " + std::string(text));
        }
        value = value * 10 + digit;
    }
    return value;
}

inline void check_dimension(int n, int max_dimension, const char* what) {
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + ": dimension must be >= 1, got " +
                                    std::to_string(n));
    }
    if (n > max_dimension) {
        throw limit_error(std::string(what) + ": dimension " + std::to_string(n) +
                          " exceeds limit " + std::to_string(max_dimension));
    }
}

}  // namespace bcminla
