// Copyright 2026 The tlsynth Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <charconv>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace tlsynth {

/// Malformed text input (matrix, order or circuit files).
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal form that reads back to the same double.
[[nodiscard]] inline std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

[[nodiscard]] inline std::string
format_complex(std::complex<double> z) {
    return format_double(z.real()) + ',' + format_double(z.imag());
}

[[nodiscard]] inline double parse_double(std::string_view text) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const auto res =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw ParseError("invalid number '" + std::string(text) + "'");
    }
    return value;
}

/// Parses "<re>,<im>".
[[nodiscard]] inline std::complex<double>
parse_complex(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) {
        throw ParseError("invalid complex '" + std::string(text) +
                         "', expected <re>,<im>");
    }
    return {parse_double(text.substr(0, comma)),
            parse_double(text.substr(comma + 1))};
}

[[nodiscard]] inline std::size_t parse_uint(std::string_view text,
                                            std::string_view what) {
    std::size_t value = 0;
    const auto res =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || res.ec != std::errc{} ||
        res.ptr != text.data() + text.size()) {
        throw ParseError("invalid " + std::string(what) + " '" +
                         std::string(text) + "'");
    }
    return value;
}

} // namespace tlsynth
