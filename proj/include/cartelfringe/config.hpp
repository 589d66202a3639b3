#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "cartelfringe/params.hpp"

namespace cfm {

struct ConfigError : std::runtime_error {
    int line;  // 1-based line number of the offending input, 0 if n/a
    ConfigError(const std::string& msg, int line_no)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg
                                         : msg),
          line(line_no) {}
};

// Reads a `key = value` configuration.  Recognized keys: alpha, beta, b, k_c,
// k_f, r, s0_c, s0_f, m_f, m_c.  Missing keys keep their benchmark defaults;
// unknown or duplicate keys and malformed lines raise ConfigError with the
// line number.  Blank lines and lines starting with '#' are ignored.
MarketParams parse_config(std::istream& in);

// Convenience wrapper: opens `path` and parses it.  A missing file raises
// ConfigError.
MarketParams load_config(const std::string& path);

}  // namespace cfm
