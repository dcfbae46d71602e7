#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlstm {

/// Invalid configuration values (qubit counts, fractions, rates, ...).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

/// API misuse: shape mismatches, out-of-range indices, bad call sequences.
class UsageError : public std::runtime_error {
  public:
    explicit UsageError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Malformed text input. `position` is a 0-based character offset (or a
/// 1-based line number for line-oriented formats; the message says which).
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &msg, std::size_t position)
        : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// Filesystem-level failures.
class IoError : public std::runtime_error {
  public:
    explicit IoError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace qlstm
