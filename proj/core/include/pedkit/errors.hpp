#pragma once

#include <stdexcept>
#include <string>

namespace pedkit {

// Bad data: invariant violations in boxes, annotations, detections.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (JSON lines, PPM headers).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration values (thresholds, strides, ranges).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pedkit
