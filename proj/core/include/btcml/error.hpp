#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace btcml {

/// Base error for every failure surfaced by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file (CSV, config); message names the offending location.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration or hyperparameter value.
class ConfigError : public Error {
 public:
  using Error::Error;
};

namespace detail {

template <typename... Args>
std::string concat(Args&&... args) {
  std::ostringstream os;
  (os << ... << std::forward<Args>(args));
  return os.str();
}

}  // namespace detail

template <typename E = Error, typename... Args>
[[noreturn]] void fail(Args&&... args) {
  throw E(detail::concat(std::forward<Args>(args)...));
}

}  // namespace btcml
