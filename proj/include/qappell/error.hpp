#pragma once

#include <stdexcept>
#include <string>

namespace qappell {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class division_by_zero : public error {
 public:
  using error::error;
};

/// A rational function was evaluated where its denominator vanishes.
class pole_error : public error {
 public:
  pole_error(std::string what, std::string denominator)
      : error(std::move(what)), denominator_(std::move(denominator)) {}

  const std::string& denominator() const noexcept { return denominator_; }

 private:
  std::string denominator_;
};

class order_mismatch : public error {
 public:
  using error::error;
};

class range_error : public error {
 public:
  using error::error;
};

/// Series division by a series that is zero up to its truncation order.
class zero_divisor : public error {
 public:
  using error::error;
};

/// Dividend has a nonzero coefficient below the divisor's leading power of t.
class non_cancellable_zero : public error {
 public:
  using error::error;
};

/// Internal invariant violated (e.g. an exact division left a remainder).
class arithmetic_error : public error {
 public:
  using error::error;
};

}  // namespace qappell
