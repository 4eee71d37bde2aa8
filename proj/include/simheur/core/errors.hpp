#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace simheur {

/// Raised when a charge would push the budget clock past its total.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A schedule that is not a partition of the instance's jobs.
class InvalidSchedule : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonFiniteSample : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Structured-text input error. `line` is 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what)
      : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string{}) + ": " +
                           what),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

class TooLargeToEnumerate : public std::runtime_error {
 public:
  explicit TooLargeToEnumerate(unsigned long long count)
      : std::runtime_error("instance too large to enumerate: " + std::to_string(count) +
                           " schedules"),
        count_(count) {}

  unsigned long long count() const noexcept { return count_; }

 private:
  unsigned long long count_;
};

}  // namespace simheur
