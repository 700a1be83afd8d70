#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riffle {

/// A categorical value reached an operation that needs a number.
class TypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid argument value (negative weights, missing labels, bad names).
class ValueError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arithmetic domain violation: division by zero, fractional power of a
/// negative base.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An estimator was used outside its contract (wrong step kind, a third
/// label for a binary model, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed input data. Carries the 1-based line of the offending record.
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A stream failed while producing the sample at `index` (0-based).
class StreamError : public std::runtime_error {
 public:
  StreamError(std::size_t index, const std::string& what)
      : std::runtime_error("sample " + std::to_string(index) + ": " + what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace riffle
