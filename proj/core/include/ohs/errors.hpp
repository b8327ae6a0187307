#ifndef OHS_ERRORS_HPP
#define OHS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ohs {

// Config-file problems carry the offending line (0 = not line-specific).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string msg, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Repeated positivity rejections exhausted the halving budget.
class StiffnessError : public std::runtime_error {
 public:
  StiffnessError(std::string msg, std::size_t component)
      : std::runtime_error(std::move(msg)), component_(component) {}
  std::size_t component() const { return component_; }  // 1-based bin index

 private:
  std::size_t component_;
};

// Non-finite values or step-size underflow during integration.
class NumericError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ohs

#endif  // OHS_ERRORS_HPP
