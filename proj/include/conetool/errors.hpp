#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace conetool {

/// Contract-violating input: dimension mismatches, invalid matrices, bad scenario data.
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Caller supplied a V/H pair that does not describe the same point set.
class RepresentationMismatch : public InputError {
  public:
    explicit RepresentationMismatch(const std::string& what) : InputError(what) {}
};

/// An enumeration exceeded its configured budget (ball size, sampler rejections).
class BudgetError : public std::runtime_error {
  public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Two chamber cones whose interiors meet but which are not equal.
/// Signals inconsistent scenario data, not a code bug.
class DichotomyViolation : public std::runtime_error {
  public:
    explicit DichotomyViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario file failed validation; carries every error found, not just the first.
class ScenarioError : public InputError {
  public:
    ScenarioError(const std::string& what, std::vector<std::string> errors)
        : InputError(what), errors_(std::move(errors)) {}
    const std::vector<std::string>& errors() const { return errors_; }

  private:
    std::vector<std::string> errors_;
};

} // namespace conetool
