#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace srmatch {

/* rejected input or misused operation; the cli maps this to exit code 2 */
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

/* a configured cap or search budget ran out; the cli maps this to exit code 3 */
class BudgetError : public std::runtime_error {
public:
  BudgetError(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

}  // namespace srmatch
