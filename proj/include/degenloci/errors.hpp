#pragma once

#include <stdexcept>
#include <string>

namespace degenloci {

// A draw or enumeration would exceed the configured budget.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

// The instance violates a genericity assumption (corank >= 2, dim W = 0, a
// witness failing its membership check).
class DegenerateInstance : public std::runtime_error {
 public:
  explicit DegenerateInstance(const std::string& what) : std::runtime_error(what) {}
};

// Two points on S span a special line: dim pi < 2 or dim <alpha_v, alpha_w> < 2.
class DegeneratePair : public std::runtime_error {
 public:
  explicit DegeneratePair(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace degenloci
