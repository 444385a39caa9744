#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pslab {

// Raised when a requested computation exceeds its configured work budget.
class BudgetError : public std::runtime_error {
public:
    BudgetError(std::string what, std::uint64_t required, std::uint64_t budget)
        : std::runtime_error(std::move(what) + ": requires " + std::to_string(required) +
                             " elementary steps, budget is " + std::to_string(budget)),
          required_(required),
          budget_(budget) {}

    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

}  // namespace pslab
