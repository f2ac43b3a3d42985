#pragma once

#include <stdexcept>
#include <string>

namespace cayleygs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generator index outside 1..k+1.
struct InvalidGeneratorError : Error {
    using Error::Error;
};

// Words (or other inputs) built over incompatible parameters.
struct ParameterError : Error {
    using Error::Error;
};

// Spin value outside 1..q.
struct InvalidSpinError : Error {
    using Error::Error;
};

// A configuration's support does not cover the requested volume.
struct MissingVertexError : Error {
    explicit MissingVertexError(const std::string& word_text)
        : Error("configuration has no value for vertex '" + word_text + "'"), word(word_text) {}
    std::string word;
};

// Parameters outside the literal A-set construction regime k = 2^(m-1) - 1.
struct RegimeError : Error {
    using Error::Error;
};

// More generator vectors requested than distinct nonzero m-bit vectors exist.
struct PigeonholeError : Error {
    using Error::Error;
};

// A search would enumerate more states than the configured budget allows.
struct BudgetExceededError : Error {
    BudgetExceededError(const std::string& required_states, uint64_t budget_)
        : Error("search space of " + required_states + " states exceeds budget of " +
                std::to_string(budget_)),
          required(required_states), budget(budget_) {}
    std::string required;  // decimal string; may exceed 64 bits
    uint64_t budget;
};

// Width-checked integer arithmetic overflowed.
struct ArithmeticOverflowError : Error {
    using Error::Error;
};

}  // namespace cayleygs
