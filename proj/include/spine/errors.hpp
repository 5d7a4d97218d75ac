#pragma once

#include <stdexcept>

namespace spine {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoopArcError : Error { using Error::Error; };
struct DuplicateArcError : Error { using Error::Error; };
struct VertexOutOfRangeError : Error { using Error::Error; };
struct OverlapError : Error { using Error::Error; };
struct BudgetExceededError : Error { using Error::Error; };
struct NotSemicompleteError : Error { using Error::Error; };
struct EmptyXError : Error { using Error::Error; };
struct InvalidWitnessError : Error { using Error::Error; };
struct InvalidViolationError : Error { using Error::Error; };
struct NotZigzagFreeError : Error { using Error::Error; };
struct XSmallerThanKError : Error { using Error::Error; };
struct InvalidParamsError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace spine
