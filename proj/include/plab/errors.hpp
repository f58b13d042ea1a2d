#ifndef PLAB_ERRORS_HPP
#define PLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plab {

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : MathError {
    DivisionByZero() : MathError("division by zero") {}
    explicit DivisionByZero(const std::string& what) : MathError(what) {}
};

struct FieldMismatch : MathError {
    FieldMismatch() : MathError("elements belong to different fields") {}
    explicit FieldMismatch(const std::string& what) : MathError(what) {}
};

struct PoleError : MathError {
    explicit PoleError(const std::string& what) : MathError(what) {}
};

struct ConstantInput : MathError {
    explicit ConstantInput(const std::string& what) : MathError(what) {}
};

struct BudgetExceeded : MathError {
    // degree of the smallest unexamined factor (or cofactor) that broke the budget
    long offending_degree;
    long budget;
    BudgetExceeded(long deg, long bud)
        : MathError("residue-degree budget exceeded: factor of degree " + std::to_string(deg) +
                    " > budget " + std::to_string(bud)),
          offending_degree(deg), budget(bud) {}
};

struct InconsistentShape : MathError {
    explicit InconsistentShape(const std::string& what) : MathError(what) {}
};

struct ParseError : MathError {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : MathError(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace plab

#endif
