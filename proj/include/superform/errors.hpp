#pragma once

#include <stdexcept>
#include <string>

namespace superform {

/// Precondition violation: mismatched sizes/degrees, points outside a chart
/// box, invalid index ranges.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The value cannot support the requested operation (e.g. differentiating a
/// C^0 numeric field with no derivative route, exact comparison of numeric
/// coefficients).
class CapabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text input rejected by a literal parser; carries the byte offset of the
/// offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + msg),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Adaptive quadrature ran out of panel budget; the best estimate and its
/// error bound are preserved.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& msg, double best_estimate, double error_bound)
        : std::runtime_error(msg), best_estimate_(best_estimate), error_bound_(error_bound) {}
    double best_estimate() const { return best_estimate_; }
    double error_bound() const { return error_bound_; }

private:
    double best_estimate_;
    double error_bound_;
};

} // namespace superform
