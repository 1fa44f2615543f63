#pragma once

#include <stdexcept>
#include <string>

namespace growthfn {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands that do not share a variable table, orders applied to foreign tables.
struct StructuralError : Error {
    using Error::Error;
};

// Mathematically invalid input: zero divisor, zero ideal, misaligned elimination blocks.
struct DomainError : Error {
    using Error::Error;
};

// Text input rejected; carries a 1-based position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " + std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

// Grammar failed validation; message lists the offending diagnostics.
struct GrammarError : Error {
    using Error::Error;
};

// Solving or series extraction failed (nonlinear input on the linear path, singular
// systems, degenerate branches, non-power-series expansion points).
struct SolveError : Error {
    using Error::Error;
};

// Cooperative cancellation was requested mid computation.
struct CancelledError : Error {
    using Error::Error;
};

}  // namespace growthfn
