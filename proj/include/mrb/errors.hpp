#pragma once

#include <stdexcept>
#include <string>

namespace mrb {

// Root of the library's error hierarchy. Everything thrown on a contract
// violation derives from this, so callers can catch one type.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands built over different base instances were combined.
struct instance_mismatch_error : error {
    using error::error;
};

// Coproduct/counit requested on a base that carries no coalgebra
// structure (the Laurent base is algebra-only).
struct unsupported_coalgebra_error : error {
    using error::error;
};

// Degree of the zero element, or of an element whose base has no
// filtration degree.
struct undefined_degree_error : error {
    using error::error;
};

// A tensor word with no slots.
struct malformed_word_error : error {
    using error::error;
};

// Operator weight does not match the algebra context it is used with.
struct weight_mismatch_error : error {
    using error::error;
};

// operator_to_splitting applied to an operator that is not an involution.
struct not_involutive_error : error {
    using error::error;
};

// Malformed input to an operator-toolbox routine (failed precheck,
// out-of-range enumeration parameters, bad JSON table, ...).
struct invalid_input_error : error {
    using error::error;
};

// Expression is grammatically valid but ill-typed for the session
// (e.g. counit of a tensor-square value, Hopf op without lambda-mode).
struct type_error : error {
    using error::error;
};

// Syntax error with 1-based source location.
struct parse_error : error {
    int line;
    int column;
    parse_error(std::string msg, int line_, int column_)
        : error(std::move(msg)), line(line_), column(column_) {}
};

} // namespace mrb
