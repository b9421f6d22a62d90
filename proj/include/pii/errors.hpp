#pragma once

#include <stdexcept>
#include <string>

namespace pii {

// Base for all numerical failures raised by this library.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument sits on (or within tolerance of) a branch-cut ray of the
// requested argument window.
struct branch_cut_error : numeric_error {
    using numeric_error::numeric_error;
};

// Input where the operation is genuinely singular (z = 0 with a
// non-positive exponent, vanishing normalisation, ...).
struct singular_input_error : numeric_error {
    using numeric_error::numeric_error;
};

// Result would exceed the representable exponent range.
struct range_overflow_error : numeric_error {
    using numeric_error::numeric_error;
};

// Input outside the supported domain of an operation.
struct domain_error : numeric_error {
    using numeric_error::numeric_error;
};

// Evaluation too close to a pole of the target function, or a pole of a
// Painleve trajectory detected during integration.
struct pole_error : numeric_error {
    double where = 0.0;
    explicit pole_error(const std::string& msg, double x = 0.0)
        : numeric_error(msg), where(x) {}
};

// A series or iteration failed to converge within its budget.
struct convergence_error : numeric_error {
    using numeric_error::numeric_error;
};

// A trajectory does not cover the requested evaluation range.
struct coverage_error : numeric_error {
    using numeric_error::numeric_error;
};

// Parameters outside the family supported by the requested operation
// (Hastings-McLeod boundary data, unclassified parameters, ...).
struct unsupported_family_error : numeric_error {
    using numeric_error::numeric_error;
};

}  // namespace pii
