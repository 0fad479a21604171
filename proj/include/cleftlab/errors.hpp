#pragma once

#include <stdexcept>
#include <string>

namespace cleftlab {

/// Malformed input file or request (CLI exit code 2).
struct schema_error : std::runtime_error {
    explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

/// Mathematically inconsistent data: a constructor or validator refused it (CLI exit code 3).
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

/// A sweep or enumeration exceeded its configured budget; the answer is unknown, not "no".
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Indecomposability (or similar) could not be certified after exhausting all strategies.
struct certification_error : std::runtime_error {
    explicit certification_error(const std::string& what) : std::runtime_error(what) {}
};

struct dimension_mismatch : std::invalid_argument {
    explicit dimension_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace cleftlab
