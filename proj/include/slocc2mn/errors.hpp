#pragma once

#include <stdexcept>
#include <string>

namespace slocc {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : std::runtime_error {
    SingularMatrix() : std::runtime_error("matrix is singular") {}
};

struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& what) : std::runtime_error("shape mismatch: " + what) {}
};

// A polynomial factor of the given degree has no Gaussian-rational root.
// Callers either reject the input or treat it as out of exact scope.
struct IrreducibleRemainder : std::runtime_error {
    int degree;
    explicit IrreducibleRemainder(int deg)
        : std::runtime_error("irreducible remainder of degree " + std::to_string(deg)), degree(deg) {}
};

struct DegenerateConfiguration : std::runtime_error {
    DegenerateConfiguration() : std::runtime_error("cross ratio of coincident points") {}
};

struct InvalidFamily : std::runtime_error {
    explicit InvalidFamily(const std::string& what) : std::runtime_error("invalid eigenvalue family: " + what) {}
};

struct HNotApplicable : std::runtime_error {
    HNotApplicable() : std::runtime_error("H generator requires N = m+1") {}
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct NotTrueTripartite : std::runtime_error {
    NotTrueTripartite() : std::runtime_error("state is not true-tripartite entangled") {}
};

} // namespace slocc
