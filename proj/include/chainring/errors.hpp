#ifndef CHAINRING_ERRORS_HPP
#define CHAINRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chainring {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotAUnit : Error {
    explicit NotAUnit(const std::string& msg) : Error(msg) {}
};
struct NonUnitLeadingCoeff : Error {
    explicit NonUnitLeadingCoeff(const std::string& msg) : Error(msg) {}
};
struct ZeroConstantTerm : Error {
    explicit ZeroConstantTerm(const std::string& msg) : Error(msg) {}
};
struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error(msg) {}
};
struct InvalidRange : Error {
    explicit InvalidRange(const std::string& msg) : Error(msg) {}
};
struct RingMismatch : Error {
    explicit RingMismatch(const std::string& msg) : Error(msg) {}
};
struct VariantMismatch : Error {
    explicit VariantMismatch(const std::string& msg) : Error(msg) {}
};
struct SpecOutOfRange : Error {
    explicit SpecOutOfRange(const std::string& msg) : Error(msg) {}
};
struct NotAnIdealForm : Error {
    explicit NotAnIdealForm(const std::string& msg) : Error(msg) {}
};
struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& msg) : Error(msg) {}
};
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};
struct BoundExceeded : Error {
    explicit BoundExceeded(const std::string& msg) : Error(msg) {}
};
struct NotSelfDualCompatible : Error {
    explicit NotSelfDualCompatible(const std::string& msg) : Error(msg) {}
};

// Thrown when a post-condition that the construction itself guarantees fails;
// always indicates a bug, never bad user input.
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& msg) : Error(msg) {}
};

}  // namespace chainring

#endif
