#ifndef FPTK_ERRORS_HPP
#define FPTK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fptk {

struct PrimalityError : std::runtime_error {
    explicit PrimalityError(const std::string& what) : std::runtime_error(what) {}
};

struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch : std::runtime_error {
    explicit FieldMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct ParityError : std::runtime_error {
    explicit ParityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fptk

#endif
