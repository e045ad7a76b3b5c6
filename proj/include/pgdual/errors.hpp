#pragma once

#include <stdexcept>
#include <string>

namespace pgdual {

/// The caller violated a documented precondition (bad ids, bad flags, ...).
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A mathematically undefined request, e.g. inverting zero.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

/// A derived object (line, diagonal point, cross-join) is ill-defined because
/// the ambient incidence structure is not a model of the foundation axioms.
/// `violated()` names the closure or identity that failed.
class structure_error : public std::runtime_error {
public:
    explicit structure_error(const std::string& violated)
        : std::runtime_error("structure error: " + violated), violated_(violated) {}

    const std::string& violated() const { return violated_; }

private:
    std::string violated_;
};

/// File or JSON input could not be read or does not match the schema.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pgdual
