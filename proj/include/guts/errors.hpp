#pragma once

#include <stdexcept>
#include <string>

namespace guts {

// Violation of a mathematical precondition, or input data that asserts
// something impossible.  The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual or JSON input: bad syntax, wrong types, unknown keys,
// unreadable files.  The CLI maps these to exit code 2.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Fact propagation produced an empty interval.  Carries the provenance tags
// of the two bounds that cannot hold simultaneously.
class InconsistentFactsError : public DomainError {
public:
    InconsistentFactsError(const std::string& what, std::string lower, std::string upper)
        : DomainError(what), lower_tag(std::move(lower)), upper_tag(std::move(upper)) {}

    std::string lower_tag;
    std::string upper_tag;
};

}  // namespace guts
