#pragma once

#include <stdexcept>
#include <string>

namespace pea {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// raised when a combinatorial enumeration or search exceeds its configured cap
struct budget_exceeded : error {
    explicit budget_exceeded(const std::string& what) : error(what) {}
};

// operator not in signature, index out of range, variable budget violated
struct signature_error : error {
    explicit signature_error(const std::string& what) : error(what) {}
};

// elements or atoms of one structure fed to another
struct mixed_structure_error : error {
    explicit mixed_structure_error(const std::string& what) : error(what) {}
};

// structure data violating a construction invariant, named violation in message
struct validation_error : error {
    explicit validation_error(const std::string& what) : error(what) {}
};

// malformed input file
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

} // namespace pea
