#pragma once

// Signature families of diagonal-free, substitution, cylindric and (quasi)polyadic
// equality algebras of a fixed finite dimension.

#include <string>
#include "pea/errors.hpp"

namespace pea {

enum class Family { Df, Sc, CA, PA, PEA };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

struct SignatureKind {
    Family family = Family::PEA;
    int n = 3;

    SignatureKind() = default;
    SignatureKind(Family f, int dim) : family(f), n(dim) {
        if (n <= 2 || n >= 16)
            throw signature_error("dimension must satisfy 2 < n < 16, got " + std::to_string(n));
    }

    bool has_diagonals() const { return family == Family::CA || family == Family::PEA; }
    bool has_replacements() const {
        return family == Family::Sc || family == Family::PA || family == Family::PEA;
    }
    bool has_transpositions() const { return family == Family::PA || family == Family::PEA; }

    void check_index(int i, const char* what) const {
        if (i < 0 || i >= n)
            throw signature_error(std::string(what) + " index " + std::to_string(i) +
                                  " out of range for dimension " + std::to_string(n));
    }

    bool operator==(const SignatureKind& o) const { return family == o.family && n == o.n; }
};

// Operator descriptors for cm_operation / term nodes.
enum class Op {
    Zero, One, Diag,        // constants (Diag takes i, j)
    Not, Cyl, Repl, Transp, // unary (Cyl takes i; Repl/Transp take i, j)
    Or, And                 // binary
};

std::string op_name(Op op);

// availability per family; Boolean operators are always available
bool op_available(const SignatureKind& k, Op op);

} // namespace pea
