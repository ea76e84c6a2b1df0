#pragma once

// Term language over the algebra signatures, with a declared variable budget.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "pea/atom_structure.hpp"

namespace pea {

class Term;
using TermPtr = std::shared_ptr<const Term>;

class Term {
public:
    static TermPtr var(int k);
    static TermPtr zero();
    static TermPtr one();
    static TermPtr diag(int i, int j);
    static TermPtr neg(TermPtr t);
    static TermPtr cyl(int i, TermPtr t);
    static TermPtr repl(int i, int j, TermPtr t);    // s^i_j
    static TermPtr transp(int i, int j, TermPtr t);  // s_[i,j]
    static TermPtr plus(TermPtr a, TermPtr b);
    static TermPtr times(TermPtr a, TermPtr b);

    bool is_var() const { return op_ == OpTag::Var; }
    int var_index() const { return i_; }

    // throws signature_error if an operator is unavailable in `kind` or a
    // variable index reaches `var_budget`
    void check_signature(const SignatureKind& kind, int var_budget) const;

    std::string to_string() const;
    int max_var() const; // -1 when variable-free

    Element eval(const StructurePtr& s,
                 const std::unordered_map<int, Element>& assignment) const;

private:
    enum class OpTag { Var, Zero, One, Diag, Not, Cyl, Repl, Transp, Or, And };
    Term(OpTag t, int i, int j, TermPtr a, TermPtr b)
        : op_(t), i_(i), j_(j), a_(std::move(a)), b_(std::move(b)) {}

    OpTag op_;
    int i_ = 0, j_ = 0;
    TermPtr a_, b_;
};

// Seeded random term generator over a signature fragment; `vars` is the
// variable budget m, every generated term uses only x_0..x_{m-1}.
class TermGen {
public:
    TermGen(SignatureKind kind, int vars, uint64_t seed)
        : kind_(kind), vars_(vars), rng_(seed) {}

    TermPtr term(int max_depth);
    std::pair<TermPtr, TermPtr> equation(int max_depth);

private:
    SignatureKind kind_;
    int vars_;
    std::mt19937_64 rng_;
};

} // namespace pea
