#include "pea/term.hpp"

namespace pea {

TermPtr Term::var(int k) { return TermPtr(new Term(OpTag::Var, k, 0, nullptr, nullptr)); }
TermPtr Term::zero() { return TermPtr(new Term(OpTag::Zero, 0, 0, nullptr, nullptr)); }
TermPtr Term::one() { return TermPtr(new Term(OpTag::One, 0, 0, nullptr, nullptr)); }
TermPtr Term::diag(int i, int j) { return TermPtr(new Term(OpTag::Diag, i, j, nullptr, nullptr)); }
TermPtr Term::neg(TermPtr t) { return TermPtr(new Term(OpTag::Not, 0, 0, std::move(t), nullptr)); }
TermPtr Term::cyl(int i, TermPtr t) { return TermPtr(new Term(OpTag::Cyl, i, 0, std::move(t), nullptr)); }
TermPtr Term::repl(int i, int j, TermPtr t) {
    return TermPtr(new Term(OpTag::Repl, i, j, std::move(t), nullptr));
}
TermPtr Term::transp(int i, int j, TermPtr t) {
    return TermPtr(new Term(OpTag::Transp, i, j, std::move(t), nullptr));
}
TermPtr Term::plus(TermPtr a, TermPtr b) {
    return TermPtr(new Term(OpTag::Or, 0, 0, std::move(a), std::move(b)));
}
TermPtr Term::times(TermPtr a, TermPtr b) {
    return TermPtr(new Term(OpTag::And, 0, 0, std::move(a), std::move(b)));
}

void Term::check_signature(const SignatureKind& kind, int var_budget) const {
    switch (op_) {
        case OpTag::Var:
            if (i_ < 0 || i_ >= var_budget)
                throw signature_error("variable x_" + std::to_string(i_) +
                                      " outside budget m=" + std::to_string(var_budget));
            return;
        case OpTag::Zero:
        case OpTag::One:
            return;
        case OpTag::Diag:
            if (!kind.has_diagonals()) throw signature_error("d_ij not in signature");
            kind.check_index(i_, "diagonal");
            kind.check_index(j_, "diagonal");
            return;
        case OpTag::Not: a_->check_signature(kind, var_budget); return;
        case OpTag::Cyl:
            kind.check_index(i_, "cylindrifier");
            a_->check_signature(kind, var_budget);
            return;
        case OpTag::Repl:
            if (!kind.has_replacements()) throw signature_error("s^i_j not in signature");
            kind.check_index(i_, "replacement");
            kind.check_index(j_, "replacement");
            a_->check_signature(kind, var_budget);
            return;
        case OpTag::Transp:
            if (!kind.has_transpositions()) throw signature_error("s_[i,j] not in signature");
            kind.check_index(i_, "transposition");
            kind.check_index(j_, "transposition");
            a_->check_signature(kind, var_budget);
            return;
        case OpTag::Or:
        case OpTag::And:
            a_->check_signature(kind, var_budget);
            b_->check_signature(kind, var_budget);
            return;
    }
}

std::string Term::to_string() const {
    switch (op_) {
        case OpTag::Var: return "x" + std::to_string(i_);
        case OpTag::Zero: return "0";
        case OpTag::One: return "1";
        case OpTag::Diag: return "d" + std::to_string(i_) + std::to_string(j_);
        case OpTag::Not: return "-" + a_->to_string();
        case OpTag::Cyl: return "c" + std::to_string(i_) + "(" + a_->to_string() + ")";
        case OpTag::Repl:
            return "s^" + std::to_string(i_) + "_" + std::to_string(j_) + "(" + a_->to_string() + ")";
        case OpTag::Transp:
            return "s[" + std::to_string(i_) + "," + std::to_string(j_) + "](" + a_->to_string() + ")";
        case OpTag::Or: return "(" + a_->to_string() + " + " + b_->to_string() + ")";
        case OpTag::And: return "(" + a_->to_string() + " * " + b_->to_string() + ")";
    }
    return "?";
}

int Term::max_var() const {
    switch (op_) {
        case OpTag::Var: return i_;
        case OpTag::Zero:
        case OpTag::One:
        case OpTag::Diag: return -1;
        case OpTag::Not:
        case OpTag::Cyl:
        case OpTag::Repl:
        case OpTag::Transp: return a_->max_var();
        case OpTag::Or:
        case OpTag::And: return std::max(a_->max_var(), b_->max_var());
    }
    return -1;
}

Element Term::eval(const StructurePtr& s,
                   const std::unordered_map<int, Element>& assignment) const {
    switch (op_) {
        case OpTag::Var: {
            auto it = assignment.find(i_);
            if (it == assignment.end())
                throw signature_error("unassigned variable x" + std::to_string(i_));
            s->check_owned(it->second, "eval");
            return it->second;
        }
        case OpTag::Zero: return s->zero();
        case OpTag::One: return s->top();
        case OpTag::Diag: return s->diag(i_, j_);
        case OpTag::Not: return s->bool_not(a_->eval(s, assignment));
        case OpTag::Cyl: return s->cyl(i_, a_->eval(s, assignment));
        case OpTag::Repl: return s->repl(i_, j_, a_->eval(s, assignment));
        case OpTag::Transp: return s->transp(i_, j_, a_->eval(s, assignment));
        case OpTag::Or: return s->bool_or(a_->eval(s, assignment), b_->eval(s, assignment));
        case OpTag::And: return s->bool_and(a_->eval(s, assignment), b_->eval(s, assignment));
    }
    throw signature_error("unhandled term node");
}

TermPtr TermGen::term(int max_depth) {
    const int n = kind_.n;
    auto idx = [&] { return static_cast<int>(rng_() % n); };
    if (max_depth <= 0 || rng_() % 5 == 0) {
        // leaf
        int pick = static_cast<int>(rng_() % (kind_.has_diagonals() ? 4 : 3));
        switch (pick) {
            case 0: return Term::var(static_cast<int>(rng_() % vars_));
            case 1: return Term::zero();
            case 2: return Term::one();
            default: {
                int i = idx(), j = idx();
                return Term::diag(i, j);
            }
        }
    }
    std::vector<int> ops = {0, 1, 2, 3}; // not, cyl, or, and
    if (kind_.has_replacements()) ops.push_back(4);
    if (kind_.has_transpositions()) ops.push_back(5);
    switch (ops[rng_() % ops.size()]) {
        case 0: return Term::neg(term(max_depth - 1));
        case 1: return Term::cyl(idx(), term(max_depth - 1));
        case 2: return Term::plus(term(max_depth - 1), term(max_depth - 1));
        case 3: return Term::times(term(max_depth - 1), term(max_depth - 1));
        case 4: {
            int i = idx(), j = idx();
            return Term::repl(i, j, term(max_depth - 1));
        }
        default: {
            int i = idx(), j = idx();
            return Term::transp(i, j, term(max_depth - 1));
        }
    }
}

std::pair<TermPtr, TermPtr> TermGen::equation(int max_depth) {
    return {term(max_depth), term(max_depth)};
}

} // namespace pea
