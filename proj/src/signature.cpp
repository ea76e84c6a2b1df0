#include "pea/signature.hpp"

namespace pea {

std::string family_name(Family f) {
    switch (f) {
        case Family::Df: return "Df";
        case Family::Sc: return "Sc";
        case Family::CA: return "CA";
        case Family::PA: return "PA";
        case Family::PEA: return "PEA";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    if (s == "Df") return Family::Df;
    if (s == "Sc") return Family::Sc;
    if (s == "CA") return Family::CA;
    if (s == "PA") return Family::PA;
    if (s == "PEA") return Family::PEA;
    throw signature_error("unknown signature family '" + s + "'");
}

std::string op_name(Op op) {
    switch (op) {
        case Op::Zero: return "0";
        case Op::One: return "1";
        case Op::Diag: return "d";
        case Op::Not: return "-";
        case Op::Cyl: return "c";
        case Op::Repl: return "s^";
        case Op::Transp: return "s[]";
        case Op::Or: return "+";
        case Op::And: return "*";
    }
    return "?";
}

bool op_available(const SignatureKind& k, Op op) {
    switch (op) {
        case Op::Zero:
        case Op::One:
        case Op::Not:
        case Op::Or:
        case Op::And:
        case Op::Cyl:
            return true;
        case Op::Diag:
            return k.has_diagonals();
        case Op::Repl:
            return k.has_replacements();
        case Op::Transp:
            return k.has_transpositions();
    }
    return false;
}

} // namespace pea
