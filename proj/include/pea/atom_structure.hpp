#pragma once

// Finite atom structures of Df/Sc/CA/PA/PEA type and the elements of their
// complex algebras. Cylindrifier accessibility is stored as one relation per
// index; when the relation is an equivalence (the validated case) it is kept
// as a class partition so that saturation is a class lookup.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pea/bitset.hpp"
#include "pea/errors.hpp"
#include "pea/signature.hpp"

namespace pea {

using Atom = uint32_t;

// Accessibility relation of one cylindrifier. Classes when the relation is an
// equivalence; otherwise a raw symmetric-or-not adjacency kept only so the
// axiom checker can exhibit the failure.
class CylRelation {
public:
    static CylRelation from_classes(std::vector<uint32_t> class_of, uint32_t class_count);
    static CylRelation from_pairs(uint32_t atom_count, const std::vector<std::pair<Atom, Atom>>& pairs);

    bool is_equivalence() const { return equivalence_; }
    uint32_t atom_count() const { return static_cast<uint32_t>(class_of_.empty() ? adj_.size() : class_of_.size()); }

    uint32_t class_count() const { return class_count_; }
    uint32_t class_of(Atom a) const { return class_of_[a]; }
    const std::vector<Atom>& class_members(uint32_t cls) const { return members_[cls]; }

    // relational image of a single atom / of a set
    void image_into(Atom a, Bitset& out) const;
    Bitset image(const Bitset& x) const;
    bool related(Atom a, Atom b) const;

    // neighbours used by the raw (non-equivalence) representation
    const std::vector<Atom>& raw_successors(Atom a) const { return adj_[a]; }

private:
    bool equivalence_ = true;
    // equivalence representation
    std::vector<uint32_t> class_of_;
    uint32_t class_count_ = 0;
    std::vector<std::vector<Atom>> members_;
    // raw representation
    std::vector<std::vector<Atom>> adj_;
};

class AtomStructure;
using StructurePtr = std::shared_ptr<const AtomStructure>;

// An element of the complex algebra: a set of atoms of one owning structure.
class Element {
public:
    Element() = default;
    Element(StructurePtr owner, Bitset bits);

    static Element zero(const StructurePtr& s);
    static Element top(const StructurePtr& s);
    static Element singleton(const StructurePtr& s, Atom a);
    static Element of_atoms(const StructurePtr& s, const std::vector<Atom>& atoms);

    const StructurePtr& owner() const { return owner_; }
    const Bitset& bits() const { return bits_; }
    Bitset& bits() { return bits_; }

    bool is_zero() const { return bits_.none(); }
    std::size_t count() const { return bits_.count(); }
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

private:
    StructurePtr owner_;
    Bitset bits_;
};

struct AtomStructureData {
    SignatureKind kind;
    uint32_t atom_count = 0;
    // E[i][j], i,j < n, as atom sets; E[i][i] must be the full set
    std::vector<std::vector<Bitset>> diag;
    // T[i], i < n
    std::vector<CylRelation> cyl;
    // S[i][j] for i < j < n, as atom permutations; empty unless PA/PEA
    std::vector<std::vector<std::vector<Atom>>> transp;
    // optional human-readable atom descriptors (may be empty for large structures)
    std::vector<std::string> descriptors;
    // optional builder-provided move-ordering hint, higher = tried earlier by the solver
    std::vector<float> attack_score;
};

class AtomStructure : public std::enable_shared_from_this<AtomStructure> {
public:
    // Validated construction: rejects data violating the structure invariants
    // (T_i an equivalence, S_ij an involution, E_ii full) with a named violation.
    static StructurePtr create(AtomStructureData data);
    // Unchecked construction for deliberately broken inputs; the axiom checker
    // reports the damage instead.
    static StructurePtr create_unchecked(AtomStructureData data);

    const SignatureKind& kind() const { return data_.kind; }
    int dim() const { return data_.kind.n; }
    uint32_t atom_count() const { return data_.atom_count; }

    const Bitset& diag_set(int i, int j) const;
    const CylRelation& cyl_rel(int i) const;
    Atom transp_image(int i, int j, Atom a) const;
    bool has_transp() const { return !data_.transp.empty(); }

    std::string describe(Atom a) const;
    const std::vector<std::string>& descriptors() const { return data_.descriptors; }
    const std::vector<float>& attack_score() const { return data_.attack_score; }

    // ---- complex algebra operations ----
    Element zero() const { return Element::zero(self()); }
    Element top() const { return Element::top(self()); }
    Element singleton(Atom a) const { return Element::singleton(self(), a); }

    Element diag(int i, int j) const;
    Element cyl(int i, const Element& x) const;
    Element transp(int i, int j, const Element& x) const;   // s_[i,j]
    Element repl(int i, int j, const Element& x) const;     // s^i_j = c_i(x . d_ij), identity when i = j
    Element bool_not(const Element& x) const;
    Element bool_or(const Element& x, const Element& y) const;
    Element bool_and(const Element& x, const Element& y) const;

    // generic dispatcher; op availability is checked against the signature kind
    Element apply(Op op, int i, int j, const std::vector<Element>& args) const;

    // atom-level images (no availability check; used by checker and games)
    void cyl_atom_into(int i, Atom a, Bitset& out) const;
    Bitset cyl_bits(int i, const Bitset& x) const;
    bool cyl_related(int i, Atom a, Atom b) const;

    StructurePtr self() const { return shared_from_this(); }

    void check_owned(const Element& x, const char* what) const;

private:
    explicit AtomStructure(AtomStructureData data) : data_(std::move(data)) {}
    void validate() const;
    void validate_shapes() const;

    AtomStructureData data_;
};

} // namespace pea
