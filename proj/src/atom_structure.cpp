#include "pea/atom_structure.hpp"

#include <algorithm>

namespace pea {

// ---------------------------------------------------------------- CylRelation

CylRelation CylRelation::from_classes(std::vector<uint32_t> class_of, uint32_t class_count) {
    CylRelation r;
    r.equivalence_ = true;
    r.class_of_ = std::move(class_of);
    r.class_count_ = class_count;
    r.members_.assign(class_count, {});
    for (Atom a = 0; a < r.class_of_.size(); ++a) {
        if (r.class_of_[a] >= class_count)
            throw validation_error("cylindrifier class id out of range");
        r.members_[r.class_of_[a]].push_back(a);
    }
    return r;
}

CylRelation CylRelation::from_pairs(uint32_t atom_count,
                                    const std::vector<std::pair<Atom, Atom>>& pairs) {
    // detect whether the pair list is an equivalence; if so compress to classes
    std::vector<std::vector<Atom>> adj(atom_count);
    for (auto [a, b] : pairs) {
        if (a >= atom_count || b >= atom_count)
            throw validation_error("cylindrifier pair atom out of range");
        adj[a].push_back(b);
    }
    for (auto& v : adj) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    auto has = [&](Atom a, Atom b) {
        return std::binary_search(adj[a].begin(), adj[a].end(), b);
    };
    bool equiv = true;
    for (Atom a = 0; a < atom_count && equiv; ++a) {
        if (!has(a, a)) { equiv = false; break; }
        for (Atom b : adj[a]) {
            if (!has(b, a)) { equiv = false; break; }
        }
    }
    if (equiv) {
        // transitivity: relation is an equivalence iff each connected row equals
        // the row of every neighbour
        for (Atom a = 0; a < atom_count && equiv; ++a)
            for (Atom b : adj[a])
                if (adj[b] != adj[a]) { equiv = false; break; }
    }
    if (equiv) {
        std::vector<uint32_t> cls(atom_count, UINT32_MAX);
        uint32_t next = 0;
        for (Atom a = 0; a < atom_count; ++a) {
            if (cls[a] != UINT32_MAX) continue;
            for (Atom b : adj[a]) cls[b] = next;
            cls[a] = next;
            ++next;
        }
        return from_classes(std::move(cls), next);
    }
    CylRelation r;
    r.equivalence_ = false;
    r.adj_ = std::move(adj);
    return r;
}

void CylRelation::image_into(Atom a, Bitset& out) const {
    if (equivalence_) {
        for (Atom b : members_[class_of_[a]]) out.set(b);
    } else {
        for (Atom b : adj_[a]) out.set(b);
    }
}

Bitset CylRelation::image(const Bitset& x) const {
    Bitset out(x.size());
    if (equivalence_) {
        // mark classes met by x, then expand once per class
        std::vector<char> hit(class_count_, 0);
        x.for_each([&](std::size_t a) { hit[class_of_[a]] = 1; });
        for (uint32_t c = 0; c < class_count_; ++c)
            if (hit[c])
                for (Atom b : members_[c]) out.set(b);
    } else {
        x.for_each([&](std::size_t a) {
            for (Atom b : adj_[a]) out.set(b);
        });
    }
    return out;
}

bool CylRelation::related(Atom a, Atom b) const {
    if (equivalence_) return class_of_[a] == class_of_[b];
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

// -------------------------------------------------------------------- Element

Element::Element(StructurePtr owner, Bitset bits) : owner_(std::move(owner)), bits_(std::move(bits)) {
    if (owner_ && bits_.size() != owner_->atom_count())
        throw mixed_structure_error("element width does not match owning structure");
}

Element Element::zero(const StructurePtr& s) { return Element(s, Bitset(s->atom_count())); }
Element Element::top(const StructurePtr& s) { return Element(s, Bitset(s->atom_count(), true)); }

Element Element::singleton(const StructurePtr& s, Atom a) {
    if (a >= s->atom_count()) throw mixed_structure_error("atom index out of range");
    Bitset b(s->atom_count());
    b.set(a);
    return Element(s, std::move(b));
}

Element Element::of_atoms(const StructurePtr& s, const std::vector<Atom>& atoms) {
    Bitset b(s->atom_count());
    for (Atom a : atoms) {
        if (a >= s->atom_count()) throw mixed_structure_error("atom index out of range");
        b.set(a);
    }
    return Element(s, std::move(b));
}

bool Element::operator==(const Element& o) const {
    return owner_.get() == o.owner_.get() && bits_ == o.bits_;
}

// -------------------------------------------------------------- AtomStructure

StructurePtr AtomStructure::create(AtomStructureData data) {
    auto p = StructurePtr(new AtomStructure(std::move(data)));
    p->validate_shapes();
    p->validate();
    return p;
}

StructurePtr AtomStructure::create_unchecked(AtomStructureData data) {
    auto p = StructurePtr(new AtomStructure(std::move(data)));
    p->validate_shapes();
    return p;
}

void AtomStructure::validate_shapes() const {
    const int n = dim();
    if (data_.diag.size() != static_cast<std::size_t>(n))
        throw validation_error("diagonal table must have one row per index");
    for (auto& row : data_.diag) {
        if (row.size() != static_cast<std::size_t>(n))
            throw validation_error("diagonal table must be n x n");
        for (auto& e : row)
            if (e.size() != data_.atom_count)
                throw validation_error("diagonal set width mismatch");
    }
    if (data_.cyl.size() != static_cast<std::size_t>(n))
        throw validation_error("one cylindrifier relation per index required");
    for (auto& t : data_.cyl)
        if (t.atom_count() != data_.atom_count)
            throw validation_error("cylindrifier relation width mismatch");
    const bool needs_transp = data_.kind.has_transpositions();
    if (needs_transp) {
        if (data_.transp.size() != static_cast<std::size_t>(n))
            throw validation_error("transposition table must have one row per index");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (data_.transp[i].size() != static_cast<std::size_t>(n) ||
                    data_.transp[i][j].size() != data_.atom_count)
                    throw validation_error("transposition map width mismatch");
            }
    } else if (!data_.transp.empty()) {
        throw validation_error("transposition maps present for a kind without them");
    }
    if (!data_.descriptors.empty() && data_.descriptors.size() != data_.atom_count)
        throw validation_error("descriptor count mismatch");
}

void AtomStructure::validate() const {
    const int n = dim();
    for (int i = 0; i < n; ++i)
        if (!data_.diag[i][i].all())
            throw validation_error("violation E_ii_full: E_" + std::to_string(i) +
                                   std::to_string(i) + " is not the full atom set");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (data_.diag[i][j] != data_.diag[j][i])
                throw validation_error("violation E_symmetric: E_ij != E_ji at i=" +
                                       std::to_string(i) + " j=" + std::to_string(j));
    for (int i = 0; i < n; ++i)
        if (!data_.cyl[i].is_equivalence())
            throw validation_error("violation T_equivalence: T_" + std::to_string(i) +
                                   " is not an equivalence relation");
    if (data_.kind.has_transpositions()) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const auto& m = data_.transp[i][j];
                for (Atom a = 0; a < data_.atom_count; ++a) {
                    if (m[a] >= data_.atom_count)
                        throw validation_error("violation S_range: S_ij image out of range");
                    if (m[m[a]] != a)
                        throw validation_error("violation S_involution: S_" + std::to_string(i) +
                                               std::to_string(j) + " not an involution at atom " +
                                               std::to_string(a));
                }
            }
    }
}

const Bitset& AtomStructure::diag_set(int i, int j) const {
    data_.kind.check_index(i, "diagonal");
    data_.kind.check_index(j, "diagonal");
    return data_.diag[i][j];
}

const CylRelation& AtomStructure::cyl_rel(int i) const {
    data_.kind.check_index(i, "cylindrifier");
    return data_.cyl[i];
}

Atom AtomStructure::transp_image(int i, int j, Atom a) const {
    data_.kind.check_index(i, "transposition");
    data_.kind.check_index(j, "transposition");
    if (i == j) return a;
    if (i > j) std::swap(i, j);
    if (data_.transp.empty())
        throw signature_error("structure carries no transposition maps");
    return data_.transp[i][j][a];
}

std::string AtomStructure::describe(Atom a) const {
    if (a < data_.descriptors.size()) return data_.descriptors[a];
    return "atom#" + std::to_string(a);
}

void AtomStructure::check_owned(const Element& x, const char* what) const {
    if (x.owner().get() != this)
        throw mixed_structure_error(std::string(what) + ": element belongs to a different structure");
}

Element AtomStructure::diag(int i, int j) const {
    return Element(self(), diag_set(i, j));
}

Element AtomStructure::cyl(int i, const Element& x) const {
    check_owned(x, "c_i");
    data_.kind.check_index(i, "cylindrifier");
    return Element(self(), data_.cyl[i].image(x.bits()));
}

Element AtomStructure::transp(int i, int j, const Element& x) const {
    check_owned(x, "s_[i,j]");
    data_.kind.check_index(i, "transposition");
    data_.kind.check_index(j, "transposition");
    if (i == j) return x;
    if (i > j) std::swap(i, j);
    Bitset out(atom_count());
    const auto& m = data_.transp[i][j];
    x.bits().for_each([&](std::size_t a) { out.set(m[a]); });
    return Element(self(), std::move(out));
}

Element AtomStructure::repl(int i, int j, const Element& x) const {
    check_owned(x, "s^i_j");
    data_.kind.check_index(i, "replacement");
    data_.kind.check_index(j, "replacement");
    if (i == j) return x;
    Bitset cut = x.bits() & data_.diag[i][j];
    return Element(self(), data_.cyl[i].image(cut));
}

Element AtomStructure::bool_not(const Element& x) const {
    check_owned(x, "-");
    return Element(self(), ~x.bits());
}

Element AtomStructure::bool_or(const Element& x, const Element& y) const {
    check_owned(x, "+");
    check_owned(y, "+");
    return Element(self(), x.bits() | y.bits());
}

Element AtomStructure::bool_and(const Element& x, const Element& y) const {
    check_owned(x, "*");
    check_owned(y, "*");
    return Element(self(), x.bits() & y.bits());
}

Element AtomStructure::apply(Op op, int i, int j, const std::vector<Element>& args) const {
    if (!op_available(data_.kind, op))
        throw signature_error("operator " + op_name(op) + " not available in " +
                              family_name(data_.kind.family) + "_" + std::to_string(dim()));
    auto arity = [&](std::size_t k) {
        if (args.size() != k)
            throw signature_error("operator " + op_name(op) + " expects " + std::to_string(k) +
                                  " arguments");
    };
    switch (op) {
        case Op::Zero: arity(0); return zero();
        case Op::One: arity(0); return top();
        case Op::Diag: arity(0); return diag(i, j);
        case Op::Not: arity(1); return bool_not(args[0]);
        case Op::Cyl: arity(1); return cyl(i, args[0]);
        case Op::Repl: arity(1); return repl(i, j, args[0]);
        case Op::Transp: arity(1); return transp(i, j, args[0]);
        case Op::Or: arity(2); return bool_or(args[0], args[1]);
        case Op::And: arity(2); return bool_and(args[0], args[1]);
    }
    throw signature_error("unhandled operator");
}

void AtomStructure::cyl_atom_into(int i, Atom a, Bitset& out) const {
    data_.cyl[i].image_into(a, out);
}

Bitset AtomStructure::cyl_bits(int i, const Bitset& x) const {
    return data_.cyl[i].image(x);
}

bool AtomStructure::cyl_related(int i, Atom a, Atom b) const {
    return data_.cyl[i].related(a, b);
}

} // namespace pea
