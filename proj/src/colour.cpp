#include "pea/colour.hpp"

#include <algorithm>
#include <array>

namespace pea {

std::string variant_name(SchemeVariant v) {
    switch (v) {
        case SchemeVariant::Std: return "std";
        case SchemeVariant::Split: return "split";
        case SchemeVariant::Order: return "order";
        case SchemeVariant::NonFinAx: return "nonfinax";
    }
    return "?";
}

ColourScheme ColourScheme::std_rainbow(int n, int green_count, int red_base) {
    if (n <= 2) throw signature_error("scheme dimension must exceed 2");
    if (green_count < 1 || red_base < 1) throw signature_error("scheme needs greens and reds");
    ColourScheme s;
    s.variant_ = SchemeVariant::Std;
    s.n_ = n;
    s.graded_lo_ = 1;
    s.graded_hi_ = n - 2;
    for (int t = 1; t <= green_count; ++t) s.tints_.push_back(t);
    s.red_base_ = red_base;
    s.build_table();
    return s;
}

ColourScheme ColourScheme::split(int n, int green_count, int red_base, int copies) {
    if (copies < 1) throw signature_error("split scheme needs at least one copy");
    ColourScheme s = std_rainbow(n, green_count, red_base);
    s.variant_ = SchemeVariant::Split;
    s.copies_ = copies;
    s.table_.clear();
    s.build_table();
    return s;
}

ColourScheme ColourScheme::order(int n, int green_prefix, int red_prefix) {
    if (n <= 2) throw signature_error("scheme dimension must exceed 2");
    if (green_prefix < 1 || red_prefix < 1) throw signature_error("scheme needs greens and reds");
    ColourScheme s;
    s.variant_ = SchemeVariant::Order;
    s.n_ = n;
    s.graded_lo_ = 1;
    s.graded_hi_ = n - 2;
    for (int t = 1; t <= green_prefix; ++t) s.tints_.push_back(-t); // -1 > -2 > ...
    s.red_base_ = red_prefix;
    s.full_marker_ = true;
    s.build_table();
    return s;
}

ColourScheme ColourScheme::nonfinax(int n, int mu, int kappa) {
    if (n <= 2) throw signature_error("scheme dimension must exceed 2");
    if (mu < 1 || kappa < 1) throw signature_error("scheme needs greens and reds");
    ColourScheme s;
    s.variant_ = SchemeVariant::NonFinAx;
    s.n_ = n;
    s.graded_lo_ = 1;
    s.graded_hi_ = n - 2;
    for (int t = 0; t < mu; ++t) s.tints_.push_back(t);
    s.red_base_ = kappa;
    s.build_table();
    return s;
}

void ColourScheme::build_table() {
    if (tints_.size() > 31)
        throw budget_exceeded("green tint universe capped at 31 for yellow masks");
    table_.clear();
    for (int i = 0; i < n_ - 1; ++i) table_.push_back({Hue::White, i, 0, -1, false});
    for (int i = graded_lo_; i <= graded_hi_; ++i)
        table_.push_back({Hue::GreenGraded, i, 0, -1, false});
    first_green_zero_ = table_.size();
    for (int t : tints_) table_.push_back({Hue::GreenZero, t, 0, -1, false});
    first_red_ = table_.size();
    switch (variant_) {
        case SchemeVariant::Std:
            for (int i = 0; i < red_base_; ++i)
                for (int j = i + 1; j < red_base_; ++j)
                    table_.push_back({Hue::Red, i, j, -1, true});
            break;
        case SchemeVariant::Split:
            for (int i = 0; i < red_base_; ++i)
                for (int j = i + 1; j < red_base_; ++j)
                    for (int t = 0; t < copies_; ++t)
                        table_.push_back({Hue::Red, i, j, t, true});
            break;
        case SchemeVariant::Order:
            for (int i = 0; i < red_base_; ++i)
                for (int j = 0; j < red_base_; ++j)
                    table_.push_back({Hue::Red, i, j, -1, true});
            break;
        case SchemeVariant::NonFinAx:
            for (int i = 0; i < red_base_; ++i) table_.push_back({Hue::Red, i, 0, -1, false});
            break;
    }
    if (table_.size() > 60000) throw budget_exceeded("colour table too large");
}

const Colour& ColourScheme::colour(ColourId c) const {
    if (c >= table_.size()) throw signature_error("colour id out of range");
    return table_[c];
}

ColourId ColourScheme::white_id(int i) const {
    if (i < 0 || i >= n_ - 1) throw signature_error("white index out of range");
    return static_cast<ColourId>(i);
}

ColourId ColourScheme::graded_id(int i) const {
    if (i < graded_lo_ || i > graded_hi_) throw signature_error("graded green index out of range");
    return static_cast<ColourId>((n_ - 1) + (i - graded_lo_));
}

ColourId ColourScheme::green_zero_id(int tint) const {
    int k = tint_index(tint);
    if (k < 0) throw signature_error("green tint " + std::to_string(tint) + " not in scheme");
    return static_cast<ColourId>(first_green_zero_ + k);
}

ColourId ColourScheme::red_pair_id(int i, int j, int sup) const {
    for (std::size_t c = first_red_; c < table_.size(); ++c) {
        const Colour& col = table_[c];
        if (col.a == i && col.b == j && col.sup == sup) return static_cast<ColourId>(c);
    }
    throw signature_error("red colour not in scheme");
}

ColourId ColourScheme::red_single_id(int i) const {
    if (variant_ != SchemeVariant::NonFinAx) throw signature_error("single reds only in nonfinax");
    if (i < 0 || i >= red_base_) throw signature_error("red index out of range");
    return static_cast<ColourId>(first_red_ + i);
}

int ColourScheme::tint_index(int tint) const {
    for (std::size_t k = 0; k < tints_.size(); ++k)
        if (tints_[k] == tint) return static_cast<int>(k);
    return -1;
}

ColourId ColourScheme::converse(ColourId c) const {
    const Colour& col = colour(c);
    if (variant_ != SchemeVariant::Order || col.hue != Hue::Red || col.a == col.b) return c;
    return red_pair_id(col.b, col.a);
}

namespace {

// does {(i1,k1),(i2,k2)} define an order-preserving partial function?
bool order_preserving_pair(int i1, int k1, int i2, int k2) {
    if (i1 == i2) return k1 == k2;
    if (i1 < i2) return k1 < k2;
    return k2 < k1;
}

} // namespace

bool ColourScheme::triangle_allowed(ColourId c_xb, ColourId c_xd, ColourId c_bd) const {
    std::array<const Colour*, 3> t = {&colour(c_xb), &colour(c_xd), &colour(c_bd)};

    int greens = 0, reds = 0;
    for (auto* c : t) {
        greens += c->is_green();
        reds += c->hue == Hue::Red;
    }

    // (g, g', g*): no triangle carries three greens
    if (greens == 3) return false;

    // (g_i, g_i, w_i) and (g_0^j, g_0^k, w_0)
    if (greens == 2) {
        const Colour* g1 = nullptr;
        const Colour* g2 = nullptr;
        const Colour* other = nullptr;
        for (auto* c : t) {
            if (!c->is_green())
                other = c;
            else if (!g1)
                g1 = c;
            else
                g2 = c;
        }
        if (other->hue == Hue::White) {
            if (g1->hue == Hue::GreenGraded && g2->hue == Hue::GreenGraded && g1->a == g2->a &&
                other->a == g1->a)
                return false;
            if (g1->hue == Hue::GreenZero && g2->hue == Hue::GreenZero && other->a == 0)
                return false;
        }
        // order variant: the red between two cone apexes must pair each apex
        // tint with the red index at its own end, order preservingly
        if (variant_ == SchemeVariant::Order && other->hue == Hue::Red &&
            g1->hue == Hue::GreenZero && g2->hue == Hue::GreenZero) {
            // geometry: the two greens share their common node; the red joins
            // the apexes, its first index at the smaller node
            int tint_first, tint_second;
            if (!t[2]->is_green()) {
                // greens (x,b), (x,d); red (b,d): first index at b
                tint_first = t[0]->a;
                tint_second = t[1]->a;
            } else if (!t[1]->is_green()) {
                // greens (x,b), (b,d); red (x,d): first index at x
                tint_first = t[0]->a;  // x's tint from (x,b)?  the common node is b
                tint_second = t[2]->a; // d's tint from (b,d)
            } else {
                // greens (x,d), (b,d); red (x,b): common d, first index at x
                tint_first = t[1]->a;
                tint_second = t[2]->a;
            }
            if (!order_preserving_pair(tint_first, other->a, tint_second, other->b)) return false;
        }
    }

    if (reds == 3) {
        if (variant_ == SchemeVariant::NonFinAx) {
            // (r_i, r_i, r_j) forbidden: indices must be pairwise distinct
            return t[0]->a != t[1]->a && t[0]->a != t[2]->a && t[1]->a != t[2]->a;
        }
        if (variant_ == SchemeVariant::Order) {
            // directional composition along x -> b -> d:
            // (x,b) = r_ij, (b,d) = r_jk forces (x,d) = r_ik
            return t[0]->b == t[2]->a && t[0]->a == t[1]->a && t[2]->b == t[1]->b;
        }
        // match rule: some arrangement (r_ij, r_j'k', r_i*k*) with i=i*, j=j',
        // k'=k* (split variant additionally synchronises superscripts)
        static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& p : perms) {
            const Colour* x = t[p[0]];
            const Colour* y = t[p[1]];
            const Colour* z = t[p[2]];
            if (x->a == z->a && x->b == y->a && y->b == z->b) {
                if (variant_ == SchemeVariant::Split) {
                    if (x->sup == y->sup && y->sup == z->sup) return true;
                } else {
                    return true;
                }
            }
        }
        return false;
    }

    return true;
}

uint64_t ColourScheme::yellow_choices(uint32_t required_mask) const {
    int free_bits = static_cast<int>(tints_.size()) - __builtin_popcount(required_mask);
    return (1ull << free_bits) + (full_marker_ ? 1 : 0);
}

std::string ColourScheme::colour_name(ColourId c) const {
    const Colour& col = colour(c);
    switch (col.hue) {
        case Hue::White: return "w" + std::to_string(col.a);
        case Hue::GreenGraded: return "g" + std::to_string(col.a);
        case Hue::GreenZero: return "g0^" + std::to_string(col.a);
        case Hue::Red:
            if (!col.pair_red) return "r" + std::to_string(col.a);
            return "r(" + std::to_string(col.a) + "," + std::to_string(col.b) + ")" +
                   (col.sup >= 0 ? "^" + std::to_string(col.sup) : "");
    }
    return "?";
}

ColourId ColourScheme::parse_colour(const std::string& s) const {
    for (std::size_t c = 0; c < table_.size(); ++c)
        if (colour_name(static_cast<ColourId>(c)) == s) return static_cast<ColourId>(c);
    throw parse_error("colour '" + s + "' not in scheme " + variant_name(variant_));
}

std::string ColourScheme::yellow_name(const Yellow& y) const {
    if (y.full) return "y{all}";
    std::string out = "y{";
    bool first = true;
    for (std::size_t k = 0; k < tints_.size(); ++k)
        if ((y.mask >> k) & 1u) {
            if (!first) out += ",";
            out += std::to_string(tints_[k]);
            first = false;
        }
    return out + "}";
}

} // namespace pea
