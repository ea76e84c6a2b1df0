#pragma once

// Rainbow colour alphabets and the per-variant forbidden-triangle rules.
//
// Variants:
//   Std      pair-indexed reds r_(i,j), i<j over a base set; the finite
//            rainbow algebra family (greens g_0^1..g_0^G)
//   Split    Std reds split into superscripted copies r_(i,j)^t, t < T,
//            triangles must in addition carry one common superscript
//   Order    reds r_(i,j) over naturals, both coordinates free; green tints
//            are negatives; a two-green/one-red triangle is allowed only when
//            the tint->index pairing is an order-preserving partial function
//   NonFinAx single-indexed reds r_i, i < kappa; a red triangle is allowed
//            only when all three indices are distinct

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pea/errors.hpp"

namespace pea {

enum class SchemeVariant { Std, Split, Order, NonFinAx };

std::string variant_name(SchemeVariant v);

enum class Hue : uint8_t { White, GreenGraded, GreenZero, Red };

struct Colour {
    Hue hue = Hue::White;
    int a = 0;      // white index / graded index / tint / first red index
    int b = 0;      // second red index (pair-indexed variants)
    int sup = -1;   // red superscript (Split), -1 elsewhere
    bool pair_red = true;

    bool is_green() const { return hue == Hue::GreenGraded || hue == Hue::GreenZero; }
};

// Yellow shade: subset of the green-zero tint universe, or the distinguished
// full shade (Order variant keeps it distinct from the whole finite prefix).
struct Yellow {
    uint32_t mask = 0;
    bool full = false;

    bool contains(int universe_index) const {
        return full || ((mask >> universe_index) & 1u);
    }
    bool operator==(const Yellow& o) const { return mask == o.mask && full == o.full; }
    bool operator<(const Yellow& o) const {
        if (full != o.full) return !full;
        return mask < o.mask;
    }
};

using ColourId = uint16_t;

class ColourScheme {
public:
    static ColourScheme std_rainbow(int n, int green_count, int red_base);
    static ColourScheme split(int n, int green_count, int red_base, int copies);
    static ColourScheme order(int n, int green_prefix, int red_prefix);
    static ColourScheme nonfinax(int n, int mu, int kappa);

    SchemeVariant variant() const { return variant_; }
    int dim() const { return n_; }
    int graded_lo() const { return graded_lo_; }
    int graded_hi() const { return graded_hi_; }
    const std::vector<int>& tints() const { return tints_; }
    int red_base() const { return red_base_; }
    int copies() const { return copies_; }
    bool has_full_marker() const { return full_marker_; }

    const std::vector<Colour>& colours() const { return table_; }
    const Colour& colour(ColourId c) const;
    std::size_t colour_count() const { return table_.size(); }

    ColourId white_id(int i) const;
    ColourId graded_id(int i) const;
    ColourId green_zero_id(int tint) const;
    ColourId red_pair_id(int i, int j, int sup = -1) const;
    ColourId red_single_id(int i) const;

    bool is_green(ColourId c) const { return colour(c).is_green(); }
    bool is_red(ColourId c) const { return colour(c).hue == Hue::Red; }
    bool is_white(ColourId c) const { return colour(c).hue == Hue::White; }

    int tint_index(int tint) const; // position in tints(), -1 if absent

    // converse colour: identity except the order variant's reds, where the
    // ordered index pair flips when an edge is read against its storage
    // direction
    ColourId converse(ColourId c) const;

    // Triangle predicate in geometric convention: for a triangle on nodes
    // x < b < d the arguments are the stored labels of (x,b), (x,d), (b,d).
    // The order variant reads its red index pairs directionally (first index
    // at the smaller endpoint); every other variant is orientation-free, and
    // there the predicate is fully permutation invariant.
    bool triangle_allowed(ColourId c_xb, ColourId c_xd, ColourId c_bd) const;

    // number of yellow shades above a required tint mask (supersets + full)
    uint64_t yellow_choices(uint32_t required_mask) const;

    std::string colour_name(ColourId c) const;
    ColourId parse_colour(const std::string& s) const;
    std::string yellow_name(const Yellow& y) const;

    // non-red colours occupy a shared id prefix across schemes differing only
    // in red inventory; used by the matched-pair correspondence
    std::size_t first_red_id() const { return first_red_; }

    ColourScheme() = default; // empty scheme; populate via the named factories

private:
    void build_table();

    SchemeVariant variant_ = SchemeVariant::Std;
    int n_ = 3;
    int graded_lo_ = 1, graded_hi_ = 1;
    std::vector<int> tints_;
    int red_base_ = 0;
    int copies_ = 1;
    bool full_marker_ = false;

    std::vector<Colour> table_;
    std::size_t first_red_ = 0;
    std::size_t first_green_zero_ = 0;
};

} // namespace pea
