#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "pea/bitset.hpp"

using namespace pea;

TEST_CASE("bitset operations agree with a reference set model") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        std::size_t width = 1 + rng() % 200;
        Bitset a(width), b(width);
        std::set<std::size_t> ra, rb;
        for (std::size_t i = 0; i < width; ++i) {
            if (rng() & 1) { a.set(i); ra.insert(i); }
            if (rng() & 1) { b.set(i); rb.insert(i); }
        }
        CHECK(a.count() == ra.size());
        Bitset u = a | b;
        Bitset i_ = a & b;
        Bitset d = a; d.subtract(b);
        std::set<std::size_t> ru, ri, rd;
        std::set_union(ra.begin(), ra.end(), rb.begin(), rb.end(), std::inserter(ru, ru.end()));
        std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(), std::inserter(ri, ri.end()));
        std::set_difference(ra.begin(), ra.end(), rb.begin(), rb.end(), std::inserter(rd, rd.end()));
        CHECK(u.count() == ru.size());
        CHECK(i_.count() == ri.size());
        CHECK(d.count() == rd.size());
        CHECK((~a).count() == width - ra.size());
        CHECK(a.subset_of(u));
        CHECK(i_.subset_of(a));
        std::vector<uint32_t> listed = a.to_vector();
        CHECK(listed.size() == ra.size());
        for (uint32_t x : listed) CHECK(ra.count(x) == 1);
        // complement round-trip and find_first
        CHECK(~(~a) == a);
        if (!ra.empty()) CHECK(a.find_first() == *ra.begin());
    }
}
