#include <doctest.h>

#include <set>

#include "dcoc/rng.hpp"
#include "dcoc/vertex_set.hpp"

using dcoc::SplitMix64;
using dcoc::VertexSet;

TEST_CASE("vertex set basics") {
    VertexSet v(70);
    CHECK(v.count() == 0);
    CHECK(v.empty());
    v.set(0);
    v.set(63);
    v.set(64);
    v.set(69);
    CHECK(v.count() == 4);
    CHECK(v.test(63));
    CHECK(!v.test(1));
    v.reset(63);
    CHECK(!v.test(63));
    CHECK(v.to_vector() == std::vector<int>{0, 64, 69});
    CHECK(v.first() == 0);
}

TEST_CASE("complement keeps tail bits clean") {
    VertexSet v(70);
    v.set(5);
    VertexSet c = ~v;
    CHECK(c.count() == 69);
    CHECK(!c.test(5));
    CHECK(c.test(69));
    CHECK((~c).count() == 1);
    CHECK(VertexSet::full(70).count() == 70);
    CHECK((~VertexSet::full(70)).empty());
}

TEST_CASE("set algebra agrees with std::set on random data") {
    SplitMix64 rng(2024);
    for (int iter = 0; iter < 50; ++iter) {
        const int n = 1 + static_cast<int>(rng.bounded(130));
        VertexSet a(n), b(n);
        std::set<int> sa, sb;
        for (int v = 0; v < n; ++v) {
            if (rng.chance(1, 2)) {
                a.set(v);
                sa.insert(v);
            }
            if (rng.chance(1, 3)) {
                b.set(v);
                sb.insert(v);
            }
        }
        std::set<int> s_or, s_and, s_diff;
        for (int v = 0; v < n; ++v) {
            bool ia = sa.count(v), ib = sb.count(v);
            if (ia || ib) s_or.insert(v);
            if (ia && ib) s_and.insert(v);
            if (ia && !ib) s_diff.insert(v);
        }
        CHECK((a | b).count() == static_cast<int>(s_or.size()));
        CHECK((a & b).count() == static_cast<int>(s_and.size()));
        CHECK((a - b).count() == static_cast<int>(s_diff.size()));
        CHECK(a.count_and(b) == static_cast<int>(s_and.size()));
        CHECK(a.intersects(b) == !s_and.empty());
        CHECK((a - b).is_subset_of(a));
        CHECK(a.is_subset_of(a | b));
    }
}
