#include "doctest.h"

#include <set>

#include "archval/rng.hpp"

using archval::RngStream;

TEST_CASE("identical seed and path reproduce the sample sequence") {
    RngStream a = RngStream(42).child(3).child("payload").child(7);
    RngStream b = RngStream(42).child(3).child("payload").child(7);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("a differing final path element diverges within the first draws") {
    RngStream a = RngStream(42).child(3).child(0);
    RngStream b = RngStream(42).child(3).child(1);
    bool differs = false;
    for (int i = 0; i < 10 && !differs; ++i) {
        differs = a.next_u64() != b.next_u64();
    }
    CHECK(differs);
}

TEST_CASE("different seeds diverge") {
    RngStream a{1};
    RngStream b{2};
    CHECK(a.next_u64() != b.next_u64());
}

TEST_CASE("uniform draws stay strictly inside (0, 1)") {
    RngStream s = RngStream(7).child("u01");
    for (int i = 0; i < 100000; ++i) {
        const double u = s.next_u01();
        CHECK(u > 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("uniform draws have roughly uniform moments") {
    RngStream s{123};
    double sum = 0.0;
    double sum2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double u = s.next_u01();
        sum += u;
        sum2 += u * u;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(mean == doctest::Approx(0.5).epsilon(0.005));
    CHECK(var == doctest::Approx(1.0 / 12.0).epsilon(0.02));
}

TEST_CASE("label and path-order sensitivity") {
    // Same labels in a different order address different streams.
    RngStream a = RngStream(9).child("x").child("y");
    RngStream b = RngStream(9).child("y").child("x");
    CHECK(a.next_u64() != b.next_u64());

    std::set<std::uint64_t> keys;
    for (std::uint64_t e = 0; e < 1000; ++e) {
        keys.insert(RngStream(9).child(e).key());
    }
    CHECK(keys.size() == 1000);
}

TEST_CASE("forking does not disturb the parent stream") {
    RngStream parent{5};
    RngStream reference{5};
    (void)parent.child(1);
    (void)parent.child("fraction");
    CHECK(parent.next_u64() == reference.next_u64());
}
