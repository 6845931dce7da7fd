#include <doctest.h>

#include <hyperseq/polynomial.hpp>

#include "testutil.hpp"

using namespace hyperseq;
using namespace hyperseq::testutil;

TEST_CASE("evaluation") {
    Polynomial f = poly({rat(-1), rat(0), rat(1)});  // x^2 - 1
    CHECK(f.eval(Rat(3)) == 8);

    Polynomial g = poly_from_roots(Rat(8), {rat(-9, 2), rat(-7, 2), rat(-5, 2)});
    CHECK(g.eval(Rat(1)) == 11 * 9 * 7);  // direct substitution

    CHECK(Polynomial().eval(Rat(5)) == 0);
}

TEST_CASE("arithmetic and deflation") {
    Polynomial f = poly({rat(2), rat(-3), rat(1)});  // (x-1)(x-2)
    CHECK(f.deflate(Rat(1)) == poly({rat(-2), rat(1)}));
    CHECK_THROWS_AS(f.deflate(Rat(5)), std::invalid_argument);
    CHECK((poly({rat(1), rat(1)}) * poly({rat(-1), rat(1)})) == poly({rat(-1), rat(0), rat(1)}));
    CHECK(poly({rat(1, 2), rat(3)}).primitive_integer_form() == poly({rat(1), rat(6)}));
}

TEST_CASE("rational_roots on the spec examples") {
    Polynomial g = poly_from_roots(Rat(8), {rat(-9, 2), rat(-7, 2), rat(-5, 2)});
    auto split = rational_roots(g);
    REQUIRE(split.has_value());
    CHECK(split->leading == 8);
    CHECK(split->roots == std::vector<Rat>{rat(-9, 2), rat(-7, 2), rat(-5, 2)});

    CHECK_FALSE(rational_roots(poly({rat(1), rat(0), rat(1)})).has_value());  // x^2 + 1

    auto split2 = rational_roots(poly({rat(2), rat(-3), rat(1)}));
    REQUIRE(split2.has_value());
    CHECK(split2->roots == std::vector<Rat>{rat(1), rat(2)});

    CHECK_THROWS_AS(rational_roots(Polynomial()), std::invalid_argument);
}

TEST_CASE("rational_roots recovers multiplicities and partial splits") {
    Polynomial f = poly_from_roots(rat(3, 7), {rat(1, 2), rat(1, 2), rat(-5)});
    auto split = rational_roots(f);
    REQUIRE(split.has_value());
    CHECK(split->roots == std::vector<Rat>{rat(-5), rat(1, 2), rat(1, 2)});

    // (x^2+1)(x-3) has a rational root but does not split.
    Polynomial g = poly({rat(1), rat(0), rat(1)}) * poly({rat(-3), rat(1)});
    CHECK_FALSE(rational_roots(g).has_value());

    // Zero roots are stripped first.
    auto split0 = rational_roots(poly({rat(0), rat(0), rat(1)}));
    REQUIRE(split0.has_value());
    CHECK(split0->roots == std::vector<Rat>{rat(0), rat(0)});
}

TEST_CASE("split form re-expands to the input") {
    std::mt19937 rng(20240904);
    std::uniform_int_distribution<int> deg_pick(1, 5);
    std::uniform_int_distribution<long> lead_pick(-6, 6);
    for (int i = 0; i < 200; ++i) {
        int d = deg_pick(rng);
        long lead_n = lead_pick(rng);
        if (lead_n == 0) lead_n = 1;
        std::vector<Rat> roots;
        std::uniform_int_distribution<long> root_num(-9, 9);
        std::uniform_int_distribution<long> root_den(1, 4);
        for (int k = 0; k < d; ++k) roots.push_back(make_rat(root_num(rng), root_den(rng)));
        Polynomial f = poly_from_roots(make_rat(lead_n, 1 + i % 3), roots);
        auto split = rational_roots(f);
        REQUIRE(split.has_value());
        CHECK(poly_from_roots(split->leading, split->roots) == f);
    }
}

TEST_CASE("integer_roots on the spec examples") {
    // 4x^2 + 16x - 84, with a brute scan as the oracle.
    Polynomial f = poly({rat(-84), rat(16), rat(4)});
    std::vector<Int> brute;
    for (long r = -100; r <= 100; ++r)
        if (f.eval(Rat(r)) == 0) brute.push_back(r);
    CHECK(brute == std::vector<Int>{-7, 3});
    CHECK(integer_roots(f) == brute);

    CHECK(integer_roots(poly({rat(1), rat(0), rat(1)})).empty());
    CHECK(integer_roots(poly({rat(0), rat(-2), rat(1)})) == std::vector<Int>{0, 2});
    CHECK_THROWS_AS(integer_roots(Polynomial()), std::invalid_argument);
}

TEST_CASE("integer roots are exact roots and a subset of rational roots") {
    std::mt19937 rng(20240905);
    std::uniform_int_distribution<int> deg_pick(1, 4);
    std::uniform_int_distribution<long> root_pick(-10, 10);
    for (int i = 0; i < 200; ++i) {
        std::vector<Rat> roots;
        for (int k = 0, d = deg_pick(rng); k < d; ++k) roots.push_back(Rat(root_pick(rng)));
        Polynomial f = poly_from_roots(rat(2, 3), roots);
        auto ir = integer_roots(f);
        for (const Int& r : ir) CHECK(f.eval(Rat(r)) == 0);
        auto split = rational_roots(f);
        REQUIRE(split.has_value());
        for (const Int& r : ir)
            CHECK(std::count(split->roots.begin(), split->roots.end(), Rat(r)) > 0);
        // Every distinct integer root shows up.
        for (const Rat& r : split->roots)
            if (is_integer(r)) CHECK(std::count(ir.begin(), ir.end(), num(r)) == 1);
    }
}
