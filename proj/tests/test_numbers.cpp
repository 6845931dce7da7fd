#include <doctest.h>

#include <hyperseq/numbers.hpp>
#include <hyperseq/primes.hpp>

#include "testutil.hpp"

using namespace hyperseq;
using namespace hyperseq::testutil;

TEST_CASE("padic_valuation on the spec examples") {
    CHECK(padic_valuation(Rat(18), Int(3)) == Valuation::of(2));
    CHECK(padic_valuation(make_rat(2, 15), Int(5)) == Valuation::of(-1));
    CHECK(padic_valuation(Rat(0), Int(7)) == Valuation::infinity());
    CHECK_THROWS_AS(padic_valuation(Rat(18), Int(6)), std::invalid_argument);
}

TEST_CASE("residue map on the spec examples") {
    CHECK(residue(make_rat(-11, 2), Int(17)).value == 3);
    CHECK(residue(Rat(3), Int(7)).value == 3);

    // Independent oracle: the inverse of 2 mod 7 by exhaustive search.
    long inv2 = -1;
    for (long y = 1; y < 7; ++y)
        if (2 * y % 7 == 1) inv2 = y;
    CHECK(inv2 == 4);
    CHECK(residue(make_rat(1, 2), Int(7)).value == inv2);

    CHECK_THROWS_AS(residue(make_rat(1, 7), Int(7)), NotInLocalRingError);
    CHECK_THROWS_AS(residue(Rat(1), Int(10)), std::invalid_argument);
}

TEST_CASE("valuation is additive and ultrametric") {
    std::mt19937 rng(20240901);
    std::uniform_int_distribution<long> pick(-40, 40);
    std::uniform_int_distribution<long> den(1, 30);
    std::vector<Int> primes;
    for (long p = 2; p <= 1000; ++p)
        if (trial_prime(p)) primes.push_back(p);
    std::uniform_int_distribution<std::size_t> prime_pick(0, primes.size() - 1);

    for (int i = 0; i < 500; ++i) {
        Rat x = make_rat(pick(rng), den(rng));
        Rat y = make_rat(pick(rng), den(rng));
        const Int& p = primes[prime_pick(rng)];
        Valuation vx = padic_valuation(x, p), vy = padic_valuation(y, p);
        Valuation vxy = padic_valuation(x * y, p);
        if (vx.infinite || vy.infinite)
            CHECK(vxy.infinite);
        else
            CHECK(vxy == Valuation::of(vx.value + vy.value));
        Valuation vsum = padic_valuation(x + y, p);
        if (!vx.infinite && !vy.infinite && !vsum.infinite)
            CHECK(vsum.value >= std::min(vx.value, vy.value));
    }
}

TEST_CASE("residue is a ring homomorphism") {
    std::mt19937 rng(20240902);
    std::uniform_int_distribution<long> pick(-50, 50);
    std::uniform_int_distribution<long> den(1, 40);
    std::vector<Int> primes;
    for (long p = 2; p <= 500; ++p)
        if (trial_prime(p)) primes.push_back(p);
    std::uniform_int_distribution<std::size_t> prime_pick(0, primes.size() - 1);

    int used = 0;
    for (int i = 0; used < 500; ++i) {
        REQUIRE(i < 100000);
        Rat x = make_rat(pick(rng), den(rng));
        Rat y = make_rat(pick(rng), den(rng));
        const Int& p = primes[prime_pick(rng)];
        if (padic_valuation(x, p).value < 0 || padic_valuation(y, p).value < 0) continue;
        ++used;
        CHECK(residue(x * y, p).value == residue(x, p).value * residue(y, p).value % p);
        CHECK(residue(x + y, p).value == (residue(x, p).value + residue(y, p).value) % p);
    }
}

TEST_CASE("deterministic primality on known composites and primes") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(3)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(561)));   // Carmichael
    CHECK_FALSE(is_prime(Int(2047)));  // strong pseudoprime base 2
    CHECK(is_prime(Int("2305843009213693951")));  // 2^61 - 1
    CHECK_FALSE(is_prime(Int("2305843009213693953")));
    for (long n = 2; n < 2000; ++n) CHECK(is_prime(Int(n)) == trial_prime(n));
    CHECK_THROWS_AS(is_prime(Int(1) << 63), CapabilityError);
}

TEST_CASE("next_prime_in_progression on the spec examples") {
    CHECK(next_prime_in_progression(Int(17), Int(2)) == 19);
    CHECK(next_prime_in_progression(Int(1), Int(1)) == 2);

    // Independent oracle: sieve the primes congruent to 1 mod 4.
    long expected = -1;
    for (long n = 14; expected < 0; ++n)
        if (n % 4 == 1 && trial_prime(n)) expected = n;
    CHECK(expected == 17);
    CHECK(next_prime_in_progression(Int(13), Int(4)) == expected);
}

TEST_CASE("next_prime_in_progression returns the first qualifying prime") {
    std::mt19937 rng(20240903);
    std::uniform_int_distribution<long> lower_pick(0, 3000);
    std::uniform_int_distribution<long> b_pick(1, 12);
    for (int i = 0; i < 300; ++i) {
        long lower = lower_pick(rng);
        long b = b_pick(rng);
        Int q = next_prime_in_progression(Int(lower), Int(b));
        CHECK(q > lower);
        CHECK(q % b == 1 % b);
        CHECK(is_prime(q));
        for (long m = lower + 1; m < q; ++m)
            CHECK((!trial_prime(m) || (b > 1 && m % b != 1)));
    }
}

TEST_CASE("factorization and divisors") {
    auto f = factorize(Int(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<Int, int>{2, 3});
    CHECK(f[1] == std::pair<Int, int>{3, 2});
    CHECK(f[2] == std::pair<Int, int>{5, 1});
    CHECK(divisors(Int(12)) == std::vector<Int>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(Int(1)) == std::vector<Int>{1});
    // Semiprime beyond the trial-division range.
    Int big = Int(1000003) * Int(1000033);
    auto bf = factorize(big);
    REQUIRE(bf.size() == 2);
    CHECK(bf[0].first == 1000003);
    CHECK(bf[1].first == 1000033);
}
